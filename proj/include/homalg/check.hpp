#pragma once

#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "homalg/tensor.hpp"

namespace homalg {

/// The first basis tuple on which an identity was seen to fail.
struct Failure {
  std::string identity;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

class CheckResult {
 public:
  static CheckResult pass() { return CheckResult(); }
  static CheckResult fail(Failure f) {
    CheckResult r;
    r.failure_ = std::move(f);
    return r;
  }
  static CheckResult fail(std::string identity) {
    return fail(Failure{std::move(identity), {}, {}, {}});
  }

  bool passed() const { return !failure_.has_value(); }
  explicit operator bool() const { return passed(); }
  const std::optional<Failure>& failure() const { return failure_; }
  /// Identity name of the failure, or empty when passed.
  std::string identity() const { return failure_ ? failure_->identity : std::string(); }

  /// Prefixes the failing identity with a context label.
  CheckResult within(const std::string& context) const;

 private:
  std::optional<Failure> failure_;
};

std::string describe(const CheckResult& r);

using TensorFn = std::function<Tensor(const Tensor&)>;

/// Compares lhs and rhs on every basis tensor of `in` (sufficient by
/// multilinearity) and reports the first mismatch.
CheckResult check_identity(const std::string& name, const Dims& in, Field field,
                           const TensorFn& lhs, const TensorFn& rhs);

/// Runs the checks in order and returns the first failure.
CheckResult first_failure(std::initializer_list<std::function<CheckResult()>> checks);

}  // namespace homalg
