#include "homalg/check.hpp"

#include <sstream>

#include "homalg/errors.hpp"

namespace homalg {

CheckResult CheckResult::within(const std::string& context) const {
  if (passed()) return *this;
  Failure f = *failure_;
  f.identity = context + ": " + f.identity;
  return fail(std::move(f));
}

namespace {
std::string render(const Vector& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}
}  // namespace

std::string describe(const CheckResult& r) {
  if (r.passed()) return "pass";
  const Failure& f = *r.failure();
  std::ostringstream os;
  os << "fail: " << f.identity;
  if (!f.indices.empty() || !f.lhs.empty()) {
    os << " at basis (";
    for (std::size_t i = 0; i < f.indices.size(); ++i) os << (i ? ", " : "") << f.indices[i];
    os << "): lhs " << render(f.lhs) << " rhs " << render(f.rhs);
  }
  return os.str();
}

CheckResult check_identity(const std::string& name, const Dims& in, Field field,
                           const TensorFn& lhs, const TensorFn& rhs) {
  const std::size_t n = product(in);
  for (std::size_t j = 0; j < n; ++j) {
    const auto index = unflatten(in, j);
    const Tensor x = Tensor::basis(in, index, field);
    const Tensor l = lhs(x);
    const Tensor r = rhs(x);
    if (l.size() != r.size())
      throw ShapeMismatch(name + ": sides live in spaces of different dimension");
    if (l.entries() != r.entries()) return CheckResult::fail(Failure{name, index, l.data(), r.data()});
  }
  return CheckResult::pass();
}

CheckResult first_failure(std::initializer_list<std::function<CheckResult()>> checks) {
  for (const auto& c : checks) {
    CheckResult r = c();
    if (!r) return r;
  }
  return CheckResult::pass();
}

}  // namespace homalg
