#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "homalg/linear_map.hpp"
#include "homalg/quotient.hpp"

namespace homalg {

using Dims = std::vector<std::size_t>;

std::size_t product(const Dims& dims);

/// Flattens a multi-index lexicographically (last index fastest).
std::size_t flatten(const Dims& dims, const std::vector<std::size_t>& index);
std::vector<std::size_t> unflatten(const Dims& dims, std::size_t flat);

/// A linear map from a tensor product of legs to another, stored as sparse
/// columns so that it can be applied to a few legs of a large tensor without
/// forming identity Kronecker factors.
class LegMap {
 public:
  LegMap() = default;
  LegMap(const LinearMap& m, Dims in, Dims out);

  /// The quotient projection as a map from `in` (whose product is the
  /// ambient dimension) to a single leg.
  static LegMap projection(const QuotientSpace& q, Dims in);

  const Dims& in() const { return in_; }
  const Dims& out() const { return out_; }
  const SparseVector& column(std::size_t j) const { return cols_[j]; }
  Field field() const { return field_; }

 private:
  Dims in_, out_;
  Field field_;
  std::vector<SparseVector> cols_;
};

/// An element of V_1 ⊗ … ⊗ V_n in the lexicographic product basis, stored
/// sparsely because identities are checked on basis tensors.
class Tensor {
 public:
  Tensor() = default;
  Tensor(Dims dims, const Vector& data);
  Tensor(Dims dims, SparseVector entries, Field field);

  static Tensor basis(const Dims& dims, const std::vector<std::size_t>& index, Field field);
  static Tensor zero(const Dims& dims, Field field);

  const Dims& dims() const { return dims_; }
  std::size_t size() const { return product(dims_); }
  /// Dense coefficients.
  Vector data() const { return to_dense(entries_, size(), field_); }
  /// Nonzero coefficients sorted by flat index.
  const SparseVector& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  Field field() const { return field_; }
  std::size_t legs() const { return dims_.size(); }

  /// Applies f to the legs [leg, leg + f.in().size()), replacing them with
  /// f.out() legs.
  Tensor on(std::size_t leg, const LegMap& f) const;
  /// Output leg i is input leg perm[i].
  Tensor permuted(const std::vector<std::size_t>& perm) const;
  /// Reinterprets the same coefficients under new dims with equal product.
  Tensor reshaped(Dims dims) const;

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(const Scalar& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Scalar& s) { return a *= s; }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dims_ == b.dims_ && a.entries_ == b.entries_;
  }

 private:
  Dims dims_;
  Field field_;
  SparseVector entries_;
};

/// Builds the matrix of a linear map by evaluating fn on each basis tensor
/// of `in`; fn must return a tensor whose total dimension is product(out).
LinearMap tabulate(const Dims& in, const Dims& out, Field field,
                   const std::function<Tensor(const Tensor&)>& fn);

/// The swap V⊗W → W⊗V.
LinearMap flip_map(std::size_t v, std::size_t w, Field field);

}  // namespace homalg
