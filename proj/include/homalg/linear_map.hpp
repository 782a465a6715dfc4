#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "homalg/scalar.hpp"

namespace homalg {

using Vector = std::vector<Scalar>;

/// A k-linear map between finite-dimensional spaces with fixed bases, stored
/// densely. Entry (r, c) is the coefficient of output basis vector r in the
/// image of input basis vector c.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(std::size_t rows, std::size_t cols, Field field);

  static LinearMap identity(std::size_t n, Field field);
  /// Builds a map from row-major entries; shape must match.
  static LinearMap from_entries(std::size_t rows, std::size_t cols,
                                std::vector<Scalar> entries, Field field);
  static LinearMap from_int_rows(const std::vector<std::vector<long>>& rows,
                                 Field field = Field::rational());
  /// The map whose columns are the given vectors (each of length rows).
  static LinearMap from_columns(std::size_t rows, const std::vector<Vector>& columns,
                                Field field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<Scalar>& entries() const { return data_; }
  std::vector<Scalar>& entries() { return data_; }

  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  Vector row(std::size_t r) const;

  Vector apply(const Vector& v) const;
  LinearMap transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  LinearMap& operator+=(const LinearMap& other);
  LinearMap& operator-=(const LinearMap& other);
  LinearMap& operator*=(const Scalar& s);

  friend LinearMap operator+(LinearMap a, const LinearMap& b) { return a += b; }
  friend LinearMap operator-(LinearMap a, const LinearMap& b) { return a -= b; }
  friend LinearMap operator*(LinearMap a, const Scalar& s) { return a *= s; }
  /// Composition: (a * b)(v) = a(b(v)).
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap& a, const LinearMap& b);
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const LinearMap& m);

/// Kronecker product a ⊗ b with the lexicographic product basis
/// (i, j) ↦ i * dim_b + j on both sides.
LinearMap kron(const LinearMap& a, const LinearMap& b);

struct RowReduction {
  LinearMap reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivots are listed in increasing order.
RowReduction row_reduce(const LinearMap& m);

std::size_t rank(const LinearMap& m);

/// A basis of {v : m v = 0}, one vector per free column of the RREF, in
/// increasing order of that column. Each basis vector is 1 at its own free
/// column and 0 at every other free column.
std::vector<Vector> kernel_basis(const LinearMap& m);

/// Throws SingularMap when m is not square and invertible.
LinearMap invert(const LinearMap& m);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n, Field field);

}  // namespace homalg
