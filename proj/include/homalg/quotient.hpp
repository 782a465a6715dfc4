#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "homalg/linear_map.hpp"

namespace homalg {

/// Sparse vector: (index, nonzero coefficient) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n, Field field);

/// Incremental reduced echelon form of a span of vectors in k^n. Every row
/// is 1 at its pivot and 0 at all other pivots, so testing a new vector
/// costs one pass over the pivots in its support.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t ambient_dim, Field field);

  /// Adds v to the span; returns true if it increased the rank.
  bool add(const SparseVector& v);
  bool add(const Vector& v) { return add(to_sparse(v)); }

  std::size_t ambient_dim() const { return n_; }
  std::size_t rank() const { return pivots_.size(); }
  Field field() const { return field_; }

  /// Reduced row echelon basis of the span, ordered by pivot, with the
  /// pivot columns in increasing order.
  std::pair<std::vector<SparseVector>, std::vector<std::size_t>> reduced_basis() const;

 private:
  std::size_t n_;
  Field field_;
  // row_of_[j] is the index in rows_ of the row with pivot j, or npos.
  std::vector<std::size_t> row_of_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  Vector work_;
};

/// The quotient k^n / R of a free space by the span R of relation vectors.
/// Coordinates in the quotient are the coefficients at the non-pivot
/// columns of R's reduced echelon basis, so the section sends the k-th
/// quotient basis vector to the k-th free ambient basis vector.
class QuotientSpace {
 public:
  QuotientSpace() = default;
  QuotientSpace(std::size_t ambient_dim, std::vector<SparseVector> rref_rows,
                std::vector<std::size_t> pivots, Field field);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return free_.size(); }
  Field field() const { return field_; }

  /// Reduced echelon basis of the relation span.
  const std::vector<SparseVector>& relations() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Ambient index of each quotient basis vector.
  const std::vector<std::size_t>& free_columns() const { return free_; }

  Vector project(const Vector& v) const;
  Vector project(const SparseVector& v) const;
  /// Image of the ambient basis vector e_j, as a sparse quotient vector.
  SparseVector project_basis(std::size_t j) const;
  Vector lift(const Vector& q) const;

  LinearMap projection() const;
  LinearMap section() const;

 private:
  std::size_t ambient_dim_ = 0;
  Field field_;
  std::vector<SparseVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> free_;
  // Position of an ambient index among the free columns, or npos.
  std::vector<std::size_t> free_pos_;
  std::vector<std::size_t> row_of_;
};

QuotientSpace build_quotient(std::size_t ambient_dim, const std::vector<Vector>& relations,
                             Field field = Field::rational());

/// Induces q_out ∘ flat ∘ s_in on quotients after asserting that flat sends
/// every relation of `in` into the relation span of `out`. Throws
/// NonDescendingMap otherwise.
LinearMap descend(const LinearMap& flat, const QuotientSpace& in, const QuotientSpace& out);

}  // namespace homalg
