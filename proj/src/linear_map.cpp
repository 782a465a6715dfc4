#include "homalg/linear_map.hpp"

#include <ostream>
#include <utility>

#include "homalg/errors.hpp"

namespace homalg {

LinearMap::LinearMap(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, field.zero()) {}

LinearMap LinearMap::identity(std::size_t n, Field field) {
  LinearMap m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

LinearMap LinearMap::from_entries(std::size_t rows, std::size_t cols,
                                  std::vector<Scalar> entries, Field field) {
  if (entries.size() != rows * cols) {
    throw ShapeMismatch("expected " + std::to_string(rows * cols) + " entries, got " +
                        std::to_string(entries.size()));
  }
  for (const auto& e : entries) {
    if (e.field() != field) throw FieldMismatch("entry outside " + field.descriptor());
  }
  LinearMap m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.field_ = field;
  m.data_ = std::move(entries);
  return m;
}

LinearMap LinearMap::from_int_rows(const std::vector<std::vector<long>>& rows, Field field) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  LinearMap m(r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ShapeMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = field.from_int(rows[i][j]);
  }
  return m;
}

LinearMap LinearMap::from_columns(std::size_t rows, const std::vector<Vector>& columns,
                                  Field field) {
  LinearMap m(rows, columns.size(), field);
  for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
  return m;
}

Vector LinearMap::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void LinearMap::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw ShapeMismatch("column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector LinearMap::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector LinearMap::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeMismatch("vector length does not match map");
  Vector out(rows_, field_.zero());
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

LinearMap LinearMap::transpose() const {
  LinearMap t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool LinearMap::is_zero() const {
  for (const auto& e : data_)
    if (!e.is_zero()) return false;
  return true;
}

bool LinearMap::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (r == c ? !e.is_one() : !e.is_zero()) return false;
    }
  return true;
}

LinearMap& LinearMap::operator+=(const LinearMap& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatch("sum of maps");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!other.data_[i].is_zero()) data_[i] += other.data_[i];
  return *this;
}

LinearMap& LinearMap::operator-=(const LinearMap& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatch("difference of maps");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!other.data_[i].is_zero()) data_[i] -= other.data_[i];
  return *this;
}

LinearMap& LinearMap::operator*=(const Scalar& s) {
  for (auto& e : data_)
    if (!e.is_zero()) e *= s;
  return *this;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeMismatch("cannot compose " + std::to_string(a.rows_) + "x" +
                        std::to_string(a.cols_) + " with " + std::to_string(b.rows_) + "x" +
                        std::to_string(b.cols_));
  }
  LinearMap out(a.rows_, b.cols_, a.field_);
  for (std::size_t k = 0; k < a.cols_; ++k) {
    for (std::size_t c = 0; c < b.cols_; ++c) {
      const Scalar& bkc = b(k, c);
      if (bkc.is_zero()) continue;
      for (std::size_t r = 0; r < a.rows_; ++r) {
        const Scalar& ark = a(r, k);
        if (!ark.is_zero()) out(r, c) += ark * bkc;
      }
    }
  }
  return out;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::ostream& operator<<(std::ostream& os, const LinearMap& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : ", [");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c == 0 ? "" : ", ") << m(r, c);
    os << "]";
  }
  return os << "]";
}

LinearMap kron(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& bkl = b(k, l);
          if (!bkl.is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * bkl;
        }
    }
  return out;
}

RowReduction row_reduce(const LinearMap& m) {
  LinearMap r = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < r.cols() && lead_row < r.rows(); ++c) {
    std::size_t pivot_row = lead_row;
    while (pivot_row < r.rows() && r(pivot_row, c).is_zero()) ++pivot_row;
    if (pivot_row == r.rows()) continue;
    if (pivot_row != lead_row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot_row, j), r(lead_row, j));
    }
    const Scalar inv = r(lead_row, c).inverse();
    for (std::size_t j = c; j < r.cols(); ++j)
      if (!r(lead_row, j).is_zero()) r(lead_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == lead_row || r(i, c).is_zero()) continue;
      const Scalar factor = r(i, c);
      for (std::size_t j = c; j < r.cols(); ++j)
        if (!r(lead_row, j).is_zero()) r(i, j) -= factor * r(lead_row, j);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const LinearMap& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel_basis(const LinearMap& m) {
  const RowReduction rr = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), m.field().zero());
    v[free] = m.field().one();
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearMap invert(const LinearMap& m) {
  if (!m.is_square()) throw SingularMap("non-square map has no inverse");
  const std::size_t n = m.rows();
  LinearMap aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  const RowReduction rr = row_reduce(aug);
  if (rr.pivots.size() < n || rr.pivots[n - 1] != n - 1) {
    throw SingularMap("map of rank < " + std::to_string(n) + " is not invertible");
  }
  LinearMap inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rr.reduced(i, n + j);
  return inv;
}

bool is_zero(const Vector& v) {
  for (const auto& e : v)
    if (!e.is_zero()) return false;
  return true;
}

Vector zero_vector(std::size_t n, Field field) { return Vector(n, field.zero()); }

}  // namespace homalg
