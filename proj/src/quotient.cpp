#include "homalg/quotient.hpp"

#include <algorithm>
#include <limits>

#include "homalg/errors.hpp"

namespace homalg {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n, Field field) {
  Vector out(n, field.zero());
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

SpanBuilder::SpanBuilder(std::size_t ambient_dim, Field field)
    : n_(ambient_dim), field_(field), row_of_(ambient_dim, npos), work_(ambient_dim, field.zero()) {}

bool SpanBuilder::add(const SparseVector& v) {
  if (v.empty()) return false;
  std::vector<std::size_t> touched;
  for (const auto& [i, c] : v) {
    if (i >= n_) throw ShapeMismatch("relation index outside ambient space");
    if (c.field() != field_) throw FieldMismatch("relation over the wrong field");
    work_[i] = c;
    touched.push_back(i);
  }
  // Rows vanish at every other pivot, so only the pivots in v's own support
  // need clearing and fill-in lands on free columns only.
  for (const auto& entry : v) {
    const std::size_t r = row_of_[entry.first];
    if (r == npos || work_[entry.first].is_zero()) continue;
    const Scalar factor = work_[entry.first];
    for (const auto& [k, c] : rows_[r]) {
      if (work_[k].is_zero()) touched.push_back(k);
      work_[k] -= factor * c;
    }
  }
  std::sort(touched.begin(), touched.end());
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  std::size_t first = npos;
  for (auto j : touched)
    if (!work_[j].is_zero()) {
      first = j;
      break;
    }
  if (first == npos) {
    for (auto j : touched) work_[j] = field_.zero();
    return false;
  }
  const Scalar inv = work_[first].inverse();
  SparseVector row;
  for (auto j : touched) {
    if (!work_[j].is_zero()) row.emplace_back(j, work_[j] * inv);
    work_[j] = field_.zero();
  }
  // Clear the new pivot column from the existing rows.
  for (auto& other : rows_) {
    auto it = std::lower_bound(other.begin(), other.end(), first,
                               [](const auto& e, std::size_t j) { return e.first < j; });
    if (it == other.end() || it->first != first) continue;
    const Scalar factor = it->second;
    SparseVector merged;
    merged.reserve(other.size() + row.size());
    auto a = other.begin(), b = row.begin();
    while (a != other.end() || b != row.end()) {
      if (b == row.end() || (a != other.end() && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == other.end() || b->first < a->first) {
        merged.emplace_back(b->first, -(factor * b->second));
        ++b;
      } else {
        Scalar c = a->second - factor * b->second;
        if (!c.is_zero()) merged.emplace_back(a->first, std::move(c));
        ++a;
        ++b;
      }
    }
    other = std::move(merged);
  }
  row_of_[first] = rows_.size();
  rows_.push_back(std::move(row));
  pivots_.push_back(first);
  return true;
}

// Each pivot was the leading index of a span vector when chosen, so the
// pivot set is that of the echelon form; rows that are 1 at their pivot and
// 0 at the others are then exactly the reduced echelon rows.
std::pair<std::vector<SparseVector>, std::vector<std::size_t>> SpanBuilder::reduced_basis() const {
  std::vector<std::size_t> pivots = pivots_;
  std::sort(pivots.begin(), pivots.end());
  std::vector<SparseVector> reduced;
  reduced.reserve(pivots.size());
  for (auto p : pivots) reduced.push_back(rows_[row_of_[p]]);
  return {std::move(reduced), std::move(pivots)};
}

QuotientSpace::QuotientSpace(std::size_t ambient_dim, std::vector<SparseVector> rref_rows,
                             std::vector<std::size_t> pivots, Field field)
    : ambient_dim_(ambient_dim),
      field_(field),
      rows_(std::move(rref_rows)),
      pivots_(std::move(pivots)),
      free_pos_(ambient_dim, npos),
      row_of_(ambient_dim, npos) {
  for (std::size_t i = 0; i < pivots_.size(); ++i) row_of_[pivots_[i]] = i;
  for (std::size_t j = 0; j < ambient_dim_; ++j) {
    if (row_of_[j] != npos) continue;
    free_pos_[j] = free_.size();
    free_.push_back(j);
  }
}

// With R in reduced echelon form, v ≡ v − Σ v[p_i] r_i and the right side
// vanishes on every pivot, so its free coordinates are the class of v.
Vector QuotientSpace::project(const Vector& v) const {
  if (v.size() != ambient_dim_) throw ShapeMismatch("vector outside the ambient space");
  Vector out(free_.size(), field_.zero());
  for (std::size_t k = 0; k < free_.size(); ++k) out[k] = v[free_[k]];
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar& vp = v[pivots_[i]];
    if (vp.is_zero()) continue;
    for (const auto& [j, c] : rows_[i])
      if (free_pos_[j] != npos) out[free_pos_[j]] -= vp * c;
  }
  return out;
}

Vector QuotientSpace::project(const SparseVector& v) const {
  Vector out(free_.size(), field_.zero());
  for (const auto& [j, x] : v) {
    if (j >= ambient_dim_) throw ShapeMismatch("vector outside the ambient space");
    if (free_pos_[j] != npos) {
      out[free_pos_[j]] += x;
      continue;
    }
    for (const auto& [k, c] : rows_[row_of_[j]])
      if (free_pos_[k] != npos) out[free_pos_[k]] -= x * c;
  }
  return out;
}

SparseVector QuotientSpace::project_basis(std::size_t j) const {
  if (free_pos_[j] != npos) return {{free_pos_[j], field_.one()}};
  SparseVector out;
  for (const auto& [k, c] : rows_[row_of_[j]])
    if (free_pos_[k] != npos) out.emplace_back(free_pos_[k], -c);
  return out;
}

Vector QuotientSpace::lift(const Vector& q) const {
  if (q.size() != free_.size()) throw ShapeMismatch("vector outside the quotient");
  Vector out(ambient_dim_, field_.zero());
  for (std::size_t k = 0; k < free_.size(); ++k) out[free_[k]] = q[k];
  return out;
}

LinearMap QuotientSpace::projection() const {
  LinearMap p(free_.size(), ambient_dim_, field_);
  for (std::size_t j = 0; j < ambient_dim_; ++j)
    for (const auto& [k, c] : project_basis(j)) p(k, j) = c;
  return p;
}

LinearMap QuotientSpace::section() const {
  LinearMap s(ambient_dim_, free_.size(), field_);
  for (std::size_t k = 0; k < free_.size(); ++k) s(free_[k], k) = field_.one();
  return s;
}

QuotientSpace build_quotient(std::size_t ambient_dim, const std::vector<Vector>& relations,
                             Field field) {
  SpanBuilder span(ambient_dim, field);
  for (const auto& r : relations) {
    if (r.size() != ambient_dim) throw ShapeMismatch("relation length differs from ambient");
    span.add(r);
  }
  auto [rows, pivots] = span.reduced_basis();
  return QuotientSpace(ambient_dim, std::move(rows), std::move(pivots), field);
}

LinearMap descend(const LinearMap& flat, const QuotientSpace& in, const QuotientSpace& out) {
  if (flat.cols() != in.ambient_dim() || flat.rows() != out.ambient_dim())
    throw ShapeMismatch("flat map does not match the quotients' ambient spaces");
  for (const auto& r : in.relations()) {
    const Vector image = flat.apply(to_dense(r, in.ambient_dim(), in.field()));
    if (!is_zero(out.project(image))) throw NonDescendingMap("map does not respect the relations");
  }
  LinearMap result(out.dim(), in.dim(), in.field());
  for (std::size_t k = 0; k < in.dim(); ++k)
    result.set_column(k, out.project(flat.column(in.free_columns()[k])));
  return result;
}

}  // namespace homalg
