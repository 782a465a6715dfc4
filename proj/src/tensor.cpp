#include "homalg/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "homalg/errors.hpp"

namespace homalg {

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t flatten(const Dims& dims, const std::vector<std::size_t>& index) {
  if (index.size() != dims.size()) throw ShapeMismatch("index rank differs from tensor rank");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (index[i] >= dims[i]) throw ShapeMismatch("index out of range");
    flat = flat * dims[i] + index[i];
  }
  return flat;
}

std::vector<std::size_t> unflatten(const Dims& dims, std::size_t flat) {
  std::vector<std::size_t> index(dims.size());
  for (std::size_t i = dims.size(); i-- > 0;) {
    index[i] = flat % dims[i];
    flat /= dims[i];
  }
  return index;
}

LegMap::LegMap(const LinearMap& m, Dims in, Dims out)
    : in_(std::move(in)), out_(std::move(out)), field_(m.field()) {
  if (product(in_) != m.cols() || product(out_) != m.rows())
    throw ShapeMismatch("map shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                        " does not match declared legs");
  cols_.resize(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) cols_[c].emplace_back(r, m(r, c));
}

LegMap LegMap::projection(const QuotientSpace& q, Dims in) {
  if (product(in) != q.ambient_dim()) throw ShapeMismatch("legs do not match quotient ambient");
  LegMap f;
  f.in_ = std::move(in);
  f.out_ = {q.dim()};
  f.field_ = q.field();
  f.cols_.resize(q.ambient_dim());
  for (std::size_t j = 0; j < q.ambient_dim(); ++j) f.cols_[j] = q.project_basis(j);
  return f;
}

namespace {

/// Sorts by index, sums repeated indices and drops zeros.
void normalize(SparseVector& v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i + 1;
    Scalar sum = std::move(v[i].second);
    for (; j < v.size() && v[j].first == v[i].first; ++j) sum += v[j].second;
    if (!sum.is_zero()) v[out++] = {v[i].first, std::move(sum)};
    i = j;
  }
  v.resize(out);
}

SparseVector merge(const SparseVector& a, const SparseVector& b, bool subtract) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Scalar s = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Tensor::Tensor(Dims dims, const Vector& data)
    : dims_(std::move(dims)), entries_(to_sparse(data)) {
  if (product(dims_) != data.size()) throw ShapeMismatch("tensor data length mismatch");
  field_ = data.empty() ? Field::rational() : data.front().field();
}

Tensor::Tensor(Dims dims, SparseVector entries, Field field)
    : dims_(std::move(dims)), field_(field), entries_(std::move(entries)) {
  normalize(entries_);
  if (!entries_.empty() && entries_.back().first >= product(dims_))
    throw ShapeMismatch("tensor entry out of range");
}

Tensor Tensor::basis(const Dims& dims, const std::vector<std::size_t>& index, Field field) {
  Tensor t = zero(dims, field);
  t.entries_.emplace_back(flatten(dims, index), field.one());
  return t;
}

Tensor Tensor::zero(const Dims& dims, Field field) {
  Tensor t;
  t.dims_ = dims;
  t.field_ = field;
  return t;
}

Tensor Tensor::on(std::size_t leg, const LegMap& f) const {
  const std::size_t n = f.in().size();
  if (leg + n > dims_.size()) throw ShapeMismatch("map applied past the last leg");
  for (std::size_t i = 0; i < n; ++i)
    if (dims_[leg + i] != f.in()[i]) throw ShapeMismatch("leg dimension mismatch");
  Dims out_dims(dims_.begin(), dims_.begin() + static_cast<std::ptrdiff_t>(leg));
  out_dims.insert(out_dims.end(), f.out().begin(), f.out().end());
  out_dims.insert(out_dims.end(), dims_.begin() + static_cast<std::ptrdiff_t>(leg + n), dims_.end());

  std::size_t post = 1;
  for (std::size_t i = leg + n; i < dims_.size(); ++i) post *= dims_[i];
  const std::size_t mid_in = product(f.in());
  const std::size_t mid_out = product(f.out());

  Tensor out = zero(out_dims, field_);
  for (const auto& [idx, x] : entries_) {
    const std::size_t p = idx % post;
    const std::size_t rest = idx / post;
    const std::size_t mid = rest % mid_in;
    const std::size_t pre = rest / mid_in;
    for (const auto& [r, c] : f.column(mid))
      out.entries_.emplace_back((pre * mid_out + r) * post + p, x * c);
  }
  normalize(out.entries_);
  return out;
}

Tensor Tensor::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != dims_.size()) throw ShapeMismatch("permutation rank mismatch");
  Dims out_dims(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out_dims[i] = dims_[perm[i]];
  Tensor out = zero(out_dims, field_);
  std::vector<std::size_t> out_index(perm.size());
  out.entries_.reserve(entries_.size());
  for (const auto& [idx, x] : entries_) {
    const auto in_index = unflatten(dims_, idx);
    for (std::size_t i = 0; i < perm.size(); ++i) out_index[i] = in_index[perm[i]];
    out.entries_.emplace_back(flatten(out_dims, out_index), x);
  }
  normalize(out.entries_);
  return out;
}

Tensor Tensor::reshaped(Dims dims) const {
  if (product(dims) != product(dims_)) throw ShapeMismatch("reshape changes total dimension");
  Tensor out = *this;
  out.dims_ = std::move(dims);
  return out;
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (dims_ != other.dims_) throw ShapeMismatch("sum of tensors of different shape");
  entries_ = merge(entries_, other.entries_, false);
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (dims_ != other.dims_) throw ShapeMismatch("difference of tensors of different shape");
  entries_ = merge(entries_, other.entries_, true);
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= s;
  return *this;
}

LinearMap tabulate(const Dims& in, const Dims& out, Field field,
                   const std::function<Tensor(const Tensor&)>& fn) {
  const std::size_t n_in = product(in);
  const std::size_t n_out = product(out);
  LinearMap m(n_out, n_in, field);
  for (std::size_t j = 0; j < n_in; ++j) {
    const Tensor image = fn(Tensor::basis(in, unflatten(in, j), field));
    if (image.size() != n_out) throw ShapeMismatch("tabulated image has wrong dimension");
    for (const auto& [r, c] : image.entries()) m(r, j) = c;
  }
  return m;
}

LinearMap flip_map(std::size_t v, std::size_t w, Field field) {
  LinearMap m(w * v, v * w, field);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < w; ++j) m(j * v + i, i * w + j) = field.one();
  return m;
}

}  // namespace homalg
