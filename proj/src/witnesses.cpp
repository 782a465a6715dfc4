#include "homalg/witnesses.hpp"

#include <algorithm>

#include "homalg/errors.hpp"
#include "homalg/hom_corings.hpp"

namespace homalg::witnesses {

ModuleWitness regular(const HomBialgebra& h) {
  ModuleWitness m(h.alpha());
  m.right_action = h.algebra().mult();
  m.right_coaction = h.coalgebra().comult();
  return m;
}

ModuleWitness regular_action_trivial_coaction(const HomBialgebra& h) {
  const std::size_t n = h.dim();
  ModuleWitness m(h.alpha());
  m.right_action = h.algebra().mult();
  m.right_coaction = tabulate({n}, {n, n}, h.field(), [&](const Tensor& x) {
    return x.on(0, h.algebra().a(-1)).on(1, h.algebra().eta());
  });
  return m;
}

ModuleWitness trivial_action_regular_coaction(const HomBialgebra& h) {
  const std::size_t n = h.dim();
  ModuleWitness m(h.alpha());
  m.right_action = tabulate({n, n}, {n}, h.field(), [&](const Tensor& x) {
    return x.on(1, h.coalgebra().eps()).on(0, h.algebra().a());
  });
  m.right_coaction = h.coalgebra().comult();
  return m;
}

ModuleWitness trivial(const HomBialgebra& h) {
  ModuleWitness m(LinearMap::identity(1, h.field()));
  m.right_action = h.coalgebra().counit();
  m.right_coaction = LinearMap::from_columns(h.dim(), {Vector(h.algebra().unit().entries())},
                                             h.field());
  return m;
}

namespace {

LinearMap block_sum(const LinearMap& a, const LinearMap& b) {
  LinearMap out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

/// Sums a structure map whose module leg sits at the given end of the
/// input (M⊗X or X⊗M) into the direct sum, where X has dimension x.
LinearMap sum_action(const LinearMap& a, std::size_t na, const LinearMap& b, std::size_t nb,
                     std::size_t x, bool module_first) {
  const std::size_t n = na + nb;
  LinearMap out(n, n * x, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < x; ++k) {
      const bool left = i < na;
      const LinearMap& src = left ? a : b;
      const std::size_t li = left ? i : i - na, ln = left ? na : nb, off = left ? 0 : na;
      const std::size_t src_col = module_first ? li * x + k : k * ln + li;
      const std::size_t dst_col = module_first ? i * x + k : k * n + i;
      for (std::size_t r = 0; r < ln; ++r) out(off + r, dst_col) = src(r, src_col);
    }
  return out;
}

LinearMap sum_coaction(const LinearMap& a, std::size_t na, const LinearMap& b, std::size_t nb,
                       std::size_t x, bool module_first) {
  return sum_action(a.transpose(), na, b.transpose(), nb, x, module_first).transpose();
}

}  // namespace

ModuleWitness direct_sum(const ModuleWitness& a, const ModuleWitness& b) {
  const std::size_t na = a.dim(), nb = b.dim();
  ModuleWitness out(block_sum(a.mu, b.mu));
  if (a.right_action && b.right_action)
    out.right_action =
        sum_action(*a.right_action, na, *b.right_action, nb, a.right_action->cols() / na, true);
  if (a.left_action && b.left_action)
    out.left_action =
        sum_action(*a.left_action, na, *b.left_action, nb, a.left_action->cols() / na, false);
  if (a.right_coaction && b.right_coaction)
    out.right_coaction = sum_coaction(*a.right_coaction, na, *b.right_coaction, nb,
                                      a.right_coaction->rows() / na, true);
  if (a.left_coaction && b.left_coaction)
    out.left_coaction = sum_coaction(*a.left_coaction, na, *b.left_coaction, nb,
                                     a.left_coaction->rows() / na, false);
  return out;
}

ModuleWitness transport(const ModuleWitness& m, const LinearMap& t) {
  const LinearMap t_inv = invert(t);
  const std::size_t n = m.dim();
  const Field f = m.field();
  ModuleWitness out(t * m.mu * t_inv);
  auto id = [&](std::size_t k) { return LinearMap::identity(k, f); };
  if (m.right_action) out.right_action = t * *m.right_action * kron(t_inv, id(m.right_action->cols() / n));
  if (m.left_action) out.left_action = t * *m.left_action * kron(id(m.left_action->cols() / n), t_inv);
  if (m.right_coaction)
    out.right_coaction = kron(t, id(m.right_coaction->rows() / n)) * *m.right_coaction * t_inv;
  if (m.left_coaction)
    out.left_coaction = kron(id(m.left_coaction->rows() / n), t) * *m.left_coaction * t_inv;
  return out;
}

ModuleWitness with_coaction_of(const ModuleWitness& m, const ModuleWitness& other) {
  if (m.mu != other.mu) throw PreconditionFailed("witnesses have different automorphisms");
  ModuleWitness out = m;
  out.right_coaction = other.right_coaction;
  out.left_coaction = other.left_coaction;
  return out;
}

LinearMap random_centralizer(const LinearMap& mu, std::mt19937_64& rng) {
  const std::size_t n = mu.rows();
  const Field f = mu.field();
  const ConstrainedMaps c = solve_map_constraints(
      n, n, f, [&](const LinearMap& t) { return (t * mu - mu * t).entries(); });
  std::uniform_int_distribution<long> coeff(-2, 2);
  for (int attempt = 0; attempt < 100; ++attempt) {
    LinearMap t(n, n, f);
    for (const auto& b : c.basis) t += b * f.from_int(coeff(rng));
    if (rank(t) == n) return t;
  }
  throw PreconditionFailed("no invertible map commuting with μ found");
}

LinearMap random_invertible(std::size_t n, Field field, std::mt19937_64& rng) {
  // A signed permutation followed by n elementary row operations, so the
  // inverse stays integral and sparse.
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_int_distribution<int> sign(0, 1);
  std::uniform_int_distribution<long> coeff(-2, 2);
  std::uniform_int_distribution<std::size_t> index(0, n - 1);
  LinearMap t(n, n, field);
  for (std::size_t i = 0; i < n; ++i) t(perm[i], i) = field.from_int(sign(rng) ? 1 : -1);
  if (n < 2) return t;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = index(rng), j = index(rng);
    const long c = coeff(rng);
    if (i == j || c == 0) continue;
    for (std::size_t col = 0; col < n; ++col) t(i, col) += t(j, col) * field.from_int(c);
  }
  return t;
}

ModuleWitness scrambled_coaction(const ModuleWitness& m, std::mt19937_64& rng) {
  return with_coaction_of(m, transport(m, random_centralizer(m.mu, rng)));
}

std::vector<ModuleWitness> random_family(const std::vector<ModuleWitness>& bases,
                                         std::uint64_t seed, FamilySizes sizes) {
  if (bases.empty()) throw PreconditionFailed("no base witnesses");
  std::mt19937_64 rng(seed);
  std::vector<ModuleWitness> out = bases;
  auto pick = [&](std::size_t i) -> const ModuleWitness& { return bases[i % bases.size()]; };
  for (std::size_t i = 0; i < sizes.transported; ++i) {
    const ModuleWitness& b = pick(i);
    out.push_back(transport(b, random_invertible(b.dim(), b.field(), rng)));
  }
  for (std::size_t i = 0; i < sizes.scrambled; ++i) out.push_back(scrambled_coaction(pick(i), rng));
  for (std::size_t i = 0; i < sizes.bumped; ++i) {
    const ModuleWitness& b = pick(i);
    std::uniform_int_distribution<std::size_t> pos(0, b.right_coaction->entries().size() - 1);
    out.push_back(bump_coaction(b, pos(rng)));
  }
  return out;
}

ModuleWitness bump_coaction(const ModuleWitness& m, std::size_t position) {
  if (!m.right_coaction) throw PreconditionFailed("witness has no right coaction");
  ModuleWitness out = m;
  auto& e = out.right_coaction->entries();
  e[position % e.size()] += m.field().one();
  return out;
}

}  // namespace homalg::witnesses
