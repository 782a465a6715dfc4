#include "homalg/hom_structures.hpp"

#include <algorithm>

#include "homalg/errors.hpp"

namespace homalg {

namespace {

void require_square(const LinearMap& m, std::size_t n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw ShapeMismatch(std::string(what) + " must be " + std::to_string(n) + "x" +
                        std::to_string(n));
}

void require_shape(const LinearMap& m, std::size_t rows, std::size_t cols, const char* what) {
  if (m.rows() != rows || m.cols() != cols)
    throw ShapeMismatch(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " + std::to_string(rows) + "x" +
                        std::to_string(cols));
}

}  // namespace

LinearMap power(const LinearMap& a, int k) {
  const LinearMap base = k < 0 ? invert(a) : a;
  LinearMap out = LinearMap::identity(a.rows(), a.field());
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = base * out;
  return out;
}

HomAlgebra::HomAlgebra(LinearMap mult, LinearMap unit, LinearMap alpha)
    : dim_(alpha.rows()), mult_(std::move(mult)), unit_(std::move(unit)), alpha_(std::move(alpha)) {
  require_square(alpha_, dim_, "alpha");
  require_shape(mult_, dim_, dim_ * dim_, "mult");
  require_shape(unit_, dim_, 1, "unit");
  alpha_inv_ = invert(alpha_);
}

HomAlgebra HomAlgebra::ground(Field field) {
  return HomAlgebra(LinearMap::identity(1, field), LinearMap::identity(1, field),
                    LinearMap::identity(1, field));
}

LegMap HomAlgebra::a(int k) const {
  if (k == 1) return LegMap(alpha_, {dim_}, {dim_});
  if (k == -1) return LegMap(alpha_inv_, {dim_}, {dim_});
  return LegMap(power(alpha_, k), {dim_}, {dim_});
}

HomCoalgebra::HomCoalgebra(LinearMap comult, LinearMap counit, LinearMap gamma)
    : dim_(gamma.rows()),
      comult_(std::move(comult)),
      counit_(std::move(counit)),
      gamma_(std::move(gamma)) {
  require_square(gamma_, dim_, "gamma");
  require_shape(comult_, dim_ * dim_, dim_, "comult");
  require_shape(counit_, 1, dim_, "counit");
  gamma_inv_ = invert(gamma_);
}

LegMap HomCoalgebra::g(int k) const {
  if (k == 1) return LegMap(gamma_, {dim_}, {dim_});
  if (k == -1) return LegMap(gamma_inv_, {dim_}, {dim_});
  return LegMap(power(gamma_, k), {dim_}, {dim_});
}

HomBialgebra::HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra)
    : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
  if (algebra_.dim() != coalgebra_.dim()) throw ShapeMismatch("algebra and coalgebra dims differ");
  if (algebra_.alpha() != coalgebra_.gamma())
    throw ShapeMismatch("bialgebra needs one automorphism for both structures");
}

HomHopfAlgebra::HomHopfAlgebra(HomBialgebra bialgebra, LinearMap antipode)
    : bialgebra_(std::move(bialgebra)), antipode_(std::move(antipode)) {
  require_square(antipode_, bialgebra_.dim(), "antipode");
}

ModuleWitness::ModuleWitness(LinearMap mu_) : mu(std::move(mu_)) {
  if (!mu.is_square()) throw ShapeMismatch("mu must be square");
  mu_inv = invert(mu);
}

LegMap ModuleWitness::m(int k) const {
  if (k == 1) return LegMap(mu, {dim()}, {dim()});
  if (k == -1) return LegMap(mu_inv, {dim()}, {dim()});
  return LegMap(power(mu, k), {dim()}, {dim()});
}

namespace {
std::size_t other_dim(std::size_t n, std::size_t flat) {
  if (n == 0 || flat % n != 0) throw ShapeMismatch("(co)action shape does not match module dim");
  return flat / n;
}
}  // namespace

LegMap ModuleWitness::right_act() const {
  if (!right_action) throw PreconditionFailed("witness has no right action");
  const std::size_t n = dim();
  if (right_action->rows() != n) throw ShapeMismatch("right action rows differ from module dim");
  return LegMap(*right_action, {n, other_dim(n, right_action->cols())}, {n});
}

LegMap ModuleWitness::left_act() const {
  if (!left_action) throw PreconditionFailed("witness has no left action");
  const std::size_t n = dim();
  if (left_action->rows() != n) throw ShapeMismatch("left action rows differ from module dim");
  return LegMap(*left_action, {other_dim(n, left_action->cols()), n}, {n});
}

LegMap ModuleWitness::right_coact() const {
  if (!right_coaction) throw PreconditionFailed("witness has no right coaction");
  const std::size_t n = dim();
  if (right_coaction->cols() != n) throw ShapeMismatch("right coaction cols differ from module dim");
  return LegMap(*right_coaction, {n}, {n, other_dim(n, right_coaction->rows())});
}

LegMap ModuleWitness::left_coact() const {
  if (!left_coaction) throw PreconditionFailed("witness has no left coaction");
  const std::size_t n = dim();
  if (left_coaction->cols() != n) throw ShapeMismatch("left coaction cols differ from module dim");
  return LegMap(*left_coaction, {n}, {other_dim(n, left_coaction->rows()), n});
}

// ---------------------------------------------------------------------------
// Axiom checkers. Identities are compared on basis tensors only, which
// suffices by multilinearity.

CheckResult check_hom_algebra(const HomAlgebra& a) {
  const std::size_t d = a.dim();
  const Field f = a.field();
  const LegMap m = a.m(), al = a.a(), eta = a.eta();
  return first_failure({
      [&] {
        return check_identity(
            "hom-associativity α(a)(bc)=(ab)α(c)", {d, d, d}, f,
            [&](const Tensor& x) { return x.on(1, m).on(0, al).on(0, m); },
            [&](const Tensor& x) { return x.on(0, m).on(1, al).on(0, m); });
      },
      [&] {
        return check_identity(
            "right unit a1=α(a)", {d}, f, [&](const Tensor& x) { return x.on(1, eta).on(0, m); },
            [&](const Tensor& x) { return x.on(0, al); });
      },
      [&] {
        return check_identity(
            "left unit 1a=α(a)", {d}, f, [&](const Tensor& x) { return x.on(0, eta).on(0, m); },
            [&](const Tensor& x) { return x.on(0, al); });
      },
      [&] {
        return check_identity(
            "multiplicativity α(ab)=α(a)α(b)", {d, d}, f,
            [&](const Tensor& x) { return x.on(0, m).on(0, al); },
            [&](const Tensor& x) { return x.on(0, al).on(1, al).on(0, m); });
      },
      [&] {
        return check_identity(
            "α(1)=1", {}, f, [&](const Tensor& x) { return x.on(0, eta).on(0, al); },
            [&](const Tensor& x) { return x.on(0, eta); });
      },
  });
}

CheckResult check_hom_coalgebra(const HomCoalgebra& c) {
  const std::size_t d = c.dim();
  const Field f = c.field();
  const LegMap delta = c.delta(), eps = c.eps(), g = c.g(), gi = c.g(-1);
  return first_failure({
      [&] {
        return check_identity(
            "hom-coassociativity γ⁻¹(c₁)⊗Δ(c₂)=Δ(c₁)⊗γ⁻¹(c₂)", {d}, f,
            [&](const Tensor& x) { return x.on(0, delta).on(1, delta).on(0, gi); },
            [&](const Tensor& x) { return x.on(0, delta).on(0, delta).on(2, gi); });
      },
      [&] {
        return check_identity(
            "left counit ε(c₁)c₂=γ⁻¹(c)", {d}, f,
            [&](const Tensor& x) { return x.on(0, delta).on(0, eps); },
            [&](const Tensor& x) { return x.on(0, gi); });
      },
      [&] {
        return check_identity(
            "right counit c₁ε(c₂)=γ⁻¹(c)", {d}, f,
            [&](const Tensor& x) { return x.on(0, delta).on(1, eps); },
            [&](const Tensor& x) { return x.on(0, gi); });
      },
      [&] {
        return check_identity(
            "comultiplicativity Δγ=(γ⊗γ)Δ", {d}, f,
            [&](const Tensor& x) { return x.on(0, g).on(0, delta); },
            [&](const Tensor& x) { return x.on(0, delta).on(0, g).on(1, g); });
      },
      [&] {
        return check_identity(
            "εγ=ε", {d}, f, [&](const Tensor& x) { return x.on(0, g).on(0, eps); },
            [&](const Tensor& x) { return x.on(0, eps); });
      },
  });
}

CheckResult check_hom_bialgebra(const HomBialgebra& b) {
  const std::size_t d = b.dim();
  const Field f = b.field();
  const LegMap m = b.algebra().m(), eta = b.algebra().eta();
  const LegMap delta = b.coalgebra().delta(), eps = b.coalgebra().eps();
  return first_failure({
      [&] { return check_hom_algebra(b.algebra()).within("algebra"); },
      [&] { return check_hom_coalgebra(b.coalgebra()).within("coalgebra"); },
      [&] {
        return check_identity(
            "Δ(hh')=Δ(h)Δ(h')", {d, d}, f,
            [&](const Tensor& x) { return x.on(0, m).on(0, delta); },
            [&](const Tensor& x) {
              return x.on(1, delta).on(0, delta).permuted({0, 2, 1, 3}).on(0, m).on(1, m);
            });
      },
      [&] {
        return check_identity(
            "Δ(1)=1⊗1", {}, f, [&](const Tensor& x) { return x.on(0, eta).on(0, delta); },
            [&](const Tensor& x) { return x.on(0, eta).on(1, eta); });
      },
      [&] {
        return check_identity(
            "ε(hh')=ε(h)ε(h')", {d, d}, f,
            [&](const Tensor& x) { return x.on(0, m).on(0, eps); },
            [&](const Tensor& x) { return x.on(0, eps).on(0, eps); });
      },
      [&] {
        return check_identity(
            "ε(1)=1", {}, f, [&](const Tensor& x) { return x.on(0, eta).on(0, eps); },
            [&](const Tensor& x) { return x; });
      },
  });
}

CheckResult check_antipode(const HomHopfAlgebra& h) {
  const std::size_t d = h.dim();
  const Field f = h.field();
  const LegMap m = h.algebra().m(), eta = h.algebra().eta(), al = h.algebra().a();
  const LegMap delta = h.coalgebra().delta(), eps = h.coalgebra().eps();
  const LegMap s = h.s();
  const TensorFn unit_counit = [&](const Tensor& x) { return x.on(0, eps).on(0, eta); };
  return first_failure({
      [&] {
        return check_identity(
            "S∗id=ηε", {d}, f,
            [&](const Tensor& x) { return x.on(0, delta).on(0, s).on(0, m); }, unit_counit);
      },
      [&] {
        return check_identity(
            "id∗S=ηε", {d}, f,
            [&](const Tensor& x) { return x.on(0, delta).on(1, s).on(0, m); }, unit_counit);
      },
      [&] {
        return check_identity(
            "Sα=αS", {d}, f, [&](const Tensor& x) { return x.on(0, al).on(0, s); },
            [&](const Tensor& x) { return x.on(0, s).on(0, al); });
      },
      [&] {
        return check_identity(
            "S(gh)=S(h)S(g)", {d, d}, f,
            [&](const Tensor& x) { return x.on(0, m).on(0, s); },
            [&](const Tensor& x) { return x.permuted({1, 0}).on(0, s).on(1, s).on(0, m); });
      },
      [&] {
        return check_identity(
            "S(1)=1", {}, f, [&](const Tensor& x) { return x.on(0, eta).on(0, s); },
            [&](const Tensor& x) { return x.on(0, eta); });
      },
      [&] {
        return check_identity(
            "Δ(S(h))=S(h₂)⊗S(h₁)", {d}, f,
            [&](const Tensor& x) { return x.on(0, s).on(0, delta); },
            [&](const Tensor& x) { return x.on(0, delta).permuted({1, 0}).on(0, s).on(1, s); });
      },
      [&] {
        return check_identity(
            "εS=ε", {d}, f, [&](const Tensor& x) { return x.on(0, s).on(0, eps); },
            [&](const Tensor& x) { return x.on(0, eps); });
      },
  });
}

CheckResult check_algebra_morphism(const AlgebraMorphism& phi) {
  const std::size_t ds = phi.source.dim(), dt = phi.target.dim();
  require_shape(phi.matrix, dt, ds, "morphism");
  const Field f = phi.source.field();
  const LegMap fm(phi.matrix, {ds}, {dt});
  const LegMap ms = phi.source.m(), mt = phi.target.m();
  return first_failure({
      [&] {
        return check_identity(
            "f(ab)=f(a)f(b)", {ds, ds}, f, [&](const Tensor& x) { return x.on(0, ms).on(0, fm); },
            [&](const Tensor& x) { return x.on(0, fm).on(1, fm).on(0, mt); });
      },
      [&] {
        return check_identity(
            "f(1)=1", {}, f,
            [&](const Tensor& x) { return x.on(0, phi.source.eta()).on(0, fm); },
            [&](const Tensor& x) { return x.on(0, phi.target.eta()); });
      },
      [&] {
        return check_identity(
            "fα=βf", {ds}, f,
            [&](const Tensor& x) { return x.on(0, phi.source.a()).on(0, fm); },
            [&](const Tensor& x) { return x.on(0, fm).on(0, phi.target.a()); });
      },
  });
}

CheckResult check_right_module(const HomAlgebra& a, const ModuleWitness& w) {
  const std::size_t d = a.dim(), n = w.dim();
  const Field f = a.field();
  const LegMap act = w.right_act();
  if (act.in()[1] != d) throw ShapeMismatch("right action does not match the algebra dim");
  const LegMap mu = w.m(), al = a.a(), m = a.m(), eta = a.eta();
  return first_failure({
      [&] {
        return check_identity(
            "μ(ma)=μ(m)α(a)", {n, d}, f, [&](const Tensor& x) { return x.on(0, act).on(0, mu); },
            [&](const Tensor& x) { return x.on(0, mu).on(1, al).on(0, act); });
      },
      [&] {
        return check_identity(
            "right unit m1=μ(m)", {n}, f,
            [&](const Tensor& x) { return x.on(1, eta).on(0, act); },
            [&](const Tensor& x) { return x.on(0, mu); });
      },
      [&] {
        return check_identity(
            "right hom-associativity μ(m)(ab)=(ma)α(b)", {n, d, d}, f,
            [&](const Tensor& x) { return x.on(1, m).on(0, mu).on(0, act); },
            [&](const Tensor& x) { return x.on(0, act).on(1, al).on(0, act); });
      },
  });
}

CheckResult check_left_module(const HomAlgebra& a, const ModuleWitness& w) {
  const std::size_t d = a.dim(), n = w.dim();
  const Field f = a.field();
  const LegMap act = w.left_act();
  if (act.in()[0] != d) throw ShapeMismatch("left action does not match the algebra dim");
  const LegMap mu = w.m(), al = a.a(), m = a.m(), eta = a.eta();
  return first_failure({
      [&] {
        return check_identity(
            "μ(am)=α(a)μ(m)", {d, n}, f, [&](const Tensor& x) { return x.on(0, act).on(0, mu); },
            [&](const Tensor& x) { return x.on(0, al).on(1, mu).on(0, act); });
      },
      [&] {
        return check_identity(
            "left unit 1m=μ(m)", {n}, f,
            [&](const Tensor& x) { return x.on(0, eta).on(0, act); },
            [&](const Tensor& x) { return x.on(0, mu); });
      },
      [&] {
        return check_identity(
            "left hom-associativity (ab)μ(m)=α(a)(bm)", {d, d, n}, f,
            [&](const Tensor& x) { return x.on(2, mu).on(0, m).on(0, act); },
            [&](const Tensor& x) { return x.on(1, act).on(0, al).on(0, act); });
      },
  });
}

CheckResult check_bimodule(const HomAlgebra& a, const HomAlgebra& b, const ModuleWitness& w) {
  const std::size_t n = w.dim();
  return first_failure({
      [&] { return check_left_module(a, w).within("left module"); },
      [&] { return check_right_module(b, w).within("right module"); },
      [&] {
        const LegMap l = w.left_act(), r = w.right_act();
        return check_identity(
            "bimodule (am)β(b)=α(a)(mb)", {a.dim(), n, b.dim()}, a.field(),
            [&](const Tensor& x) { return x.on(0, l).on(1, b.a()).on(0, r); },
            [&](const Tensor& x) { return x.on(1, r).on(0, a.a()).on(0, l); });
      },
  });
}

CheckResult check_bimodule_morphism(const HomAlgebra& a, const HomAlgebra& b,
                                    const ModuleWitness& m, const ModuleWitness& n,
                                    const LinearMap& f) {
  require_shape(f, n.dim(), m.dim(), "bimodule morphism");
  const Field fd = a.field();
  const LegMap fm(f, {m.dim()}, {n.dim()});
  const LegMap lm = m.left_act(), rm = m.right_act(), ln = n.left_act(), rn = n.right_act();
  return first_failure({
      [&] {
        return check_identity(
            "fμ=νf", {m.dim()}, fd, [&](const Tensor& x) { return x.on(0, m.m()).on(0, fm); },
            [&](const Tensor& x) { return x.on(0, fm).on(0, n.m()); });
      },
      [&] {
        return check_identity(
            "f(am)=af(m)", {a.dim(), m.dim()}, fd,
            [&](const Tensor& x) { return x.on(0, lm).on(0, fm); },
            [&](const Tensor& x) { return x.on(1, fm).on(0, ln); });
      },
      [&] {
        return check_identity(
            "f(mb)=f(m)b", {m.dim(), b.dim()}, fd,
            [&](const Tensor& x) { return x.on(0, rm).on(0, fm); },
            [&](const Tensor& x) { return x.on(0, fm).on(0, rn); });
      },
      [&] {
        return check_identity(
            "(af(m))β(b)=α(a)(f(m)b)", {a.dim(), m.dim(), b.dim()}, fd,
            [&](const Tensor& x) { return x.on(1, fm).on(0, ln).on(1, b.a()).on(0, rn); },
            [&](const Tensor& x) { return x.on(1, fm).on(1, rn).on(0, a.a()).on(0, ln); });
      },
  });
}

CheckResult check_right_comodule(const HomCoalgebra& c, const ModuleWitness& w) {
  const std::size_t n = w.dim();
  const Field f = c.field();
  const LegMap rho = w.right_coact();
  if (rho.out()[1] != c.dim()) throw ShapeMismatch("coaction does not match the coalgebra dim");
  const LegMap mu = w.m(), mui = w.m(-1), g = c.g(), gi = c.g(-1);
  const LegMap delta = c.delta(), eps = c.eps();
  return first_failure({
      [&] {
        return check_identity(
            "ρμ=(μ⊗γ)ρ", {n}, f, [&](const Tensor& x) { return x.on(0, mu).on(0, rho); },
            [&](const Tensor& x) { return x.on(0, rho).on(0, mu).on(1, g); });
      },
      [&] {
        return check_identity(
            "comodule counit m₀ε(m₁)=μ⁻¹(m)", {n}, f,
            [&](const Tensor& x) { return x.on(0, rho).on(1, eps); },
            [&](const Tensor& x) { return x.on(0, mui); });
      },
      [&] {
        return check_identity(
            "comodule coassociativity μ⁻¹(m₀)⊗Δ(m₁)=ρ(m₀)⊗γ⁻¹(m₁)", {n}, f,
            [&](const Tensor& x) { return x.on(0, rho).on(1, delta).on(0, mui); },
            [&](const Tensor& x) { return x.on(0, rho).on(0, rho).on(2, gi); });
      },
  });
}

CheckResult check_left_comodule(const HomCoalgebra& c, const ModuleWitness& w) {
  const std::size_t n = w.dim();
  const Field f = c.field();
  const LegMap rho = w.left_coact();
  if (rho.out()[0] != c.dim()) throw ShapeMismatch("coaction does not match the coalgebra dim");
  const LegMap mu = w.m(), mui = w.m(-1), g = c.g(), gi = c.g(-1);
  const LegMap delta = c.delta(), eps = c.eps();
  return first_failure({
      [&] {
        return check_identity(
            "ρμ=(γ⊗μ)ρ", {n}, f, [&](const Tensor& x) { return x.on(0, mu).on(0, rho); },
            [&](const Tensor& x) { return x.on(0, rho).on(0, g).on(1, mu); });
      },
      [&] {
        return check_identity(
            "comodule counit ε(m₋₁)m₀=μ⁻¹(m)", {n}, f,
            [&](const Tensor& x) { return x.on(0, rho).on(0, eps); },
            [&](const Tensor& x) { return x.on(0, mui); });
      },
      [&] {
        return check_identity(
            "comodule coassociativity Δ(m₋₁)⊗μ⁻¹(m₀)=γ⁻¹(m₋₁)⊗ρ(m₀)", {n}, f,
            [&](const Tensor& x) { return x.on(0, rho).on(0, delta).on(2, mui); },
            [&](const Tensor& x) { return x.on(0, rho).on(1, rho).on(0, gi); });
      },
  });
}

CheckResult check_comodule_algebra(const HomBialgebra& b, const HomAlgebra& a,
                                   const LinearMap& coaction) {
  ModuleWitness w(a.alpha());
  w.right_coaction = coaction;
  const std::size_t d = a.dim();
  const LegMap rho = w.right_coact(), ma = a.m(), mb = b.algebra().m();
  return first_failure({
      [&] { return check_right_comodule(b.coalgebra(), w); },
      [&] {
        return check_identity(
            "ρ(aa')=ρ(a)ρ(a')", {d, d}, a.field(),
            [&](const Tensor& x) { return x.on(0, ma).on(0, rho); },
            [&](const Tensor& x) {
              return x.on(1, rho).on(0, rho).permuted({0, 2, 1, 3}).on(0, ma).on(1, mb);
            });
      },
      [&] {
        return check_identity(
            "ρ(1)=1⊗1", {}, a.field(), [&](const Tensor& x) { return x.on(0, a.eta()).on(0, rho); },
            [&](const Tensor& x) { return x.on(0, a.eta()).on(1, b.algebra().eta()); });
      },
  });
}

CheckResult check_module_coalgebra(const HomBialgebra& b, const HomCoalgebra& c,
                                   const LinearMap& action) {
  ModuleWitness w(c.gamma());
  w.right_action = action;
  const LegMap act = w.right_act(), dc = c.delta(), db = b.coalgebra().delta();
  return first_failure({
      [&] { return check_right_module(b.algebra(), w); },
      [&] {
        return check_identity(
            "Δ(cb)=c₁b₁⊗c₂b₂", {c.dim(), b.dim()}, c.field(),
            [&](const Tensor& x) { return x.on(0, act).on(0, dc); },
            [&](const Tensor& x) {
              return x.on(1, db).on(0, dc).permuted({0, 2, 1, 3}).on(0, act).on(1, act);
            });
      },
      [&] {
        return check_identity(
            "ε(cb)=ε(c)ε(b)", {c.dim(), b.dim()}, c.field(),
            [&](const Tensor& x) { return x.on(0, act).on(0, c.eps()); },
            [&](const Tensor& x) { return x.on(0, c.eps()).on(0, b.coalgebra().eps()); });
      },
  });
}

CheckResult check_module_algebra(const HomBialgebra& b, const HomAlgebra& a,
                                 const LinearMap& action) {
  ModuleWitness w(a.alpha());
  w.left_action = action;
  const LegMap act = w.left_act(), ma = a.m(), db = b.coalgebra().delta();
  return first_failure({
      [&] { return check_left_module(b.algebra(), w); },
      [&] {
        return check_identity(
            "b·(aa')=(b₁·a)(b₂·a')", {b.dim(), a.dim(), a.dim()}, a.field(),
            [&](const Tensor& x) { return x.on(1, ma).on(0, act); },
            [&](const Tensor& x) {
              return x.on(0, db).permuted({0, 2, 1, 3}).on(0, act).on(1, act).on(0, ma);
            });
      },
      [&] {
        return check_identity(
            "b·1=ε(b)1", {b.dim()}, a.field(),
            [&](const Tensor& x) { return x.on(1, a.eta()).on(0, act); },
            [&](const Tensor& x) { return x.on(0, b.coalgebra().eps()).on(0, a.eta()); });
      },
  });
}

CheckResult check_comodule_coalgebra(const HomBialgebra& b, const HomCoalgebra& c,
                                     const LinearMap& coaction) {
  ModuleWitness w(c.gamma());
  w.left_coaction = coaction;
  const LegMap rho = w.left_coact(), dc = c.delta(), mb = b.algebra().m();
  return first_failure({
      [&] { return check_left_comodule(b.coalgebra(), w); },
      [&] {
        return check_identity(
            "c₋₁⊗c₀₁⊗c₀₂=c₁₋₁c₂₋₁⊗c₁₀⊗c₂₀", {c.dim()}, c.field(),
            [&](const Tensor& x) { return x.on(0, rho).on(1, dc); },
            [&](const Tensor& x) {
              return x.on(0, dc).on(1, rho).on(0, rho).permuted({0, 2, 1, 3}).on(0, mb);
            });
      },
      [&] {
        return check_identity(
            "c₋₁ε(c₀)=ε(c)1", {c.dim()}, c.field(),
            [&](const Tensor& x) { return x.on(0, rho).on(1, c.eps()); },
            [&](const Tensor& x) { return x.on(0, c.eps()).on(0, b.algebra().eta()); });
      },
  });
}

// ---------------------------------------------------------------------------
// Standard witnesses.

ModuleWitness regular_right_module(const HomAlgebra& a) {
  ModuleWitness w(a.alpha());
  w.right_action = a.mult();
  return w;
}

ModuleWitness regular_left_module(const HomAlgebra& a) {
  ModuleWitness w(a.alpha());
  w.left_action = a.mult();
  return w;
}

ModuleWitness regular_bimodule(const HomAlgebra& a) {
  ModuleWitness w(a.alpha());
  w.left_action = a.mult();
  w.right_action = a.mult();
  return w;
}

ModuleWitness regular_right_comodule(const HomCoalgebra& c) {
  ModuleWitness w(c.gamma());
  w.right_coaction = c.comult();
  return w;
}

ModuleWitness regular_left_comodule(const HomCoalgebra& c) {
  ModuleWitness w(c.gamma());
  w.left_coaction = c.comult();
  return w;
}

ModuleWitness bimodule_along(const AlgebraMorphism& phi) {
  const HomAlgebra& b = phi.target;
  const std::size_t da = phi.source.dim(), db = b.dim();
  const LegMap f(phi.matrix, {da}, {db});
  const LegMap m = b.m();
  ModuleWitness w(b.alpha());
  w.left_action = tabulate({da, db}, {db}, b.field(),
                           [&](const Tensor& x) { return x.on(0, f).on(0, m); });
  w.right_action = tabulate({db, da}, {db}, b.field(),
                            [&](const Tensor& x) { return x.on(1, f).on(0, m); });
  return w;
}

// ---------------------------------------------------------------------------
// Tensor product over a Hom-algebra.

LegMap BalancedTensor::section() const {
  return LegMap(space.section(), {space.dim()}, {left_dim, right_dim});
}

namespace {

/// Sparse accumulator over k^n that remembers which entries it touched.
class Accumulator {
 public:
  Accumulator(std::size_t n, Field f) : zero_(f.zero()), work_(n, f.zero()) {}
  void add(std::size_t i, const Scalar& c) {
    if (work_[i].is_zero()) touched_.push_back(i);
    work_[i] += c;
  }
  SparseVector take() {
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    SparseVector out;
    for (auto i : touched_) {
      if (!work_[i].is_zero()) out.emplace_back(i, work_[i]);
      work_[i] = zero_;
    }
    touched_.clear();
    return out;
  }

 private:
  Scalar zero_;
  Vector work_;
  std::vector<std::size_t> touched_;
};

/// (f ⊗ g)(v) for v in k^{m} ⊗ k^{n} given as a sparse vector.
Vector kron_apply(const LegMap& f, const LegMap& g, const SparseVector& v, Field field) {
  const std::size_t n = g.in()[0], n_out = g.out()[0];
  Vector out(f.out()[0] * n_out, field.zero());
  for (const auto& [idx, c] : v)
    for (const auto& [i, a] : f.column(idx / n))
      for (const auto& [j, b] : g.column(idx % n)) out[i * n_out + j] += c * a * b;
  return out;
}

}  // namespace

BalancedTensor tensor_over_A(const HomAlgebra& a, const ModuleWitness& m, const ModuleWitness& n) {
  const std::size_t dm = m.dim(), dn = n.dim(), d = a.dim();
  const Field f = a.field();
  const LegMap ract = m.right_act(), lact = n.left_act();
  if (ract.in()[1] != d || lact.in()[0] != d)
    throw ShapeMismatch("module actions do not match the algebra dim");
  const LegMap mu = m.m(), nu = n.m(), nui = n.m(-1);

  // Relations ma⊗n − μ(m)⊗aν⁻¹(n), built column by column.
  SpanBuilder span(dm * dn, f);
  Accumulator acc(dm * dn, f);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < dn; ++j) {
        for (const auto& [r, c] : ract.column(i * d + k)) acc.add(r * dn + j, c);
        for (const auto& [r, c] : mu.column(i))
          for (const auto& [s, e] : nui.column(j))
            for (const auto& [t, g] : lact.column(k * dn + s)) acc.add(r * dn + t, -(c * e * g));
        span.add(acc.take());
      }
  auto [rows, pivots] = span.reduced_basis();
  BalancedTensor out;
  out.space = QuotientSpace(dm * dn, std::move(rows), std::move(pivots), f);
  out.left_dim = dm;
  out.right_dim = dn;

  for (const auto& r : out.space.relations())
    if (!is_zero(out.space.project(kron_apply(mu, nu, r, f))))
      throw NonDescendingMap("μ⊗ν does not respect the balancing relations");
  const std::size_t q = out.space.dim();
  out.automorphism = LinearMap(q, q, f);
  for (std::size_t k = 0; k < q; ++k)
    out.automorphism.set_column(
        k, out.space.project(kron_apply(mu, nu, {{out.space.free_columns()[k], f.one()}}, f)));
  invert(out.automorphism);
  return out;
}

LinearMap descend_with_extra(const QuotientSpace& source, const Dims& source_legs,
                             std::size_t extra, bool extra_on_left,
                             const QuotientSpace& target, const TensorFn& flat) {
  const std::size_t amb = source.ambient_dim();
  if (product(source_legs) != amb) throw ShapeMismatch("source legs do not match ambient dim");
  const Field f = source.field();
  Dims dims = source_legs;
  dims.insert(extra_on_left ? dims.begin() : dims.end(), extra);

  auto combined = [&](std::size_t e, const SparseVector& v) {
    Vector data(extra * amb, f.zero());
    for (const auto& [j, c] : v) data[extra_on_left ? e * amb + j : j * extra + e] = c;
    return Tensor(dims, std::move(data));
  };

  for (const auto& r : source.relations()) {
    for (std::size_t e = 0; e < extra; ++e) {
      const Tensor image = flat(combined(e, r));
      if (!is_zero(target.project(image.entries())))
        throw NonDescendingMap("map does not respect the balancing relations");
    }
  }
  const std::size_t q = source.dim();
  LinearMap out(target.dim(), extra * q, f);
  for (std::size_t e = 0; e < extra; ++e) {
    for (std::size_t k = 0; k < q; ++k) {
      const Tensor image = flat(combined(e, {{source.free_columns()[k], f.one()}}));
      out.set_column(extra_on_left ? e * q + k : k * extra + e, target.project(image.entries()));
    }
  }
  return out;
}

LinearMap induced_left_action(const BalancedTensor& t, const HomAlgebra& d,
                              const ModuleWitness& m, const ModuleWitness& n) {
  const LegMap act = m.left_act(), di = d.a(-1), nu = n.m();
  return descend_with_extra(t.space, {t.left_dim, t.right_dim}, d.dim(), true, t.space,
                            [&](const Tensor& x) { return x.on(0, di).on(0, act).on(1, nu); });
}

LinearMap induced_right_action(const BalancedTensor& t, const HomAlgebra& d,
                               const ModuleWitness& m, const ModuleWitness& n) {
  const LegMap act = n.right_act(), di = d.a(-1), mu = m.m();
  return descend_with_extra(t.space, {t.left_dim, t.right_dim}, d.dim(), false, t.space,
                            [&](const Tensor& x) { return x.on(2, di).on(1, act).on(0, mu); });
}

// ---------------------------------------------------------------------------
// Constructions.

HomAlgebra opposite(const HomAlgebra& a) {
  return HomAlgebra(a.mult() * flip_map(a.dim(), a.dim(), a.field()), a.unit(), a.alpha());
}

HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim();
  const LegMap ma = a.m(), mb = b.m();
  LinearMap mult = tabulate({da, db, da, db}, {da * db}, a.field(), [&](const Tensor& x) {
    return x.permuted({0, 2, 1, 3}).on(0, ma).on(1, mb);
  });
  return HomAlgebra(std::move(mult), kron(a.unit(), b.unit()), kron(a.alpha(), b.alpha()));
}

HomBialgebra tensor_bialgebra(const HomBialgebra& a, const HomBialgebra& b) {
  const std::size_t da = a.dim(), db = b.dim();
  const LegMap dA = a.coalgebra().delta(), dB = b.coalgebra().delta();
  LinearMap comult = tabulate({da, db}, {da, db, da, db}, a.field(), [&](const Tensor& x) {
    return x.on(1, dB).on(0, dA).permuted({0, 2, 1, 3});
  });
  HomCoalgebra coalgebra(std::move(comult), kron(a.coalgebra().counit(), b.coalgebra().counit()),
                         kron(a.alpha(), b.alpha()));
  return HomBialgebra(tensor_algebra(a.algebra(), b.algebra()), std::move(coalgebra));
}

namespace {

void require_bialgebra_automorphism(const HomBialgebra& c, const LinearMap& twist) {
  const std::size_t d = c.dim();
  if (!twist.is_square() || twist.rows() != d) throw NotAutomorphism("twist has the wrong shape");
  if (rank(twist) != d) throw NotAutomorphism("twist is not invertible");
  const HomAlgebra& a = c.algebra();
  const HomCoalgebra& co = c.coalgebra();
  const bool ok = twist * a.mult() == a.mult() * kron(twist, twist) &&
                  twist * a.unit() == a.unit() &&
                  co.comult() * twist == kron(twist, twist) * co.comult() &&
                  co.counit() * twist == co.counit();
  if (!ok) throw NotAutomorphism("twist is not a bialgebra automorphism");
}

}  // namespace

HomBialgebra yau_twist(const HomBialgebra& classical, const LinearMap& twist) {
  if (!classical.alpha().is_identity())
    throw PreconditionFailed("yau_twist expects a classical structure with α = id");
  require_bialgebra_automorphism(classical, twist);
  const HomAlgebra& a = classical.algebra();
  const HomCoalgebra& c = classical.coalgebra();
  HomAlgebra ta(twist * a.mult(), a.unit(), twist);
  HomCoalgebra tc(c.comult() * invert(twist), c.counit(), twist);
  return HomBialgebra(std::move(ta), std::move(tc));
}

HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const LinearMap& twist) {
  HomBialgebra b = yau_twist(classical.bialgebra(), twist);
  if (twist * classical.antipode() != classical.antipode() * twist)
    throw NotAutomorphism("twist does not commute with the antipode");
  return HomHopfAlgebra(std::move(b), classical.antipode());
}

}  // namespace homalg
