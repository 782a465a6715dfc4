#include "homalg/entwining.hpp"

#include "homalg/errors.hpp"

namespace homalg {

namespace {

struct Legs {
  LegMap psi, m, eta, a, a_inv, g, g_inv, delta, eps;
};

Legs legs(const EntwiningStructure& e) {
  const HomAlgebra& a = e.algebra;
  const HomCoalgebra& c = e.coalgebra;
  return {e.psi_leg(), a.m(), a.eta(), a.a(), a.a(-1), c.g(), c.g(-1), c.delta(), c.eps()};
}

LinearMap standard_left_action(const EntwiningStructure& e) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Legs l = legs(e);
  // a(a'⊗c) = α⁻¹(a)a'⊗γ(c)
  return tabulate({da, da, dc}, {da, dc}, e.algebra.field(), [&](const Tensor& x) {
    return x.on(0, l.a_inv).on(0, l.m).on(1, l.g);
  });
}

LinearMap standard_lift(const EntwiningStructure& e) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Legs l = legs(e);
  // a⊗c ↦ (α⁻¹(a)⊗c₁)⊗(1⊗c₂)
  return tabulate({da, dc}, {da, dc, da, dc}, e.algebra.field(), [&](const Tensor& x) {
    return x.on(0, l.a_inv).on(1, l.delta).on(2, l.eta);
  });
}

LinearMap standard_counit(const EntwiningStructure& e) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Legs l = legs(e);
  return tabulate({da, dc}, {da}, e.algebra.field(),
                  [&](const Tensor& x) { return x.on(0, l.a).on(1, l.eps); });
}

}  // namespace

LegMap EntwiningStructure::psi_leg() const {
  const std::size_t da = algebra.dim(), dc = coalgebra.dim();
  return LegMap(psi, {dc, da}, {da, dc});
}

EntwiningStructure make_entwining(HomAlgebra algebra, HomCoalgebra coalgebra, LinearMap psi) {
  const std::size_t n = algebra.dim() * coalgebra.dim();
  if (psi.rows() != n || psi.cols() != n) throw ShapeMismatch("ψ must be square on C⊗A");
  if (algebra.field() != coalgebra.field() || psi.field() != algebra.field())
    throw FieldMismatch("entwining components over different fields");
  return {std::move(algebra), std::move(coalgebra), std::move(psi)};
}

EntwiningStructure flip_entwining(const HomAlgebra& a, const HomCoalgebra& c) {
  return make_entwining(a, c, flip_map(c.dim(), a.dim(), a.field()));
}

Tensor psi_twice_right(const EntwiningStructure& e, const Tensor& x, std::size_t leg) {
  const LegMap psi = e.psi_leg();
  // (c, a, a') → (a_κ, c^κ, a') → (a_κ, a'_λ, c^{κλ})
  return x.on(leg, psi).on(leg + 1, psi);
}

Tensor psi_twice_left(const EntwiningStructure& e, const Tensor& x, std::size_t leg) {
  const LegMap psi = e.psi_leg();
  // (c, c', a) → (c, a_κ, c'^κ) → (a_{κλ}, c^λ, c'^κ)
  return x.on(leg + 1, psi).on(leg, psi);
}

CheckResult check_entwining(const EntwiningStructure& e) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Field f = e.algebra.field();
  const Legs l = legs(e);
  return first_failure({
      [&] { return check_hom_algebra(e.algebra).within("algebra"); },
      [&] { return check_hom_coalgebra(e.coalgebra).within("coalgebra"); },
      [&] {
        return check_identity(
            "ψ-morphism α(a)_κ⊗γ(c)^κ=α(a_κ)⊗γ(c^κ)", {dc, da}, f,
            [&](const Tensor& x) { return x.on(0, l.g).on(1, l.a).on(0, l.psi); },
            [&](const Tensor& x) { return x.on(0, l.psi).on(0, l.a).on(1, l.g); });
      },
      [&] {
        return check_identity(
            "entwining unit 1_κ⊗c^κ=1⊗c", {dc}, f,
            [&](const Tensor& x) { return x.on(1, l.eta).on(0, l.psi); },
            [&](const Tensor& x) { return x.on(0, l.eta); });
      },
      [&] {
        return check_identity(
            "entwining counit a_κε(c^κ)=aε(c)", {dc, da}, f,
            [&](const Tensor& x) { return x.on(0, l.psi).on(1, l.eps); },
            [&](const Tensor& x) { return x.on(0, l.eps); });
      },
      [&] {
        return check_identity(
            "entwining (aa')_κ⊗γ(c)^κ=a_κa'_λ⊗γ(c^{κλ})", {dc, da, da}, f,
            [&](const Tensor& x) { return x.on(1, l.m).on(0, l.g).on(0, l.psi); },
            [&](const Tensor& x) { return psi_twice_right(e, x, 0).on(0, l.m).on(1, l.g); });
      },
      [&] {
        return check_identity(
            "entwining α⁻¹(a_κ)⊗c^κ₁⊗c^κ₂=α⁻¹(a)_{κλ}⊗c₁^λ⊗c₂^κ", {dc, da}, f,
            [&](const Tensor& x) { return x.on(0, l.psi).on(0, l.a_inv).on(1, l.delta); },
            [&](const Tensor& x) { return psi_twice_left(e, x.on(1, l.a_inv).on(0, l.delta), 0); });
      },
  });
}

HomCoring coring_from_entwining(const EntwiningStructure& e) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Legs l = legs(e);
  // (a'⊗c)a = a'α⁻¹(a)_κ⊗γ(c^κ)
  LinearMap right = tabulate({da, dc, da}, {da, dc}, e.algebra.field(), [&](const Tensor& x) {
    return x.on(2, l.a_inv).on(1, l.psi).on(0, l.m).on(1, l.g);
  });
  return make_coring(e.algebra, kron(e.algebra.alpha(), e.coalgebra.gamma()),
                     standard_left_action(e), std::move(right), standard_lift(e),
                     standard_counit(e));
}

EntwiningStructure entwining_from_coring(const HomCoring& c, const HomAlgebra& a,
                                         const HomCoalgebra& coalgebra) {
  const std::size_t da = a.dim(), dc = coalgebra.dim();
  if (c.dim() != da * dc || c.base.dim() != da)
    throw NotStandardForm("carrier is not A⊗C");
  if (c.base.mult() != a.mult() || c.base.unit() != a.unit() || c.base.alpha() != a.alpha())
    throw NotStandardForm("coring base differs from the algebra");
  // ψ plays no role in the maps compared below.
  const EntwiningStructure probe{a, coalgebra, LinearMap::identity(da * dc, a.field())};
  if (c.chi() != kron(a.alpha(), coalgebra.gamma())) throw NotStandardForm("χ is not α⊗γ");
  if (*c.bimodule.left_action != standard_left_action(probe))
    throw NotStandardForm("left action is not a(a'⊗c)=α⁻¹(a)a'⊗γ(c)");
  if (c.counit != standard_counit(probe)) throw NotStandardForm("counit is not α(a)ε(c)");
  if (c.comult() != c.square.space.projection() * standard_lift(probe))
    throw NotStandardForm("comultiplication is not (α⁻¹(a)⊗c₁)⊗(1⊗c₂)");

  const LegMap ract = c.bimodule.right_act(), g_inv = coalgebra.g(-1), eta = a.eta();
  LinearMap psi = tabulate({dc, da}, {da, dc}, a.field(), [&](const Tensor& x) {
    return x.on(0, g_inv).on(0, eta).reshaped({da * dc, da}).on(0, ract).reshaped({da, dc});
  });
  return make_entwining(a, coalgebra, std::move(psi));
}

CheckResult check_entwined_module(const EntwiningStructure& e, const ModuleWitness& m) {
  const std::size_t n = m.dim(), da = e.algebra.dim();
  const Field f = e.algebra.field();
  const Legs l = legs(e);
  return first_failure({
      [&] { return check_right_module(e.algebra, m).within("module"); },
      [&] { return check_right_comodule(e.coalgebra, m).within("comodule"); },
      [&] {
        const LegMap act = m.right_act(), rho = m.right_coact();
        return check_identity(
            "entwined ρ(ma)=m₀α⁻¹(a)_κ⊗γ(m₁^κ)", {n, da}, f,
            [&](const Tensor& x) { return x.on(0, act).on(0, rho); },
            [&](const Tensor& x) {
              return x.on(0, rho).on(2, l.a_inv).on(1, l.psi).on(0, act).on(1, l.g);
            });
      },
  });
}

ModuleWitness comodule_from_entwined(const EntwiningStructure& e, const ModuleWitness& m) {
  const std::size_t n = m.dim(), da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Legs l = legs(e);
  const LegMap rho = m.right_coact();
  ModuleWitness out(m.mu);
  out.right_action = m.right_action;
  out.right_coaction = tabulate({n}, {n, da, dc}, e.algebra.field(), [&](const Tensor& x) {
    return x.on(0, rho).on(1, l.g_inv).on(1, l.eta);
  });
  return out;
}

LinearMap entwined_identification(const EntwiningStructure& e, const ModuleWitness& m) {
  const std::size_t n = m.dim(), da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Field f = e.algebra.field();
  const HomCoring c = coring_from_entwining(e);
  const BalancedTensor t = comodule_target(c, m);
  const LegMap act = m.right_act(), mu_inv = m.m(-1), g = e.coalgebra.g();
  const auto flat = [&](const Tensor& x) {
    return x.reshaped({n, da, dc}).on(0, mu_inv).on(0, act).on(1, g);
  };
  for (const auto& r : t.space.relations())
    if (!flat(Tensor({n, da * dc}, r, f)).is_zero())
      throw NonDescendingMap("identification is not well defined on M⊗_A(A⊗C)");
  LinearMap phi = tabulate({t.dim()}, {n, dc}, f,
                           [&](const Tensor& x) { return flat(x.on(0, t.section())); });
  if (phi.rows() != phi.cols() || rank(phi) != phi.rows())
    throw SingularMap("identification M⊗_A(A⊗C) → M⊗C is not invertible");
  return phi;
}

ModuleWitness entwined_from_comodule(const EntwiningStructure& e, const ModuleWitness& w) {
  const HomCoring c = coring_from_entwining(e);
  const BalancedTensor t = comodule_target(c, w);
  ModuleWitness out(w.mu);
  out.right_action = w.right_action;
  if (!w.right_coaction) throw PreconditionFailed("witness has no right coaction");
  out.right_coaction = entwined_identification(e, w) * t.space.projection() * *w.right_coaction;
  return out;
}

ModuleWitness regular_entwined_module(const EntwiningStructure& e) {
  const HomCoring c = coring_from_entwining(e);
  ModuleWitness w = c.bimodule;
  w.left_action.reset();
  w.right_coaction = c.comult_lift;
  return entwined_from_comodule(e, w);
}

LinearMap koppinen_product(const EntwiningStructure& e, const LinearMap& f, const LinearMap& g,
                           bool swapped) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Legs l = legs(e);
  const LegMap fl(swapped ? g : f, {dc}, {da}), gl(swapped ? f : g, {dc}, {da});
  // c ↦ c₁⊗c₂ ↦ c₁⊗f(c₂) ↦ f(c₂)_κ⊗c₁^κ ↦ f(c₂)_κ g(c₁^κ)
  return tabulate({dc}, {da}, e.algebra.field(), [&](const Tensor& x) {
    return x.on(0, l.delta).on(1, fl).on(0, l.psi).on(1, gl).on(0, l.m);
  });
}

KoppinenAlgebra koppinen_smash(const EntwiningStructure& e, bool swapped) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Field f = e.algebra.field();
  const LinearMap& alpha = e.algebra.alpha();
  const LinearMap& gamma = e.coalgebra.gamma();
  ConstrainedMaps maps = solve_map_constraints(da, dc, f, [&](const LinearMap& x) {
    return (x * gamma - alpha * x).entries();
  });
  KoppinenAlgebra out;
  static_cast<MapAlgebra&>(out) = make_map_algebra(
      std::move(maps),
      [&](const LinearMap& x, const LinearMap& y) { return koppinen_product(e, x, y, swapped); },
      e.algebra.unit() * e.coalgebra.counit(), f);
  return out;
}

CheckResult check_koppinen_anti_isomorphism(const EntwiningStructure& e, bool swapped) {
  const std::size_t da = e.algebra.dim(), dc = e.coalgebra.dim();
  const Field f = e.algebra.field();
  const HomCoring c = coring_from_entwining(e);
  const DualAlgebra left = dual_algebra(c, DualSide::Left);
  const KoppinenAlgebra smash = koppinen_smash(e, swapped);
  const LegMap m = e.algebra.m();

  // Φ(ξ) = ξ∘(η⊗γ⁻¹) and Φ⁻¹(f) = m∘(id⊗f).
  const LinearMap embed = tabulate({dc}, {da, dc}, f, [&](const Tensor& x) {
    return x.on(0, e.coalgebra.g(-1)).on(0, e.algebra.eta());
  });
  const auto to_smash = [&](const LinearMap& xi) { return xi * embed; };
  const auto from_smash = [&](const LinearMap& g) {
    const LegMap gl(g, {dc}, {da});
    return tabulate({da, dc}, {da}, f, [&](const Tensor& x) { return x.on(1, gl).on(0, m); });
  };

  const std::size_t nl = left.dim(), ns = smash.dim();
  if (nl != ns) return CheckResult::fail("Φ: *C and the Koppinen smash have equal dimension");
  std::vector<Vector> phi_cols, inv_cols;
  try {
    for (const auto& xi : left.basis) phi_cols.push_back(smash.coordinates(to_smash(xi)));
    for (const auto& g : smash.basis) inv_cols.push_back(left.coordinates(from_smash(g)));
  } catch (const NotClosed&) {
    return CheckResult::fail("Φ and its inverse land in the right algebras");
  }
  const LinearMap phi = LinearMap::from_columns(ns, phi_cols, f);
  const LinearMap inv = LinearMap::from_columns(nl, inv_cols, f);
  if (!(phi * inv).is_identity() || !(inv * phi).is_identity())
    return CheckResult::fail("Φ and f ↦ (a⊗c ↦ af(c)) are mutually inverse");
  if (to_smash(c.counit) != e.algebra.unit() * e.coalgebra.counit())
    return CheckResult::fail("Φ(ε_C)=ηε");
  for (std::size_t i = 0; i < nl; ++i)
    for (std::size_t j = 0; j < nl; ++j) {
      const LinearMap lhs = to_smash(dual_product(c, DualSide::Left, left.basis[i], left.basis[j]));
      const LinearMap rhs =
          koppinen_product(e, to_smash(left.basis[j]), to_smash(left.basis[i]), swapped);
      if (lhs != rhs)
        return CheckResult::fail(
            Failure{"anti-homomorphism Φ(ξ∗ξ')=Φ(ξ')∗_ψΦ(ξ)", {i, j}, lhs.entries(), rhs.entries()});
    }
  return CheckResult::pass();
}

}  // namespace homalg
