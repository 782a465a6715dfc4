#include "homalg/doi_koppinen.hpp"

#include "homalg/errors.hpp"

namespace homalg {

namespace {

LegMap leg(const LinearMap& m, Dims in, Dims out) { return LegMap(m, std::move(in), std::move(out)); }

CheckResult both_agree(const CheckResult& specific, const CheckResult& generic) {
  if (specific.passed() != generic.passed())
    return CheckResult::fail("specialized condition agrees with the entwined-module condition");
  return specific;
}

CheckResult module_and_comodule(const HomAlgebra& a, const HomCoalgebra& c, const ModuleWitness& m) {
  return first_failure({
      [&] { return check_right_module(a, m).within("module"); },
      [&] { return check_right_comodule(c, m).within("comodule"); },
  });
}

}  // namespace

CheckResult check_dk_datum(const DoiKoppinenDatum& d) {
  return first_failure({
      [&] { return check_hom_bialgebra(d.bialgebra).within("bialgebra"); },
      [&] { return check_comodule_algebra(d.bialgebra, d.algebra, d.coaction); },
      [&] { return check_module_coalgebra(d.bialgebra, d.coalgebra, d.action); },
  });
}

CheckResult check_alt_dk_datum(const AlternativeDKDatum& d) {
  return first_failure({
      [&] { return check_hom_bialgebra(d.bialgebra).within("bialgebra"); },
      [&] { return check_module_algebra(d.bialgebra, d.algebra, d.action); },
      [&] { return check_comodule_coalgebra(d.bialgebra, d.coalgebra, d.coaction); },
  });
}

CheckResult check_hopf_automorphism(const HomHopfAlgebra& h, const LinearMap& f) {
  const std::size_t n = h.dim();
  const Field k = h.field();
  if (f.rows() != n || f.cols() != n) throw ShapeMismatch("automorphism has the wrong shape");
  const LegMap fl = leg(f, {n}, {n});
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  return first_failure({
      [&] {
        return check_identity(
            "f(gh)=f(g)f(h)", {n, n}, k, [&](const Tensor& x) { return x.on(0, a.m()).on(0, fl); },
            [&](const Tensor& x) { return x.on(0, fl).on(1, fl).on(0, a.m()); });
      },
      [&] { return f * a.unit() == a.unit() ? CheckResult::pass() : CheckResult::fail("f(1)=1"); },
      [&] {
        return check_identity(
            "Δf=(f⊗f)Δ", {n}, k, [&](const Tensor& x) { return x.on(0, fl).on(0, c.delta()); },
            [&](const Tensor& x) { return x.on(0, c.delta()).on(0, fl).on(1, fl); });
      },
      [&] {
        return c.counit() * f == c.counit() ? CheckResult::pass() : CheckResult::fail("εf=ε");
      },
      [&] { return f * a.alpha() == a.alpha() * f ? CheckResult::pass() : CheckResult::fail("fα=αf"); },
      [&] {
        return f * h.antipode() == h.antipode() * f ? CheckResult::pass() : CheckResult::fail("fS=Sf");
      },
      [&] { return rank(f) == n ? CheckResult::pass() : CheckResult::fail("f invertible"); },
  });
}

CheckResult check_automorphism_pair(const HopfAutomorphismPair& p) {
  return first_failure({
      [&] { return check_hom_bialgebra(p.hopf.bialgebra()).within("bialgebra"); },
      [&] { return check_antipode(p.hopf); },
      [&] { return check_hopf_automorphism(p.hopf, p.phi).within("φ"); },
      [&] { return check_hopf_automorphism(p.hopf, p.varphi).within("φ′"); },
  });
}

EntwiningStructure entwining_from_dk(const DoiKoppinenDatum& d) {
  const std::size_t da = d.algebra.dim(), dc = d.coalgebra.dim(), db = d.bialgebra.dim();
  const LegMap rho = leg(d.coaction, {da}, {da, db}), act = leg(d.action, {dc, db}, {dc});
  LinearMap psi = tabulate({dc, da}, {da, dc}, d.algebra.field(), [&](const Tensor& x) {
    return x.on(1, rho)
        .on(1, d.algebra.a())
        .on(0, d.coalgebra.g(-1))
        .permuted({1, 0, 2})
        .on(1, act);
  });
  return make_entwining(d.algebra, d.coalgebra, std::move(psi));
}

CheckResult check_dk_module(const DoiKoppinenDatum& d, const ModuleWitness& m) {
  const std::size_t n = m.dim(), da = d.algebra.dim(), dc = d.coalgebra.dim(),
                    db = d.bialgebra.dim();
  const LegMap rho_a = leg(d.coaction, {da}, {da, db}), act_c = leg(d.action, {dc, db}, {dc});
  const CheckResult specific = first_failure({
      [&] { return module_and_comodule(d.algebra, d.coalgebra, m); },
      [&] {
        const LegMap act = m.right_act(), rho = m.right_coact();
        return check_identity(
            "Doi-Koppinen ρ(ma)=m₍₀₎a₍₀₎⊗m₍₁₎a₍₁₎", {n, da}, d.algebra.field(),
            [&](const Tensor& x) { return x.on(0, act).on(0, rho); },
            [&](const Tensor& x) {
              return x.on(0, rho).on(2, rho_a).permuted({0, 2, 1, 3}).on(0, act).on(1, act_c);
            });
      },
  });
  return both_agree(specific, check_entwined_module(entwining_from_dk(d), m));
}

DoiKoppinenDatum relative_datum(const HomBialgebra& b, const HomAlgebra& a, const LinearMap& coaction) {
  return {b, a, coaction, b.coalgebra(), b.algebra().mult()};
}

EntwiningStructure relative_entwining(const HomBialgebra& b, const HomAlgebra& a,
                                      const LinearMap& coaction) {
  return entwining_from_dk(relative_datum(b, a, coaction));
}

DoiKoppinenDatum dual_relative_datum(const HomBialgebra& a, const HomCoalgebra& c,
                                     const LinearMap& action) {
  return {a, a.algebra(), a.coalgebra().comult(), c, action};
}

EntwiningStructure dual_relative_entwining(const HomBialgebra& a, const HomCoalgebra& c,
                                           const LinearMap& action) {
  return entwining_from_dk(dual_relative_datum(a, c, action));
}

LinearMap antipode_squared_inverse(const HomHopfAlgebra& h) {
  return invert(h.antipode() * h.antipode());
}

DoiKoppinenDatum yd_datum(const HopfAutomorphismPair& p) {
  const HomHopfAlgebra& h = p.hopf;
  const std::size_t n = h.dim();
  const Field k = h.field();
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  const HomBialgebra op(opposite(a), c);
  const HomBialgebra tilde = tensor_bialgebra(op, h.bialgebra());
  const LegMap phi = leg(p.phi, {n}, {n}), varphi = leg(p.varphi, {n}, {n});

  // h ↦ α(h₂₁)⊗(α⁻¹(φ′(S(h₁)))⊗h₂₂)
  LinearMap coaction = tabulate({n}, {n, n, n}, k, [&](const Tensor& x) {
    return x.on(0, c.delta())
        .on(1, c.delta())
        .on(0, h.s())
        .on(0, varphi)
        .on(0, a.a(-1))
        .on(1, a.a())
        .permuted({1, 0, 2});
  });
  // g·(h⊗k) = (hα⁻¹(g))φ(α(k))
  LinearMap action = tabulate({n, n, n}, {n}, k, [&](const Tensor& x) {
    return x.on(0, a.a(-1)).permuted({1, 0, 2}).on(0, a.m()).on(1, a.a()).on(1, phi).on(0, a.m());
  });
  return {tilde, a, std::move(coaction), c, std::move(action)};
}

EntwiningStructure yetter_drinfeld_entwining(const HopfAutomorphismPair& p) {
  const HomHopfAlgebra& h = p.hopf;
  const std::size_t n = h.dim();
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  const LegMap phi = leg(p.phi, {n}, {n}), varphi = leg(p.varphi, {n}, {n});
  // (g, h) → (g, h₁, h₂₁, h₂₂) → (h₂₁, h₁, g, h₂₂)
  LinearMap psi = tabulate({n, n}, {n, n}, h.field(), [&](const Tensor& x) {
    return x.on(1, c.delta())
        .on(2, c.delta())
        .on(3, phi)
        .on(0, a.a(-2))
        .permuted({2, 1, 0, 3})
        .on(0, a.a(2))
        .on(1, h.s())
        .on(1, varphi)
        .on(2, a.m())
        .on(1, a.m());
  });
  return make_entwining(a, c, std::move(psi));
}

namespace {

Tensor yd_rhs(const HopfAutomorphismPair& p, const ModuleWitness& m, const Tensor& x) {
  const HomHopfAlgebra& h = p.hopf;
  const std::size_t n = h.dim();
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  // (m₀, m₁, h₁, h₂₁, h₂₂) → (m₀, h₂₁, h₁, m₁, h₂₂)
  return x.on(0, m.right_coact())
      .on(2, c.delta())
      .on(3, c.delta())
      .permuted({0, 3, 2, 1, 4})
      .on(1, a.a())
      .on(0, m.right_act())
      .on(1, h.s())
      .on(1, leg(p.varphi, {n}, {n}))
      .on(2, a.a(-1))
      .on(3, leg(p.phi, {n}, {n}))
      .on(2, a.m())
      .on(1, a.m());
}

CheckResult yd_direct(const HopfAutomorphismPair& p, const ModuleWitness& m) {
  const LegMap act = m.right_act(), rho = m.right_coact();
  return check_identity(
      "Yetter-Drinfeld ρ(mh)=m₍₀₎α(h₂₁)⊗φ′(S(h₁))(α⁻¹(m₍₁₎)φ(h₂₂))", {m.dim(), p.hopf.dim()},
      p.hopf.field(), [&](const Tensor& x) { return x.on(0, act).on(0, rho); },
      [&](const Tensor& x) { return yd_rhs(p, m, x); });
}

}  // namespace

CheckResult check_yd_module(const HopfAutomorphismPair& p, const ModuleWitness& m) {
  return first_failure({
      [&] { return module_and_comodule(p.hopf.algebra(), p.hopf.coalgebra(), m); },
      [&] { return yd_direct(p, m); },
  });
}

YdConditions check_yd_equivalent_condition(const HopfAutomorphismPair& p, const ModuleWitness& m) {
  const HomHopfAlgebra& h = p.hopf;
  const std::size_t n = h.dim();
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  if (!module_and_comodule(a, c, m))
    throw PreconditionFailed("witness is not a right module and right comodule");
  const LegMap act = m.right_act(), rho = m.right_coact();
  const LegMap phi = leg(p.phi, {n}, {n}), varphi = leg(p.varphi, {n}, {n});
  CheckResult equivalent = check_identity(
      "equivalent form m₍₀₎α⁻¹(h₁)⊗m₍₁₎φ(α⁻¹(h₂))=(mh₂)₍₀₎⊗α⁻¹(φ′(h₁)(mh₂)₍₁₎)",
      {m.dim(), n}, h.field(),
      [&](const Tensor& x) {
        return x.on(0, rho)
            .on(2, c.delta())
            .permuted({0, 2, 1, 3})
            .on(1, a.a(-1))
            .on(3, a.a(-1))
            .on(3, phi)
            .on(0, act)
            .on(1, a.m());
      },
      [&](const Tensor& x) {
        return x.on(1, c.delta())
            .permuted({0, 2, 1})
            .on(0, act)
            .on(0, rho)
            .on(2, varphi)
            .permuted({0, 2, 1})
            .on(1, a.m())
            .on(1, a.a(-1));
      });
  return {yd_direct(p, m), std::move(equivalent)};
}

EntwiningStructure long_entwining(const HomBialgebra& h) {
  return flip_entwining(h.algebra(), h.coalgebra());
}

DoiKoppinenDatum long_datum(const HomBialgebra& h) {
  const std::size_t n = h.dim();
  LinearMap action = tabulate({n, n}, {n}, h.field(), [&](const Tensor& x) {
    return x.on(1, h.coalgebra().eps()).on(0, h.algebra().a());
  });
  return {h, h.algebra(), h.coalgebra().comult(), h.coalgebra(), std::move(action)};
}

CheckResult check_long_module(const HomBialgebra& h, const ModuleWitness& m) {
  const HomAlgebra& a = h.algebra();
  const CheckResult specific = first_failure({
      [&] { return module_and_comodule(a, h.coalgebra(), m); },
      [&] {
        const LegMap act = m.right_act(), rho = m.right_coact();
        return check_identity(
            "Long ρ(mh)=m₍₀₎α⁻¹(h)⊗α(m₍₁₎)", {m.dim(), h.dim()}, h.field(),
            [&](const Tensor& x) { return x.on(0, act).on(0, rho); },
            [&](const Tensor& x) {
              return x.on(0, rho).on(2, a.a(-1)).permuted({0, 2, 1}).on(0, act).on(1, a.a());
            });
      },
  });
  return both_agree(specific, check_entwined_module(long_entwining(h), m));
}

EntwiningStructure entwining_from_alt_dk(const AlternativeDKDatum& d) {
  const std::size_t da = d.algebra.dim(), dc = d.coalgebra.dim(), db = d.bialgebra.dim();
  const LegMap act = leg(d.action, {db, da}, {da}), coact = leg(d.coaction, {dc}, {db, dc});
  LinearMap psi = tabulate({dc, da}, {da, dc}, d.algebra.field(), [&](const Tensor& x) {
    return x.on(0, coact)
        .on(2, d.algebra.a(-1))
        .permuted({0, 2, 1})
        .on(0, act)
        .on(1, d.coalgebra.g());
  });
  return make_entwining(d.algebra, d.coalgebra, std::move(psi));
}

CheckResult check_alt_dk_module(const AlternativeDKDatum& d, const ModuleWitness& m) {
  const std::size_t da = d.algebra.dim(), dc = d.coalgebra.dim(), db = d.bialgebra.dim();
  const LegMap act_a = leg(d.action, {db, da}, {da}), coact = leg(d.coaction, {dc}, {db, dc});
  const CheckResult specific = first_failure({
      [&] { return module_and_comodule(d.algebra, d.coalgebra, m); },
      [&] {
        const LegMap act = m.right_act(), rho = m.right_coact();
        return check_identity(
            "alternative Doi-Koppinen ρ(ma)=m₀(m₁₍₋₁₎·α⁻²(a))⊗γ²(m₁₍₀₎)", {m.dim(), da},
            d.algebra.field(), [&](const Tensor& x) { return x.on(0, act).on(0, rho); },
            [&](const Tensor& x) {
              return x.on(0, rho)
                  .on(1, coact)
                  .on(3, d.algebra.a(-2))
                  .permuted({0, 1, 3, 2})
                  .on(1, act_a)
                  .on(0, act)
                  .on(1, d.coalgebra.g(2));
            });
      },
  });
  return both_agree(specific, check_entwined_module(entwining_from_alt_dk(d), m));
}

LinearMap dk_coring_right_action(const DoiKoppinenDatum& d) {
  const std::size_t da = d.algebra.dim(), dc = d.coalgebra.dim(), db = d.bialgebra.dim();
  const LegMap rho = leg(d.coaction, {da}, {da, db}), act = leg(d.action, {dc, db}, {dc});
  return tabulate({da, dc, da}, {da, dc}, d.algebra.field(), [&](const Tensor& x) {
    return x.on(2, rho).permuted({0, 2, 1, 3}).on(0, d.algebra.m()).on(1, act);
  });
}

LinearMap yd_coring_right_action(const HopfAutomorphismPair& p) {
  const HomHopfAlgebra& h = p.hopf;
  const std::size_t n = h.dim();
  const HomAlgebra& a = h.algebra();
  const HomCoalgebra& c = h.coalgebra();
  // (h, h′, g₁, g₂₁, g₂₂) → (h, g₂₁, g₁, h′, g₂₂)
  return tabulate({n, n, n}, {n, n}, h.field(), [&](const Tensor& x) {
    return x.on(2, c.delta())
        .on(3, c.delta())
        .permuted({0, 3, 2, 1, 4})
        .on(1, a.a())
        .on(0, a.m())
        .on(1, h.s())
        .on(1, leg(p.varphi, {n}, {n}))
        .on(2, a.a(-1))
        .on(3, leg(p.phi, {n}, {n}))
        .on(2, a.m())
        .on(1, a.m());
  });
}

LinearMap long_coring_right_action(const HomBialgebra& h) {
  const std::size_t n = h.dim();
  const HomAlgebra& a = h.algebra();
  return tabulate({n, n, n}, {n, n}, h.field(), [&](const Tensor& x) {
    return x.on(2, a.a(-1)).permuted({0, 2, 1}).on(0, a.m()).on(1, a.a());
  });
}

LinearMap alt_dk_coring_right_action(const AlternativeDKDatum& d) {
  const std::size_t da = d.algebra.dim(), dc = d.coalgebra.dim(), db = d.bialgebra.dim();
  const LegMap act = leg(d.action, {db, da}, {da}), coact = leg(d.coaction, {dc}, {db, dc});
  // (a′, c, a) → (a′, b, c₀, a) → (a′, b, α⁻²a, c₀)
  return tabulate({da, dc, da}, {da, dc}, d.algebra.field(), [&](const Tensor& x) {
    return x.on(1, coact)
        .on(3, d.algebra.a(-2))
        .permuted({0, 1, 3, 2})
        .on(1, act)
        .on(0, d.algebra.m())
        .on(1, d.coalgebra.g(2));
  });
}

}  // namespace homalg
