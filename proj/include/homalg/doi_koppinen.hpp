#pragma once

#include "homalg/entwining.hpp"

namespace homalg {

/// A right-right datum: (A, α) a right B-comodule algebra with coaction
/// A → A⊗B and (C, γ) a right B-module coalgebra with action C⊗B → C.
struct DoiKoppinenDatum {
  HomBialgebra bialgebra;
  HomAlgebra algebra;
  LinearMap coaction;
  HomCoalgebra coalgebra;
  LinearMap action;
};

/// (A, α) a left B-module algebra with action B⊗A → A and (C, γ) a left
/// B-comodule coalgebra with coaction C → B⊗C.
struct AlternativeDKDatum {
  HomBialgebra bialgebra;
  HomAlgebra algebra;
  LinearMap action;
  HomCoalgebra coalgebra;
  LinearMap coaction;
};

/// Two Hom-Hopf automorphisms φ, φ′ of H. φ′ acts on S(h₁) and φ on h₂₂ in
/// the Yetter-Drinfeld formulas.
struct HopfAutomorphismPair {
  HomHopfAlgebra hopf;
  LinearMap phi;
  LinearMap varphi;
};

CheckResult check_dk_datum(const DoiKoppinenDatum& d);
CheckResult check_alt_dk_datum(const AlternativeDKDatum& d);
/// Algebra and coalgebra morphism, commutes with α and S, invertible.
CheckResult check_hopf_automorphism(const HomHopfAlgebra& h, const LinearMap& f);
CheckResult check_automorphism_pair(const HopfAutomorphismPair& p);

/// ψ(c⊗a) = α(a₍₀₎)⊗γ⁻¹(c)a₍₁₎.
EntwiningStructure entwining_from_dk(const DoiKoppinenDatum& d);

/// Module, comodule and ρ(ma) = m₍₀₎a₍₀₎⊗m₍₁₎a₍₁₎. Fails with a dedicated
/// identity if this outcome ever differs from check_entwined_module on the
/// induced entwining.
CheckResult check_dk_module(const DoiKoppinenDatum& d, const ModuleWitness& m);

/// Datum [A, B, B] with B acting on itself by multiplication.
DoiKoppinenDatum relative_datum(const HomBialgebra& b, const HomAlgebra& a, const LinearMap& coaction);
EntwiningStructure relative_entwining(const HomBialgebra& b, const HomAlgebra& a,
                                      const LinearMap& coaction);
/// Datum [A, A, C] with A coacting on itself by Δ.
DoiKoppinenDatum dual_relative_datum(const HomBialgebra& a, const HomCoalgebra& c,
                                     const LinearMap& action);
EntwiningStructure dual_relative_entwining(const HomBialgebra& a, const HomCoalgebra& c,
                                           const LinearMap& action);

/// φ′ = S⁻² for the anti-Yetter-Drinfeld case; throws SingularMap if S is
/// not invertible.
LinearMap antipode_squared_inverse(const HomHopfAlgebra& h);

/// [H, H^op⊗H, H] with coaction h ↦ α(h₂₁)⊗(α⁻¹(φ′(S(h₁)))⊗h₂₂) and action
/// g·(h⊗k) = (hα⁻¹(g))φ(α(k)).
DoiKoppinenDatum yd_datum(const HopfAutomorphismPair& p);

/// ψ(g⊗h) = α²(h₂₁)⊗φ′(S(h₁))(α⁻²(g)φ(h₂₂)), computed directly.
EntwiningStructure yetter_drinfeld_entwining(const HopfAutomorphismPair& p);

/// Module, comodule and ρ(mh) = m₍₀₎α(h₂₁)⊗φ′(S(h₁))(α⁻¹(m₍₁₎)φ(h₂₂)).
CheckResult check_yd_module(const HopfAutomorphismPair& p, const ModuleWitness& m);

struct YdConditions {
  CheckResult direct;      // ρ(mh) = m₍₀₎α(h₂₁)⊗φ′(S(h₁))(α⁻¹(m₍₁₎)φ(h₂₂))
  CheckResult equivalent;  // m₍₀₎α⁻¹(h₁)⊗m₍₁₎φ(α⁻¹(h₂)) = (mh₂)₍₀₎⊗α⁻¹(φ′(h₁)(mh₂)₍₁₎)
};

/// Evaluates both compatibility forms independently. Throws
/// PreconditionFailed unless m is a right module and a right comodule.
YdConditions check_yd_equivalent_condition(const HopfAutomorphismPair& p, const ModuleWitness& m);

/// ψ = flip on H⊗H.
EntwiningStructure long_entwining(const HomBialgebra& h);
/// [H, H, H] with coaction Δ and trivial action g·h = α(g)ε(h).
DoiKoppinenDatum long_datum(const HomBialgebra& h);
/// Module, comodule and ρ(mh) = m₍₀₎α⁻¹(h)⊗α(m₍₁₎).
CheckResult check_long_module(const HomBialgebra& h, const ModuleWitness& m);

/// ψ(c⊗a) = c₍₋₁₎·α⁻¹(a)⊗γ(c₍₀₎).
EntwiningStructure entwining_from_alt_dk(const AlternativeDKDatum& d);
/// Module, comodule and ρ(ma) = m₀(m₁₍₋₁₎·α⁻²(a))⊗γ²(m₁₍₀₎).
CheckResult check_alt_dk_module(const AlternativeDKDatum& d, const ModuleWitness& m);

/// Right actions of the associated corings written out per specialization:
/// (a′⊗c)a = a′a₍₀₎⊗ca₍₁₎ for a datum,
/// (h⊗h′)g = hα(g₂₁)⊗φ′(S(g₁))(α⁻¹(h′)φ(g₂₂)) for Yetter-Drinfeld,
/// (h⊗h′)g = hα⁻¹(g)⊗α(h′) for Long and
/// (a′⊗c)a = a′(c₍₋₁₎·α⁻²(a))⊗γ²(c₍₀₎) for an alternative datum.
LinearMap dk_coring_right_action(const DoiKoppinenDatum& d);
LinearMap yd_coring_right_action(const HopfAutomorphismPair& p);
LinearMap long_coring_right_action(const HomBialgebra& h);
LinearMap alt_dk_coring_right_action(const AlternativeDKDatum& d);

}  // namespace homalg
