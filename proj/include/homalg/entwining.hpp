#pragma once

#include "homalg/hom_corings.hpp"

namespace homalg {

/// A right-right entwining of (A, α) and (C, γ) by ψ: C⊗A → A⊗C, written
/// ψ(c⊗a) = a_κ⊗c^κ. The matrix has shape dim_A·dim_C × dim_C·dim_A.
struct EntwiningStructure {
  HomAlgebra algebra;
  HomCoalgebra coalgebra;
  LinearMap psi;

  LegMap psi_leg() const;
};

/// Shape check only; throws ShapeMismatch.
EntwiningStructure make_entwining(HomAlgebra algebra, HomCoalgebra coalgebra, LinearMap psi);

/// ψ(c⊗a) = a⊗c.
EntwiningStructure flip_entwining(const HomAlgebra& a, const HomCoalgebra& c);

/// The two successive applications of ψ used by the double-index identities.
/// `psi_twice_right` sends c⊗a⊗a' to a_κ⊗a'_λ⊗c^{κλ}; `psi_twice_left`
/// sends c⊗c'⊗a to a_{κλ}⊗c^λ⊗c'^κ.
Tensor psi_twice_right(const EntwiningStructure& e, const Tensor& x, std::size_t leg);
Tensor psi_twice_left(const EntwiningStructure& e, const Tensor& x, std::size_t leg);

CheckResult check_entwining(const EntwiningStructure& e);

/// The coring on A⊗C (index a·dim_C + c) with χ = α⊗γ.
HomCoring coring_from_entwining(const EntwiningStructure& e);

/// Reads ψ(c⊗a) = (1⊗γ⁻¹(c))a off the right action. Throws NotStandardForm
/// unless the carrier, χ, left action, Δ and ε are literally those built by
/// coring_from_entwining.
EntwiningStructure entwining_from_coring(const HomCoring& c, const HomAlgebra& a,
                                         const HomCoalgebra& coalgebra);

/// Right A-action, right C-coaction and ρ(ma) = m₀α⁻¹(a)_κ⊗γ(m₁^κ).
CheckResult check_entwined_module(const EntwiningStructure& e, const ModuleWitness& m);

/// m ↦ m₀⊗(1⊗γ⁻¹(m₁)) as a lift M → M⊗(A⊗C).
ModuleWitness comodule_from_entwined(const EntwiningStructure& e, const ModuleWitness& m);

/// The identification M⊗_A(A⊗C) → M⊗C, m⊗(a⊗c) ↦ μ⁻¹(m)a⊗γ(c), asserted
/// invertible.
LinearMap entwined_identification(const EntwiningStructure& e, const ModuleWitness& m);

/// Composes a coring coaction with the identification to get ρ: M → M⊗C.
ModuleWitness entwined_from_comodule(const EntwiningStructure& e, const ModuleWitness& w);

/// A⊗C as an entwined module: the associated coring as a comodule over
/// itself, translated along the identification.
ModuleWitness regular_entwined_module(const EntwiningStructure& e);

/// Maps f: C → A with fγ = αf under (f∗g)(c) = f(c₂)_κ g(c₁^κ), unit ηε.
struct KoppinenAlgebra : MapAlgebra {};

/// The product as displayed, or with the roles of f and g exchanged when
/// `swapped` is set (used to show that the order matters).
LinearMap koppinen_product(const EntwiningStructure& e, const LinearMap& f, const LinearMap& g,
                           bool swapped = false);

KoppinenAlgebra koppinen_smash(const EntwiningStructure& e, bool swapped = false);

/// Builds the left dual of the associated coring and Φ(ξ)(c) = ξ(1⊗γ⁻¹(c))
/// with inverse f ↦ (a⊗c ↦ af(c)), and checks that Φ is an
/// anti-isomorphism onto the Koppinen smash.
CheckResult check_koppinen_anti_isomorphism(const EntwiningStructure& e, bool swapped = false);

}  // namespace homalg
