#pragma once

#include "homalg/hom_structures.hpp"

namespace homalg::examples {

/// k as a Hopf algebra of dimension 1.
HomHopfAlgebra ground_hopf(Field field = Field::rational());

/// k[Z/n] with basis g^0, …, g^{n-1}, grouplike comultiplication and
/// S(g^i) = g^{-i}; α = id.
HomHopfAlgebra cyclic_group_algebra(std::size_t n, Field field = Field::rational());

/// The automorphism g^i ↦ g^{ik} of k[Z/n] (k must be a unit mod n).
LinearMap cyclic_power_map(std::size_t n, std::size_t k, Field field = Field::rational());

/// Sweedler's four-dimensional Hopf algebra with basis 1, g, x, gx,
/// g² = 1, x² = 0, xg = −gx, Δx = x⊗1 + g⊗x; α = id.
HomHopfAlgebra sweedler_h4(Field field = Field::rational());

/// The Hopf automorphism of H4 fixing 1, g and scaling x, gx by λ.
LinearMap h4_scaling(const Scalar& lambda);

/// H4 twisted by h4_scaling(2).
HomHopfAlgebra twisted_h4(Field field = Field::rational());

/// k[Z/3] twisted by g ↦ g².
HomHopfAlgebra twisted_z3(Field field = Field::rational());

/// The coalgebra dual to the algebra k^{Z/n}: basis e_0, …, e_{n-1},
/// Δ(e_i) = Σ_{j+k≡i} e_j⊗e_k, ε(e_i) = δ_{i0}, γ = id.
HomCoalgebra cyclic_function_coalgebra(std::size_t n, Field field = Field::rational());

/// The left k[Z/n]-coaction e_i ↦ g^i⊗e_i on cyclic_function_coalgebra(n).
LinearMap degree_coaction(std::size_t n, Field field = Field::rational());

/// The left k[Z/2]-action on k[Z/2] by the automorphism g ↦ −g.
LinearMap sign_action_z2(Field field = Field::rational());

}  // namespace homalg::examples
