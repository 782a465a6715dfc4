#pragma once

#include <vector>

#include "homalg/hom_structures.hpp"

namespace homalg {

/// An (A, α)-Hom-coring (C, χ). Δ is stored as an ambient lift C → C⊗C and
/// is only ever compared after projection into the balanced square C⊗_A C.
struct HomCoring {
  HomAlgebra base;
  ModuleWitness bimodule;  // μ = χ, left and right A-actions
  BalancedTensor square;   // C ⊗_A C
  LinearMap comult_lift;   // dim² × dim
  LinearMap counit;        // base.dim() × dim

  std::size_t dim() const { return bimodule.dim(); }
  Field field() const { return base.field(); }
  const LinearMap& chi() const { return bimodule.mu; }
  /// Δ as a map C → C⊗_A C.
  LinearMap comult() const;
  LegMap lift() const { return LegMap(comult_lift, {dim()}, {dim(), dim()}); }
  LegMap eps() const { return LegMap(counit, {dim()}, {base.dim()}); }
};

/// Assembles a coring and builds C⊗_A C from the bimodule structure.
HomCoring make_coring(HomAlgebra base, LinearMap chi, LinearMap left_action,
                      LinearMap right_action, LinearMap comult_lift, LinearMap counit);

/// C⊗_A C carrying the induced left and right A-actions.
ModuleWitness square_witness(const HomCoring& c);
/// C ⊗_A (C ⊗_A C), the space where coassociativity is compared.
BalancedTensor cube(const HomCoring& c);

CheckResult check_coring(const HomCoring& c);

/// Carrier A, χ = α, regular actions, Δ(a) = α⁻¹(a)⊗1, ε = id.
HomCoring trivial_coring(const HomAlgebra& a);

/// The Sweedler coring A⊗_B A of φ: B → A with Δ(a⊗a') =
/// (α⁻¹(a)⊗1)⊗(1⊗α⁻¹(a')) and ε(a⊗a') = aa'.
HomCoring sweedler_coring(const AlgebraMorphism& phi);

/// (B⊗_A C)⊗_A B for φ: A → B, with the comultiplication
/// ((β⁻¹(b)⊗c₁)⊗1)⊗((1⊗c₂)⊗β⁻¹(b')) and counit (bφ(ε(c)))b'.
HomCoring base_ring_extension(const HomCoring& c, const AlgebraMorphism& phi);

/// Builds the identification maps A → A⊗_B B, a ↦ α⁻¹(a)⊗1 and
/// A⊗_B B → A, a⊗b ↦ aφ(b), asserts they are mutually inverse, and checks
/// that the induced isomorphism (A⊗_B B)⊗_B A ≅ A⊗_B A carries the
/// base-ring-extension coring of trivial_coring(B) onto sweedler_coring(φ).
CheckResult check_sweedler_identification(const AlgebraMorphism& phi);

/// M with a right A-action and a right coaction stored as a lift
/// M → M⊗C (right_coaction of shape dim·dim_C × dim).
CheckResult check_comodule_over_coring(const HomCoring& c, const ModuleWitness& m);

/// The projection of a lifted coaction into M⊗_A C.
BalancedTensor comodule_target(const HomCoring& c, const ModuleWitness& m);

enum class DualSide { Left, Right, TwoSided };

const char* to_string(DualSide side);

/// Solutions of a homogeneous linear system on maps, one basis element per
/// free entry.
struct ConstrainedMaps {
  std::vector<LinearMap> basis;
  std::vector<std::size_t> free_positions;
};

/// A finite-dimensional algebra of linear maps C → A given by a basis of
/// maps, a structure-constant table and the coordinates of its unit.
struct MapAlgebra {
  std::vector<LinearMap> basis;
  /// Ambient positions (row*cols + col of the map) whose entries are the
  /// coordinates of an element in `basis`.
  std::vector<std::size_t> coordinate_positions;
  LinearMap mult_table;  // n × n²
  LinearMap unit;        // n × 1

  std::size_t dim() const { return basis.size(); }
  /// Coordinates of f in the basis; throws NotClosed if f is outside the span.
  Vector coordinates(const LinearMap& f) const;
  LinearMap element(const Vector& coords) const;
};

/// Tabulates `product` on the basis of `maps` and reads off the unit.
MapAlgebra make_map_algebra(ConstrainedMaps maps,
                            const std::function<LinearMap(const LinearMap&, const LinearMap&)>& product,
                            const LinearMap& unit, Field field);

/// One of *C, C*, *C*: A-linear maps C → A commuting with the automorphisms,
/// with the matching convolution product and unit ε_C.
struct DualAlgebra : MapAlgebra {
  DualSide side = DualSide::Left;
};

/// Evaluates the product of the chosen side on two maps C → A.
LinearMap dual_product(const HomCoring& c, DualSide side, const LinearMap& f, const LinearMap& g);

DualAlgebra dual_algebra(const HomCoring& c, DualSide side);

/// Associativity and two-sided unit laws of the mult table.
CheckResult check_dual_algebra(const DualAlgebra& d);

/// Associativity and unit laws of a map algebra.
CheckResult check_map_algebra(const MapAlgebra& d);

/// Solves {f : constraints(f) = 0} for maps of shape rows × cols.
ConstrainedMaps solve_map_constraints(std::size_t rows, std::size_t cols, Field field,
                                      const std::function<Vector(const LinearMap&)>& constraints);

/// Associativity and unit laws for a structure-constant algebra (plain, α = id).
CheckResult check_associative_unital(const LinearMap& mult, const LinearMap& unit);

}  // namespace homalg
