#pragma once

#include <optional>

#include "homalg/check.hpp"
#include "homalg/linear_map.hpp"
#include "homalg/quotient.hpp"
#include "homalg/tensor.hpp"

namespace homalg {

/// a^k for square invertible a; negative k uses the inverse.
LinearMap power(const LinearMap& a, int k);

/// (A, α): mult is dim × dim² with column i*dim + j holding e_i·e_j, unit is
/// dim × 1 and alpha is an automorphism.
class HomAlgebra {
 public:
  HomAlgebra(LinearMap mult, LinearMap unit, LinearMap alpha);
  /// The ground field k as a one-dimensional algebra with α = id.
  static HomAlgebra ground(Field field);

  std::size_t dim() const { return dim_; }
  Field field() const { return mult_.field(); }
  const LinearMap& mult() const { return mult_; }
  const LinearMap& unit() const { return unit_; }
  const LinearMap& alpha() const { return alpha_; }
  const LinearMap& alpha_inv() const { return alpha_inv_; }

  LegMap m() const { return LegMap(mult_, {dim_, dim_}, {dim_}); }
  LegMap eta() const { return LegMap(unit_, {}, {dim_}); }
  LegMap a(int k = 1) const;

 private:
  std::size_t dim_;
  LinearMap mult_, unit_, alpha_, alpha_inv_;
};

/// (C, γ): comult is dim² × dim with row j*dim + k holding the coefficient
/// of e_j⊗e_k, counit is 1 × dim.
class HomCoalgebra {
 public:
  HomCoalgebra(LinearMap comult, LinearMap counit, LinearMap gamma);

  std::size_t dim() const { return dim_; }
  Field field() const { return comult_.field(); }
  const LinearMap& comult() const { return comult_; }
  const LinearMap& counit() const { return counit_; }
  const LinearMap& gamma() const { return gamma_; }
  const LinearMap& gamma_inv() const { return gamma_inv_; }

  LegMap delta() const { return LegMap(comult_, {dim_}, {dim_, dim_}); }
  LegMap eps() const { return LegMap(counit_, {dim_}, {}); }
  LegMap g(int k = 1) const;

 private:
  std::size_t dim_;
  LinearMap comult_, counit_, gamma_, gamma_inv_;
};

/// Algebra and coalgebra on one space with one automorphism.
class HomBialgebra {
 public:
  HomBialgebra(HomAlgebra algebra, HomCoalgebra coalgebra);

  std::size_t dim() const { return algebra_.dim(); }
  Field field() const { return algebra_.field(); }
  const HomAlgebra& algebra() const { return algebra_; }
  const HomCoalgebra& coalgebra() const { return coalgebra_; }
  const LinearMap& alpha() const { return algebra_.alpha(); }

 private:
  HomAlgebra algebra_;
  HomCoalgebra coalgebra_;
};

class HomHopfAlgebra {
 public:
  HomHopfAlgebra(HomBialgebra bialgebra, LinearMap antipode);

  std::size_t dim() const { return bialgebra_.dim(); }
  Field field() const { return bialgebra_.field(); }
  const HomBialgebra& bialgebra() const { return bialgebra_; }
  const HomAlgebra& algebra() const { return bialgebra_.algebra(); }
  const HomCoalgebra& coalgebra() const { return bialgebra_.coalgebra(); }
  const LinearMap& antipode() const { return antipode_; }
  LegMap s() const { return LegMap(antipode_, {dim()}, {dim()}); }

 private:
  HomBialgebra bialgebra_;
  LinearMap antipode_;
};

/// A candidate (M, μ) with any of the four one-sided (co)actions. Actions are
/// dim × (dim·n) for the right side (column m*n + a) and dim × (n·dim) for
/// the left side (column a*dim + m); coactions are the transposed shapes
/// M → M⊗C and M → C⊗M. Which slots are filled determines sidedness.
struct ModuleWitness {
  explicit ModuleWitness(LinearMap mu);

  std::size_t dim() const { return mu.rows(); }
  Field field() const { return mu.field(); }

  LegMap m(int k = 1) const;
  LegMap right_act() const;
  LegMap left_act() const;
  LegMap right_coact() const;
  LegMap left_coact() const;

  LinearMap mu, mu_inv;
  std::optional<LinearMap> right_action, left_action, right_coaction, left_coaction;
};

struct AlgebraMorphism {
  HomAlgebra source;
  HomAlgebra target;
  LinearMap matrix;
};

CheckResult check_hom_algebra(const HomAlgebra& a);
CheckResult check_hom_coalgebra(const HomCoalgebra& c);
CheckResult check_hom_bialgebra(const HomBialgebra& b);
CheckResult check_antipode(const HomHopfAlgebra& h);
CheckResult check_algebra_morphism(const AlgebraMorphism& f);

CheckResult check_right_module(const HomAlgebra& a, const ModuleWitness& m);
CheckResult check_left_module(const HomAlgebra& a, const ModuleWitness& m);
/// Left A-action and right B-action plus (am)β(b) = α(a)(mb).
CheckResult check_bimodule(const HomAlgebra& a, const HomAlgebra& b, const ModuleWitness& m);
/// f: M → N commutes with μ and both actions, and (a f(m))β(b) = α(a)(f(m) b).
CheckResult check_bimodule_morphism(const HomAlgebra& a, const HomAlgebra& b,
                                    const ModuleWitness& m, const ModuleWitness& n,
                                    const LinearMap& f);
CheckResult check_right_comodule(const HomCoalgebra& c, const ModuleWitness& m);
CheckResult check_left_comodule(const HomCoalgebra& c, const ModuleWitness& m);

/// ρ: A → A⊗B is a right coaction and an algebra morphism.
CheckResult check_comodule_algebra(const HomBialgebra& b, const HomAlgebra& a,
                                   const LinearMap& coaction);
/// C⊗B → C is a right action and a coalgebra morphism.
CheckResult check_module_coalgebra(const HomBialgebra& b, const HomCoalgebra& c,
                                   const LinearMap& action);
/// B⊗A → A is a left action with b·(aa') = (b₁·a)(b₂·a') and b·1 = ε(b)1.
CheckResult check_module_algebra(const HomBialgebra& b, const HomAlgebra& a,
                                 const LinearMap& action);
/// C → B⊗C is a left coaction compatible with Δ_C and ε_C.
CheckResult check_comodule_coalgebra(const HomBialgebra& b, const HomCoalgebra& c,
                                     const LinearMap& coaction);

ModuleWitness regular_right_module(const HomAlgebra& a);
ModuleWitness regular_left_module(const HomAlgebra& a);
ModuleWitness regular_bimodule(const HomAlgebra& a);
ModuleWitness regular_right_comodule(const HomCoalgebra& c);
ModuleWitness regular_left_comodule(const HomCoalgebra& c);
/// B as an (A, A)-bimodule along f: a·b = f(a)b and b·a = b f(a).
ModuleWitness bimodule_along(const AlgebraMorphism& f);

/// M ⊗_A N: the quotient of M⊗N by ma⊗n − μ(m)⊗aν⁻¹(n), with the
/// automorphism induced by μ⊗ν.
struct BalancedTensor {
  QuotientSpace space;
  LinearMap automorphism;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;

  std::size_t dim() const { return space.dim(); }
  LegMap projection() const { return LegMap::projection(space, {left_dim, right_dim}); }
  LegMap section() const;
  /// The quotient as a witness carrying only its automorphism.
  ModuleWitness witness() const { return ModuleWitness(automorphism); }
};

BalancedTensor tensor_over_A(const HomAlgebra& a, const ModuleWitness& m, const ModuleWitness& n);

/// d(m⊗n) = δ⁻¹(d)m ⊗ ν(n), for M carrying a left D-action.
LinearMap induced_left_action(const BalancedTensor& t, const HomAlgebra& d,
                              const ModuleWitness& m, const ModuleWitness& n);
/// (m⊗n)d = μ(m) ⊗ nδ⁻¹(d), for N carrying a right D-action.
LinearMap induced_right_action(const BalancedTensor& t, const HomAlgebra& d,
                               const ModuleWitness& m, const ModuleWitness& n);

/// Induces a map on a quotient leg: `flat` acts on tensors of shape
/// extra ⊗ ambient (or ambient ⊗ extra) and lands in `target`'s ambient
/// space. Throws NonDescendingMap if a relation is not killed.
LinearMap descend_with_extra(const QuotientSpace& source, const Dims& source_legs,
                             std::size_t extra, bool extra_on_left,
                             const QuotientSpace& target, const TensorFn& flat);

/// Opposite algebra: same unit and α, mult ∘ τ.
HomAlgebra opposite(const HomAlgebra& a);
HomAlgebra tensor_algebra(const HomAlgebra& a, const HomAlgebra& b);
HomBialgebra tensor_bialgebra(const HomBialgebra& a, const HomBialgebra& b);

/// Twists a classical bialgebra (α = id) by a bialgebra automorphism:
/// mult' = twist ∘ mult, comult' = comult ∘ twist⁻¹, α = twist.
HomBialgebra yau_twist(const HomBialgebra& classical, const LinearMap& twist);
HomHopfAlgebra yau_twist(const HomHopfAlgebra& classical, const LinearMap& twist);

}  // namespace homalg
