#pragma once

#include "homalg/linear_map.hpp"

// Classical (untwisted) axiom checkers written with explicit index loops over
// structure constants. They share only scalar and matrix storage with the
// library and serve as an independent reference at α = id.
namespace oracle {

using homalg::LinearMap;

struct Algebra {
  LinearMap m;  // d × d², column i*d + j
  LinearMap u;  // d × 1
};

struct Coalgebra {
  LinearMap d;  // d² × d, row j*d + k
  LinearMap e;  // 1 × d
};

/// A right module and right comodule.
struct Dimodule {
  LinearMap act;  // n × n·da, column x*da + a
  LinearMap rho;  // n·dc × n, row x*dc + c
};

bool algebra(const Algebra& a);
bool coalgebra(const Coalgebra& c);
bool bialgebra(const Algebra& a, const Coalgebra& c);
bool antipode(const Algebra& a, const Coalgebra& c, const LinearMap& s);

bool right_module(const Algebra& a, const LinearMap& act);
bool right_comodule(const Coalgebra& c, const LinearMap& rho);

/// ρ: A → A⊗B an algebra map and a right coaction.
bool comodule_algebra(const Algebra& b, const Coalgebra& bc, const Algebra& a, const LinearMap& rho);
/// C⊗B → C a coalgebra map and a right action.
bool module_coalgebra(const Algebra& b, const Coalgebra& bc, const Coalgebra& c,
                      const LinearMap& act);
/// B⊗A → A (column b*da + a) with b·(aa') = (b₁·a)(b₂·a'), b·1 = ε(b)1.
bool module_algebra(const Algebra& b, const Coalgebra& bc, const Algebra& a, const LinearMap& act);
/// C → B⊗C (row b*dc + c) compatible with Δ_C and ε_C.
bool comodule_coalgebra(const Algebra& b, const Coalgebra& bc, const Coalgebra& c,
                        const LinearMap& rho);

/// ψ: C⊗A → A⊗C (column c*da + a, row a*dc + c).
bool entwining(const Algebra& a, const Coalgebra& c, const LinearMap& psi);
/// (f∗g)(c) = f(c₂)_κ g(c₁^κ) for maps C → A (column c), by explicit loops.
LinearMap convolution(const Algebra& a, const Coalgebra& c, const LinearMap& psi, const LinearMap& f,
                      const LinearMap& g);
bool entwined_module(const Algebra& a, const Coalgebra& c, const LinearMap& psi, const Dimodule& m);

/// ρ(ma) = m₀a₀⊗m₁a₁ for A → A⊗B and C⊗B → C.
bool dk_module(const Algebra& a, const Coalgebra& c, const LinearMap& coaction,
               const LinearMap& action, std::size_t db, const Dimodule& m);
/// ρ(mh) = m₀h₂₁⊗φ′(S(h₁))(m₁φ(h₂₂)).
bool yd_module(const Algebra& h, const Coalgebra& hc, const LinearMap& s, const LinearMap& phi,
               const LinearMap& varphi, const Dimodule& m);
/// ρ(mh) = m₀h⊗m₁.
bool long_module(const Algebra& h, const Coalgebra& hc, const Dimodule& m);
/// ρ(ma) = m₀(m₁₍₋₁₎·a)⊗m₁₍₀₎ for B⊗A → A and C → B⊗C.
bool alt_dk_module(const Algebra& a, const Coalgebra& c, const LinearMap& action,
                   const LinearMap& coaction, std::size_t db, const Dimodule& m);

}  // namespace oracle
