#include <random>

#include "doctest.h"
#include "homalg/doi_koppinen.hpp"
#include "homalg/errors.hpp"
#include "homalg/examples.hpp"
#include "homalg/witnesses.hpp"
#include "oracle/classical.hpp"

using namespace homalg;
using namespace homalg::examples;

namespace {
const Field Q = Field::rational();

EntwiningStructure flip_z2() {
  const HomHopfAlgebra h = cyclic_group_algebra(2);
  return flip_entwining(h.algebra(), h.coalgebra());
}

EntwiningStructure dk_self_h4() {
  const HomHopfAlgebra h = twisted_h4();
  return dual_relative_entwining(h.bialgebra(), h.coalgebra(), h.algebra().mult());
}

ModuleWitness coring_as_comodule(const HomCoring& c) {
  ModuleWitness m = c.bimodule;
  m.right_coaction = c.comult_lift;
  return m;
}

// (f∗g)(c) = Σ f(c₂)_κ g(c₁^κ) summed over matrix entries directly.
}  // namespace

TEST_CASE("flip and doubled flip") {
  const EntwiningStructure e = flip_z2();
  CHECK(check_entwining(e));
  const EntwiningStructure bad = make_entwining(e.algebra, e.coalgebra, e.psi * Q.from_int(2));
  const auto res = check_entwining(bad);
  CHECK_FALSE(res);
  CHECK(res.identity().find("unit") != std::string::npos);
}

TEST_CASE("entwinings from Doi-Koppinen data pass") {
  CHECK(check_entwining(dk_self_h4()));
  const HomHopfAlgebra z3 = twisted_z3();
  CHECK(check_entwining(relative_entwining(z3.bialgebra(), z3.algebra(), z3.coalgebra().comult())));
}

TEST_CASE("associated coring") {
  const EntwiningStructure e = flip_z2();
  const HomCoring c = coring_from_entwining(e);
  CHECK(c.dim() == 4);
  CHECK(check_coring(c));
  // (a'⊗c)a = a'a⊗c for the flip; g⊗g times g is 1⊗g
  const Vector v = c.bimodule.right_action->column((1 * 2 + 1) * 2 + 1);
  CHECK(v[0 * 2 + 1].is_one());
  CHECK(check_coring(coring_from_entwining(dk_self_h4())));
}

TEST_CASE("coring round trip recovers ψ") {
  for (const auto& e : {flip_z2(), dk_self_h4()}) {
    const HomCoring c = coring_from_entwining(e);
    const EntwiningStructure back = entwining_from_coring(c, e.algebra, e.coalgebra);
    CHECK(back.psi == e.psi);
  }
  const EntwiningStructure e = flip_z2();
  const HomCoring c = coring_from_entwining(e);
  LinearMap counit = c.counit;
  counit.entries()[0] += Q.one();
  const HomCoring bad = make_coring(c.base, c.chi(), *c.bimodule.left_action,
                                    *c.bimodule.right_action, c.comult_lift, counit);
  CHECK_THROWS_AS(entwining_from_coring(bad, e.algebra, e.coalgebra), NotStandardForm);
}

TEST_CASE("entwined modules and coring comodules correspond") {
  for (const auto& e : {flip_z2(), dk_self_h4()}) {
    const HomCoring c = coring_from_entwining(e);
    const ModuleWitness base = entwined_from_comodule(e, coring_as_comodule(c));
    REQUIRE(check_entwined_module(e, base));
    const ModuleWitness lifted = comodule_from_entwined(e, base);
    CHECK(check_comodule_over_coring(c, lifted));
    const ModuleWitness again = entwined_from_comodule(e, lifted);
    CHECK(*again.right_coaction == *base.right_coaction);

    const ModuleWitness bad = witnesses::bump_coaction(base, 3);
    CHECK_FALSE(check_entwined_module(e, bad));
    CHECK_FALSE(check_comodule_over_coring(c, comodule_from_entwined(e, bad)));
  }
}

TEST_CASE("Koppinen product matches a loop convolution") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (const auto& e : {flip_z2(), dk_self_h4()}) {
    const KoppinenAlgebra k = koppinen_smash(e);
    CHECK(check_map_algebra(k));
    for (int trial = 0; trial < 5; ++trial) {
      LinearMap f(e.algebra.dim(), e.coalgebra.dim(), Q), g = f;
      for (const auto& b : k.basis) {
        f += b * Q.from_int(coeff(rng));
        g += b * Q.from_int(coeff(rng));
      }
      CHECK(koppinen_product(e, f, g) == oracle::convolution({e.algebra.mult(), e.algebra.unit()}, {e.coalgebra.comult(), e.coalgebra.counit()}, e.psi, f, g));
    }
  }
}

TEST_CASE("Koppinen smash is anti-isomorphic to the left dual") {
  CHECK(check_koppinen_anti_isomorphism(flip_z2()));
  CHECK(check_koppinen_anti_isomorphism(dk_self_h4()));
  CHECK_FALSE(check_koppinen_anti_isomorphism(dk_self_h4(), true));
}
