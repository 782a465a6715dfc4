#include "doctest.h"

#include "homalg/errors.hpp"
#include "homalg/examples.hpp"
#include "homalg/hom_corings.hpp"

using namespace homalg;
using namespace homalg::examples;

namespace {
const Field Q = Field::rational();

AlgebraMorphism unit_map(const HomAlgebra& a) {
  return {HomAlgebra::ground(a.field()), a, a.unit()};
}

AlgebraMorphism identity_map(const HomAlgebra& a) {
  return {a, a, LinearMap::identity(a.dim(), a.field())};
}

ModuleWitness coring_as_comodule(const HomCoring& c) {
  ModuleWitness m = c.bimodule;
  m.right_coaction = c.comult_lift;
  return m;
}

HomCoring with_counit(const HomCoring& c, LinearMap counit) {
  return make_coring(c.base, c.chi(), *c.bimodule.left_action, *c.bimodule.right_action,
                     c.comult_lift, std::move(counit));
}
}  // namespace

TEST_CASE("trivial corings") {
  const HomAlgebra z2 = cyclic_group_algebra(2).algebra();
  const HomCoring c = trivial_coring(z2);
  CHECK(check_coring(c));
  CHECK(c.comult_lift(1 * 2 + 0, 1).is_one());  // Δ(g) = g⊗1
  CHECK(c.square.dim() == 2);

  const HomAlgebra z3 = twisted_z3().algebra();
  const HomCoring t = trivial_coring(z3);
  CHECK(check_coring(t));
  CHECK(t.comult_lift(2 * 3 + 0, 1).is_one());  // Δ(g) = α⁻¹(g)⊗1 = g²⊗1
  CHECK(check_coring(trivial_coring(twisted_h4().algebra())));
}

TEST_CASE("a doubled counit fails the counit law") {
  const HomCoring c = trivial_coring(cyclic_group_algebra(2).algebra());
  const auto res = check_coring(with_counit(c, LinearMap::identity(2, Q) * Q.from_int(2)));
  CHECK_FALSE(res);
  CHECK(res.identity().find("counit") != std::string::npos);
}

TEST_CASE("mutated comultiplication is detected") {
  const HomCoring c = trivial_coring(twisted_z3().algebra());
  for (std::size_t i = 0; i < c.comult_lift.entries().size(); ++i) {
    LinearMap lift = c.comult_lift;
    lift.entries()[i] += Q.one();
    const HomCoring m = make_coring(c.base, c.chi(), *c.bimodule.left_action,
                                    *c.bimodule.right_action, lift, c.counit);
    CHECK_FALSE(check_coring(m));
  }
}

TEST_CASE("Sweedler corings") {
  const HomAlgebra z2 = cyclic_group_algebra(2).algebra();
  const HomCoring s = sweedler_coring(unit_map(z2));
  CHECK(s.dim() == 4);
  CHECK(check_coring(s));
  // ε(g⊗g) = g² = 1; with no relations the carrier is the ambient tensor.
  CHECK(s.counit(0, 3).is_one());
  CHECK(s.counit(1, 3).is_zero());

  const HomCoring same = sweedler_coring(identity_map(z2));
  CHECK(same.dim() == 2);
  CHECK(check_coring(same));

  CHECK(check_coring(sweedler_coring(unit_map(twisted_h4().algebra()))));
  CHECK(check_coring(sweedler_coring(unit_map(twisted_z3().algebra()))));
}

TEST_CASE("base ring extension") {
  const HomAlgebra z2 = cyclic_group_algebra(2).algebra();
  const HomCoring c = trivial_coring(z2);
  const HomCoring e = base_ring_extension(c, identity_map(z2));
  CHECK(e.dim() == 2);
  CHECK(check_coring(e));

  const HomCoring k = trivial_coring(HomAlgebra::ground(Q));
  const HomCoring up = base_ring_extension(k, unit_map(twisted_z3().algebra()));
  CHECK(up.dim() == 9);
  CHECK(check_coring(up));

  const HomCoring sw = sweedler_coring(unit_map(z2));
  CHECK(check_coring(base_ring_extension(sw, identity_map(z2))));
}

TEST_CASE("Sweedler identification") {
  CHECK(check_sweedler_identification(unit_map(cyclic_group_algebra(2).algebra())));
  CHECK(check_sweedler_identification(unit_map(twisted_z3().algebra())));
  CHECK(check_sweedler_identification(identity_map(twisted_h4().algebra())));
}

TEST_CASE("comodules over corings") {
  const HomCoring c = trivial_coring(twisted_z3().algebra());
  CHECK(check_comodule_over_coring(c, coring_as_comodule(c)));
  const HomCoring s = sweedler_coring(unit_map(cyclic_group_algebra(2).algebra()));
  CHECK(check_comodule_over_coring(s, coring_as_comodule(s)));

  ModuleWitness bad = coring_as_comodule(c);
  (*bad.right_coaction) *= Q.from_int(2);
  CHECK_FALSE(check_comodule_over_coring(c, bad));
}

TEST_CASE("dual algebras") {
  const HomCoring c = trivial_coring(cyclic_group_algebra(2).algebra());
  for (auto side : {DualSide::Left, DualSide::Right, DualSide::TwoSided}) {
    const DualAlgebra d = dual_algebra(c, side);
    CHECK(check_dual_algebra(d));
    if (side != DualSide::TwoSided) CHECK(d.dim() == 2);
  }
  const HomCoring s = sweedler_coring(unit_map(twisted_z3().algebra()));
  for (auto side : {DualSide::Left, DualSide::Right, DualSide::TwoSided})
    CHECK(check_dual_algebra(dual_algebra(s, side)));
}

TEST_CASE("dual coordinates reject maps outside the subspace") {
  const HomCoring c = trivial_coring(cyclic_group_algebra(2).algebra());
  const DualAlgebra d = dual_algebra(c, DualSide::Left);
  LinearMap f(2, 2, Q);
  f(0, 1) = Q.one();  // not left A-linear
  CHECK_THROWS_AS(d.coordinates(f), NotClosed);
}
