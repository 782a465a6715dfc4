#include "doctest.h"

#include "homalg/errors.hpp"
#include "homalg/linear_map.hpp"
#include "homalg/quotient.hpp"

using namespace homalg;

TEST_CASE("scalars are exact rationals") {
  Field q = Field::rational();
  Scalar third = q.parse_scalar("1/3");
  CHECK(third + third + third == q.one());
  CHECK(q.parse_scalar("-4/6").to_string() == "-2/3");
  CHECK_THROWS_AS(q.zero().inverse(), DivisionByZero);
}

TEST_CASE("prime field arithmetic stays in canonical residues") {
  Field f = Field::prime(7);
  CHECK(f.from_int(-1).to_string() == "6");
  CHECK(f.from_int(3) * f.from_int(5) == f.from_int(1));
  CHECK(f.from_int(3).inverse() == f.from_int(5));
  CHECK(f.parse_scalar("1/2") == f.from_int(4));
  CHECK_THROWS_AS(Field::prime(8), FieldMismatch);
  CHECK_THROWS_AS(f.one() + Field::rational().one(), FieldMismatch);
}

TEST_CASE("row reduction of a rank-one matrix") {
  auto rr = row_reduce(LinearMap::from_int_rows({{2, 4}, {1, 2}}));
  CHECK(rr.reduced == LinearMap::from_int_rows({{1, 2}, {0, 0}}));
  CHECK(rr.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel of the sum functional") {
  auto ker = kernel_basis(LinearMap::from_int_rows({{1, 1}}));
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == Vector{Scalar(-1), Scalar(1)});
}

TEST_CASE("inverse of a unipotent matrix") {
  auto inv = invert(LinearMap::from_int_rows({{1, 1}, {0, 1}}));
  CHECK(inv == LinearMap::from_int_rows({{1, -1}, {0, 1}}));
  CHECK_THROWS_AS(invert(LinearMap::from_int_rows({{1, 2}, {2, 4}})), SingularMap);
  CHECK_THROWS_AS(invert(LinearMap::from_int_rows({{1, 2}})), SingularMap);
}

TEST_CASE("composition and kronecker product") {
  auto a = LinearMap::from_int_rows({{0, 1}, {1, 0}});
  CHECK((a * a).is_identity());
  auto k = kron(a, LinearMap::identity(2, Field::rational()));
  CHECK(k.rows() == 4);
  CHECK(k(2, 0).is_one());
  CHECK(k(0, 2).is_one());
  CHECK_THROWS_AS(a * LinearMap::from_int_rows({{1, 2, 3}}), ShapeMismatch);
}

TEST_CASE("quotient by a single relation") {
  auto q = build_quotient(2, {Vector{Scalar(1), Scalar(-1)}});
  CHECK(q.dim() == 1);
  auto p = q.projection();
  CHECK(p.column(0) == p.column(1));
  CHECK((p * q.section()).is_identity());
}

TEST_CASE("quotient edge cases") {
  auto none = build_quotient(3, {});
  CHECK(none.projection().is_identity());
  auto all = build_quotient(2, {Vector{Scalar(1), Scalar(0)}, Vector{Scalar(1), Scalar(1)}});
  CHECK(all.dim() == 0);
}

TEST_CASE("quotient invariants on random relation spans") {
  Field q = Field::rational();
  unsigned seed = 7;
  auto next = [&] { seed = seed * 1103515245u + 12345u; return static_cast<long>((seed >> 16) % 5) - 2; };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> rels;
    for (int r = 0; r < 4; ++r) {
      Vector v;
      for (int c = 0; c < 6; ++c) v.push_back(q.from_int(next()));
      rels.push_back(v);
    }
    auto qs = build_quotient(6, rels);
    CHECK(qs.dim() == 6 - rank(LinearMap::from_columns(6, rels, q)));
    CHECK((qs.projection() * qs.section()).is_identity());
    for (const auto& r : rels) CHECK(is_zero(qs.project(r)));
  }
}

TEST_CASE("row reduction is idempotent and kernels are exact") {
  unsigned seed = 11;
  auto next = [&] { seed = seed * 1103515245u + 12345u; return static_cast<long>((seed >> 16) % 7) - 3; };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<long>> rows(3, std::vector<long>(5));
    for (auto& r : rows)
      for (auto& e : r) e = next();
    auto m = LinearMap::from_int_rows(rows);
    auto rr = row_reduce(m);
    CHECK(row_reduce(rr.reduced).reduced == rr.reduced);
    auto ker = kernel_basis(m);
    CHECK(ker.size() == 5 - rr.pivots.size());
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("descend rejects maps that break relations") {
  auto q = build_quotient(2, {Vector{Scalar(1), Scalar(-1)}});
  auto swap = LinearMap::from_int_rows({{0, 1}, {1, 0}});
  CHECK(descend(swap, q, q).is_identity());
  auto bad = LinearMap::from_int_rows({{1, 0}, {0, 2}});
  CHECK_THROWS_AS(descend(bad, q, q), NonDescendingMap);
}
