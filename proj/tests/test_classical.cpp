#include "doctest.h"

#include "oracle/degeneration.hpp"

TEST_CASE("checkers agree with classical checkers when every automorphism is the identity") {
  const oracle::Tally t = oracle::classical_degeneration(2024);
  for (const auto& m : t.mismatches) MESSAGE("verdicts differ: " << m);
  CHECK(t.mismatches.empty());
  CHECK(t.compared > 1000);
  CHECK(t.passes > 50);
  CHECK(t.failures > 500);
}
