#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace oracle {

/// Outcome of comparing library verdicts with the classical checkers.
struct Tally {
  std::size_t compared = 0;
  std::size_t passes = 0;
  std::size_t failures = 0;
  std::vector<std::string> mismatches;
};

/// Runs every checker on classical structures of dimension at most 4, on
/// their single-coefficient mutations and on seeded random witnesses, and
/// compares each verdict with the matching classical checker.
Tally classical_degeneration(std::uint64_t seed);

}  // namespace oracle
