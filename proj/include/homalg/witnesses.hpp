#pragma once

#include <random>

#include "homalg/hom_structures.hpp"

namespace homalg::witnesses {

/// H acting on itself by multiplication and coacting by Δ, μ = α.
ModuleWitness regular(const HomBialgebra& h);
/// H acting by multiplication with coaction m ↦ α⁻¹(m)⊗1.
ModuleWitness regular_action_trivial_coaction(const HomBialgebra& h);
/// H acting by m·h = α(m)ε(h) and coacting by Δ.
ModuleWitness trivial_action_regular_coaction(const HomBialgebra& h);
/// k with m·h = ε(h)m and m ↦ m⊗1.
ModuleWitness trivial(const HomBialgebra& h);

/// Block sum of the structures present in both witnesses.
ModuleWitness direct_sum(const ModuleWitness& a, const ModuleWitness& b);

/// Transports every structure along the invertible map t: M → M'.
ModuleWitness transport(const ModuleWitness& m, const LinearMap& t);

/// Keeps m's action and takes the coaction of `other` (same μ required).
ModuleWitness with_coaction_of(const ModuleWitness& m, const ModuleWitness& other);

/// A random invertible matrix with entries in [-2, 2] commuting with mu.
/// Throws PreconditionFailed if none is found in a bounded number of draws.
LinearMap random_centralizer(const LinearMap& mu, std::mt19937_64& rng);

/// A random invertible n × n integer matrix with integer inverse.
LinearMap random_invertible(std::size_t n, Field field, std::mt19937_64& rng);

/// Keeps m's action and conjugates its coaction by a random invertible map
/// commuting with μ. Usually breaks compatibility while keeping module and
/// comodule axioms.
ModuleWitness scrambled_coaction(const ModuleWitness& m, std::mt19937_64& rng);

struct FamilySizes {
  std::size_t transported = 0;
  std::size_t scrambled = 0;
  std::size_t bumped = 0;
};

/// The bases themselves, then transports along random invertible maps,
/// scrambled coactions and single-coefficient bumps, cycling through the
/// bases. Deterministic in the seed.
std::vector<ModuleWitness> random_family(const std::vector<ModuleWitness>& bases,
                                         std::uint64_t seed, FamilySizes sizes);

/// Adds one to the coaction coefficient at the given flat position.
ModuleWitness bump_coaction(const ModuleWitness& m, std::size_t position);

}  // namespace homalg::witnesses
