#pragma once

// Seeded random generators shared by the property-style tests. Everything
// here is deterministic: same seed, same formulas.

#include <random>
#include <string>
#include <vector>

#include "conatus/formula.hpp"
#include "conatus/tendency.hpp"

namespace testgen {

inline conatus::Formula random_formula(std::mt19937& rng,
                                       const std::vector<std::string>& atoms,
                                       int max_depth, bool with_constants = true) {
  using conatus::Formula;
  std::uniform_int_distribution<int> shape(0, max_depth <= 0 ? 1 : 9);
  const int pick = shape(rng);
  if (max_depth <= 0 || pick <= 1) {
    if (with_constants && pick == 0 && std::uniform_int_distribution<int>(0, 4)(rng) == 0) {
      return Formula::constant(std::uniform_int_distribution<int>(0, 1)(rng) == 1);
    }
    std::uniform_int_distribution<std::size_t> which(0, atoms.size() - 1);
    return Formula::atom(atoms[which(rng)]);
  }
  switch (pick % 4) {
    case 0:
      return Formula::negate(random_formula(rng, atoms, max_depth - 1, with_constants));
    case 1:
      return Formula::conj(random_formula(rng, atoms, max_depth - 1, with_constants),
                           random_formula(rng, atoms, max_depth - 1, with_constants));
    case 2:
      return Formula::disj(random_formula(rng, atoms, max_depth - 1, with_constants),
                           random_formula(rng, atoms, max_depth - 1, with_constants));
    default:
      return Formula::implies(random_formula(rng, atoms, max_depth - 1, with_constants),
                              random_formula(rng, atoms, max_depth - 1, with_constants));
  }
}

inline std::vector<std::string> atom_pool(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

/// All structurally distinct formulas over `atoms` whose tree height is at
/// most `height` (an atom counts as height 1, operators add one level).
/// Structural dedup uses the canonical print form, which is injective on
/// structures because parse(print(f)) == f.
inline std::vector<conatus::Formula> enumerate_formulas(
    const std::vector<std::string>& atoms, int height, bool with_constants = false) {
  using conatus::Formula;
  std::vector<Formula> pool;
  std::set<std::string> seen;
  const auto add = [&](Formula f) {
    if (seen.insert(f.to_string()).second) pool.push_back(std::move(f));
  };
  for (const auto& a : atoms) add(Formula::atom(a));
  if (with_constants) {
    add(Formula::constant(true));
    add(Formula::constant(false));
  }
  for (int level = 1; level < height; ++level) {
    const std::vector<Formula> prev = pool;  // snapshot: everything up to `level`
    for (const auto& f : prev) add(Formula::negate(f));
    for (const auto& f : prev) {
      for (const auto& g : prev) {
        add(Formula::conj(f, g));
        add(Formula::disj(f, g));
        add(Formula::implies(f, g));
      }
    }
  }
  return pool;
}

}  // namespace testgen
