#pragma once

#include <vector>

#include "fproots/poly.hpp"
#include "fproots/rng.hpp"

namespace fproots {

// Seeded generators shared by tests, experiments and benchmarks.

std::vector<u64> random_distinct_residues(const FpContext& ctx, std::size_t k, Rng& rng);

struct SplitPoly {
  Poly poly;              // monic with exactly k distinct roots
  std::vector<u64> roots; // ascending
};

SplitPoly random_split_poly(const FpContext& ctx, std::size_t k, Rng& rng);

// Uniformly random squarefree polynomial of exact degree deg (random
// nonzero leading coefficient), found by rejection.
Poly random_squarefree_poly(const FpContext& ctx, std::size_t deg, Rng& rng);

// Uniformly random odd prime in [lo, hi] by rejection.
u64 random_prime_in(u64 lo, u64 hi, Rng& rng);

} // namespace fproots
