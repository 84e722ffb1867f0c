#pragma once

#include <vector>

#include "fproots/poly.hpp"

namespace fproots {

// Pairwise-coprime monic basis with input_i = units[i] * prod_j basis[j]^exponents[i][j].
struct RefinedBasis {
  std::vector<Poly> basis;                  // monic, degree >= 1, sorted
  std::vector<u64> units;                   // one leading coefficient per input
  std::vector<std::vector<u32>> exponents;  // row per input, column per basis element
};

// Refines a family into a coprime basis by worklist gcd splitting; the basis
// is sorted by degree, then by coefficient sequence from the constant term
// up, so equal inputs always produce byte-identical output.
RefinedBasis factor_refine(const std::vector<Poly>& inputs);

// Basis half of factor_refine: the same sorted coprime basis, without the
// per-input exponent bookkeeping.  Callers that only read the basis (such as
// the root sweep, whose family members all divide the first input) avoid a
// division per input/basis pair.
std::vector<Poly> coprime_basis(const std::vector<Poly>& inputs);

// Coprime cover of {a, b}: the basis of factor_refine({a, b}).
std::vector<Poly> refine_pair(const Poly& a, const Poly& b);

} // namespace fproots
