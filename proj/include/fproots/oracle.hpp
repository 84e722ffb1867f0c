#pragma once

#include <vector>

#include "fproots/charsum.hpp"
#include "fproots/poly.hpp"

namespace fproots {

// Brute-force baselines.  These deliberately share nothing with the
// algorithmic paths they check beyond scalar field arithmetic: roots come
// from evaluating at every field element, tuple counts from literal nested
// loops over the defining conditions.

// {a in F_p : f(a) = 0}, ascending.  Needs p <= 2^26.
std::vector<u64> brute_roots(const Poly& f);

// 6-tuples (u1,u2,l1,l2,s1,s2) with (u1+s1)/l1 = (u2+s2)/l2 mod p, counted
// by the definition.  The loop size (#I * #L * #S)^2 must stay within 10^8.
u64 brute_count_W(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
                  const SpacedSet& S);

// 8-tuples of the squared-table identity, counted by the definition; equals
// the sum of W(x,y)^2.  The loop size (#I * #L * #S^2)^2 must stay within 10^8.
u64 brute_sum_W_sq(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
                   const SpacedSet& S);

} // namespace fproots
