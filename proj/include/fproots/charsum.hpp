#pragma once

#include <cstddef>
#include <vector>

#include "fproots/exec.hpp"
#include "fproots/fp.hpp"
#include "fproots/poly.hpp"
#include "fproots/rng.hpp"

namespace fproots {

// The shift range {1, ..., h} treated as residues mod p; needs 1 <= h <= p-1.
struct Interval {
  u64 h;
};

// True when every pair of distinct elements stays more than h apart in the
// cyclic distance on Z/p; a singleton is spaced for every h <= p-1.
bool is_h_spaced(const FpContext& ctx, const std::vector<u64>& elems, u64 h);

// A set of distinct residues, optionally certified h-spaced at construction.
// Elements are kept sorted ascending.
class SpacedSet {
public:
  // spacing = 0 skips the spacing certificate and only requires distinctness.
  static SpacedSet make(const FpContext& ctx, std::vector<u64> elems, u64 spacing);
  // Rejection-samples `size` residues pairwise more than `spacing` apart.
  static SpacedSet random(const FpContext& ctx, std::size_t size, u64 spacing, Rng& rng);

  const FpContext& field() const { return ctx_; }
  const std::vector<u64>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  u64 spacing() const { return spacing_; }

private:
  SpacedSet(const FpContext& ctx, std::vector<u64> elems, u64 spacing)
      : ctx_(ctx), elems_(std::move(elems)), spacing_(spacing) {}

  FpContext ctx_;
  std::vector<u64> elems_;
  u64 spacing_;
};

// T = sum over u in {1..h} of |sum over s in S of chi(u+s)|^2.  Exact
// integer arithmetic for quadratic characters; identical results for both
// Exec modes.
double t_chi(const Interval& I, const SpacedSet& S, const Character& chi, Exec exec);

struct WeilResult {
  double abs_sum;          // |sum over x in F_p of chi(F(x))|
  i64 int_sum;             // the exact signed sum when order = 2
  bool exact;              // int_sum is valid
  std::size_t n_distinct;  // number of distinct roots of F in the closure
  double bound;            // n_distinct * sqrt(p)
  bool bound_ok;           // abs_sum <= bound (integer-exact when possible)
  bool power_exempt;       // F is a d-th power up to a constant; bound not asserted
};

// Full-field character sum of chi(F(x)) with the square-root bound check.
// Needs p <= 2^26, F nonconstant, deg F < p.
WeilResult weil_sum(const Poly& F, const Character& chi, Exec exec);

// Number of 6-tuples (u1,u2,l1,l2,s1,s2) with (u1+s1)/l1 = (u2+s2)/l2 mod p.
// Counted by bucketing the #I * #L * #S values (u+s)/l; the product of the
// three sizes must stay within 10^8.
u64 count_W(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
            const SpacedSet& S, Exec exec);

// Sparse table of W(x,y) = #{(u,l,s,t) : (u+s)/l = x, (u+t)/l = y}; the
// product #I * #L * #S^2 must stay within 10^8.
class WTable {
public:
  struct Cell {
    u64 x, y;
    u64 count;
  };

  u64 total() const;           // equals #I * #L * #S^2
  u64 sum_squares() const;     // sum of W(x,y)^2 over all cells
  u64 lookup(u64 x, u64 y) const;
  std::size_t distinct_cells() const;
  std::vector<Cell> cells() const; // sorted by (x, y)

private:
  friend WTable w_table(const FpContext&, const Interval&, const std::vector<u64>&,
                        const SpacedSet&, Exec);
  std::vector<u128> keys_; // packed (x << 64) | y, sorted, distinct
  std::vector<u64> counts_;
};

WTable w_table(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
               const SpacedSet& S, Exec exec);

struct BoundParams {
  u64 p;
  u64 h;
  u64 L;                // prime-interval base; unused by the decay report
  std::size_t set_size;
  u32 order = 2;
};

// Descriptive bound ratios: the asymptotic right-hand sides are evaluated
// with every implied constant set to 1 and p^(o(1)) replaced by log p.
// Nothing here asserts pass/fail.
struct BoundReport {
  double lhs;
  std::vector<double> rhs_terms;
  double ratio; // lhs / max(rhs_terms)
  BoundParams params;
};

// For the 6-tuple count: terms (s*h*L)^2 / p and s*h*L*log p.
BoundReport report_pair_collisions(u64 count_w_value, const BoundParams& params);
// For sum of W(x,y)^2: terms s^3*(h*L)^2 / p and s^2*h*L*log p.
BoundReport report_energy(u64 sum_w_sq, const BoundParams& params);
// For T: the decay exponent is not explicit, so the ratio T / (s^2 * h) is
// reported against the trivial scale.
BoundReport report_decay(double t_chi_value, const BoundParams& params);

} // namespace fproots
