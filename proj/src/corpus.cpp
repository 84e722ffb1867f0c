#include "fproots/corpus.hpp"

#include <algorithm>

namespace fproots {

std::vector<u64> random_distinct_residues(const FpContext& ctx, std::size_t k, Rng& rng) {
  if ((u128)k > ctx.p()) throw Error(Errc::bad_input, "more residues requested than exist");
  std::vector<u64> out;
  out.reserve(k);
  u64 attempts = 0;
  const u64 cap = 1000 + 100 * (u64)k;
  while (out.size() < k) {
    if (++attempts > cap) throw Error(Errc::cap_exceeded, "rejection sampling stalled");
    const u64 r = rng.below(ctx.p());
    auto it = std::lower_bound(out.begin(), out.end(), r);
    if (it != out.end() && *it == r) continue;
    out.insert(it, r);
  }
  return out;
}

SplitPoly random_split_poly(const FpContext& ctx, std::size_t k, Rng& rng) {
  if (k < 1) throw Error(Errc::bad_input, "need at least one root");
  SplitPoly sp{Poly::constant(ctx, 1), random_distinct_residues(ctx, k, rng)};
  for (u64 r : sp.roots) sp.poly = sp.poly * Poly::x_plus(ctx, ctx.neg(r));
  return sp;
}

Poly random_squarefree_poly(const FpContext& ctx, std::size_t deg, Rng& rng) {
  if (deg < 1) throw Error(Errc::bad_input, "degree must be >= 1");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<u64> c(deg + 1);
    for (std::size_t i = 0; i < deg; ++i) c[i] = rng.below(ctx.p());
    c[deg] = 1 + rng.below(ctx.p() - 1);
    Poly f(ctx, std::move(c));
    if (gcd(f, derivative(f)).is_constant()) return f;
  }
  throw Error(Errc::internal, "squarefree rejection sampling stalled");
}

u64 random_prime_in(u64 lo, u64 hi, Rng& rng) {
  if (lo > hi) throw Error(Errc::bad_input, "empty interval");
  for (int attempt = 0; attempt < 200000; ++attempt) {
    const u64 c = lo + rng.below(hi - lo + 1);
    if (c >= 3 && c % 2 == 1 && is_prime_u64(c)) return c;
  }
  throw Error(Errc::cap_exceeded, "no odd prime found in the interval");
}

} // namespace fproots
