#include "fproots/oracle.hpp"

namespace fproots {

std::vector<u64> brute_roots(const Poly& f) {
  const FpContext& ctx = f.field();
  if (ctx.p() > kMaxTableField)
    throw Error(Errc::field_too_large, "exhaustive enumeration needs p <= 2^26");
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");

  const std::vector<u64>& cf = f.coeffs();
  std::vector<u64> out;
  for (u64 x = 0; x < ctx.p(); ++x) {
    u64 r = 0;
    for (std::size_t i = cf.size(); i-- > 0;) r = ctx.add(ctx.mul(r, x), cf[i]);
    if (r == 0) out.push_back(x);
  }
  return out;
}

namespace {

struct BruteBox {
  std::vector<u64> us;   // interval elements 1..h
  std::vector<u64> ls;   // the primes as residues
  std::vector<u64> linv; // their inverses
  std::vector<u64> ss;   // set elements
};

BruteBox make_box(const FpContext& ctx, const Interval& I, const std::vector<u64>& ells,
                  const SpacedSet& S) {
  if (I.h < 1 || I.h > ctx.p() - 1)
    throw Error(Errc::bad_input, "interval length must lie in [1, p-1]");
  BruteBox b;
  for (u64 u = 1; u <= I.h; ++u) b.us.push_back(u);
  for (u64 l : ells) {
    if (l == 0 || l % ctx.p() == 0)
      throw Error(Errc::bad_input, "denominator prime not invertible mod p");
    b.ls.push_back(ctx.reduce(l));
    b.linv.push_back(ctx.inv(ctx.reduce(l)));
  }
  b.ss = S.elements();
  return b;
}

} // namespace

u64 brute_count_W(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
                  const SpacedSet& S) {
  require_same_field(ctx, S.field());
  BruteBox b = make_box(ctx, I, ell_primes, S);
  const u128 side = (u128)b.us.size() * b.ls.size() * b.ss.size();
  if (side * side > 100'000'000)
    throw Error(Errc::too_large, "6-fold loop exceeds 10^8 iterations");

  u64 count = 0;
  for (u64 u1 : b.us)
    for (u64 u2 : b.us)
      for (std::size_t l1 = 0; l1 < b.ls.size(); ++l1)
        for (std::size_t l2 = 0; l2 < b.ls.size(); ++l2)
          for (u64 s1 : b.ss)
            for (u64 s2 : b.ss) {
              const u64 lhs = ctx.mul(ctx.add(u1, s1), b.linv[l1]);
              const u64 rhs = ctx.mul(ctx.add(u2, s2), b.linv[l2]);
              if (lhs == rhs) ++count;
            }
  return count;
}

u64 brute_sum_W_sq(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
                   const SpacedSet& S) {
  require_same_field(ctx, S.field());
  BruteBox b = make_box(ctx, I, ell_primes, S);
  const u128 side = (u128)b.us.size() * b.ls.size() * b.ss.size() * b.ss.size();
  if (side * side > 100'000'000)
    throw Error(Errc::too_large, "8-fold loop exceeds 10^8 iterations");

  u64 count = 0;
  for (u64 u1 : b.us)
    for (u64 u2 : b.us)
      for (std::size_t l1 = 0; l1 < b.ls.size(); ++l1)
        for (std::size_t l2 = 0; l2 < b.ls.size(); ++l2)
          for (u64 s1 : b.ss)
            for (u64 s2 : b.ss)
              for (u64 t1 : b.ss)
                for (u64 t2 : b.ss) {
                  const bool first = ctx.mul(ctx.add(u1, s1), b.linv[l1]) ==
                                     ctx.mul(ctx.add(u2, s2), b.linv[l2]);
                  if (!first) continue;
                  const bool second = ctx.mul(ctx.add(u1, t1), b.linv[l1]) ==
                                      ctx.mul(ctx.add(u2, t2), b.linv[l2]);
                  if (second) ++count;
                }
  return count;
}

} // namespace fproots
