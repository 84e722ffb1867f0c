#include "fproots/fp.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace fproots {

namespace {

u64 mulmod_u64(u64 a, u64 b, u64 n) { return (u64)((u128)a * b % n); }

u64 powmod_u64(u64 a, u64 e, u64 n) {
  u64 r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, n);
    a = mulmod_u64(a, a, n);
    e >>= 1;
  }
  return r;
}

} // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set decides primality exactly for all n < 3.3e24.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

std::vector<u64> primes_in_interval(u64 lo, u64 hi) {
  if (lo > hi) throw Error(Errc::bad_input, "empty interval");
  if (hi - lo >= (u64(1) << 31)) throw Error(Errc::cap_exceeded, "interval too wide to sieve");
  if (hi < 2) return {};
  if (lo < 2) lo = 2;

  u64 root = (u64)std::sqrt((double)hi) + 2;
  std::vector<bool> small(root + 1, true);
  std::vector<u64> base;
  for (u64 i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    if (i * i <= hi) base.push_back(i);
    for (u64 j = i * i; j <= root; j += i) small[j] = false;
  }

  std::vector<bool> seg(hi - lo + 1, true);
  for (u64 q : base) {
    u64 start = std::max(q * q, ((lo + q - 1) / q) * q);
    for (u64 m = start; m <= hi; m += q) seg[m - lo] = false;
  }
  std::vector<u64> out;
  for (u64 v = lo; v <= hi; ++v) {
    if (v >= 2 && seg[v - lo]) out.push_back(v);
  }
  return out;
}

FpContext::FpContext(u64 p) : p_(p) {
  if (p >= (u64(1) << kMaxModulusBits)) throw Error(Errc::too_large, "modulus must be below 2^62");
  if (p < 3 || p % 2 == 0) throw Error(Errc::bad_input, "modulus must be an odd prime >= 3");
  if (!is_prime_u64(p)) throw Error(Errc::not_prime, "modulus not prime");
  // p is odd, so it never divides 2^128 and the -1 in the numerator does not
  // change the floor.
  mu_ = ~(u128)0 / p_;
}

namespace {

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> fs;
  for (u64 q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      fs.push_back(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

} // namespace

u64 smallest_primitive_root(u64 p) {
  const u64 m = p - 1;
  const std::vector<u64> qs = distinct_prime_factors(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (u64 q : qs) {
      if (powmod_u64(g, m / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  throw Error(Errc::internal, "no primitive root found");
}

Character::Character(const FpContext& ctx, u32 order) : ctx_(ctx), order_(order) {
  root_re_.resize(order_);
  root_im_.resize(order_);
  for (u32 k = 0; k < order_; ++k) {
    double t = 2.0 * std::numbers::pi * (double)k / (double)order_;
    root_re_[k] = std::cos(t);
    root_im_[k] = std::sin(t);
  }
}

Character Character::quadratic(const FpContext& ctx) { return Character(ctx, 2); }

Character Character::general(const FpContext& ctx, u32 order) {
  if (order < 2) throw Error(Errc::bad_input, "character order must be >= 2");
  if ((ctx.p() - 1) % order != 0) throw Error(Errc::bad_input, "order must divide p - 1");
  if (ctx.p() > kMaxTableField)
    throw Error(Errc::field_too_large, "discrete-log table needs p <= 2^26");

  Character chi(ctx, order);
  const u64 p = ctx.p();
  const u64 g = smallest_primitive_root(p);
  chi.log_.assign(p, 0);
  u64 v = 1;
  for (u64 k = 0; k + 1 < p; ++k) {
    chi.log_[v] = (u32)k;
    v = ctx.mul(v, g);
  }
  return chi;
}

} // namespace fproots
