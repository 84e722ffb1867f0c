#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fproots/error.hpp"

namespace fproots {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, exact for all n < 2^64.
bool is_prime_u64(u64 n);

// All primes in [lo, hi], both endpoints included.  hi - lo must stay below
// 2^31 so the segment fits in memory.
std::vector<u64> primes_in_interval(u64 lo, u64 hi);

inline constexpr u64 kMaxModulusBits = 62;

// Arithmetic context for F_p, p an odd prime below 2^62.  Residues are plain
// u64 values kept in [0, p); every operation assumes canonical inputs and
// returns canonical outputs.
class FpContext {
public:
  explicit FpContext(u64 p);

  u64 p() const { return p_; }

  u64 reduce(u64 a) const { return a >= p_ ? a % p_ : a; }

  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }

  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }

  u64 neg(u64 a) const { return a == 0 ? 0 : p_ - a; }

  u64 mul(u64 a, u64 b) const { return reduce_wide((u128)a * b); }

  // Reduces x mod p for any x < 2^127 via Barrett: with mu = floor(2^128 / p),
  // q = floor(x * mu / 2^128) lands in {floor(x/p) - 1, floor(x/p)}, so one
  // conditional subtraction finishes the job.  This trades the 128-bit
  // division of operator% for a handful of 64x64 multiplies.
  u64 reduce_wide(u128 x) const {
    u128 q = mul_hi128(x, mu_);
    u128 t = x - q * p_;
    if (t >= p_) t -= p_;
    return (u64)t;
  }

  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    u64 base = a;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  u64 inv(u64 a) const {
    if (a == 0) throw Error(Errc::division_by_zero, "inverse of zero");
    return pow(a, p_ - 2);
  }

  // Legendre symbol via Euler's criterion: 0, 1 or -1.
  int legendre(u64 a) const {
    if (a == 0) return 0;
    u64 t = pow(a, (p_ - 1) / 2);
    return t == 1 ? 1 : -1;
  }

  bool operator==(const FpContext& o) const { return p_ == o.p_; }
  bool operator!=(const FpContext& o) const { return p_ != o.p_; }

private:
  // High 128 bits of the 256-bit product x * y, carry-safe.
  static u128 mul_hi128(u128 x, u128 y) {
    const u64 x0 = (u64)x, x1 = (u64)(x >> 64);
    const u64 y0 = (u64)y, y1 = (u64)(y >> 64);
    const u128 lo = (u128)x0 * y0;
    const u128 m1 = (u128)x1 * y0 + (u64)(lo >> 64);
    const u128 m2 = (u128)x0 * y1 + (u64)m1;
    return (u128)x1 * y1 + (u64)(m1 >> 64) + (u64)(m2 >> 64);
  }

  u64 p_;
  u128 mu_; // floor(2^128 / p), the Barrett constant
};

inline void require_same_field(const FpContext& a, const FpContext& b) {
  if (a != b) throw Error(Errc::modulus_mismatch, "operands live in different fields");
}

// chi(a) for a multiplicative character of order d: either zero (a = 0) or
// the index k of the root of unity e^(2*pi*i*k/d).
struct CharValue {
  bool zero;
  u32 index;
};

inline constexpr u64 kMaxTableField = u64(1) << 26;

// Multiplicative character of F_p^* of order d, extended by chi(0) = 0.
// The quadratic character evaluates through Euler's criterion and works for
// any supported p; characters of general order build a discrete-log table
// over the smallest primitive root and require p <= 2^26.
class Character {
public:
  static Character quadratic(const FpContext& ctx);
  static Character general(const FpContext& ctx, u32 order);

  u32 order() const { return order_; }
  const FpContext& field() const { return ctx_; }

  CharValue value(u64 a) const {
    a = ctx_.reduce(a);
    if (a == 0) return {true, 0};
    if (log_.empty()) return {false, ctx_.legendre(a) == 1 ? 0u : 1u};
    return {false, log_[a] % order_};
  }

  // Real part / imaginary part of the root of unity for an index.
  double root_re(u32 index) const { return root_re_[index]; }
  double root_im(u32 index) const { return root_im_[index]; }

private:
  Character(const FpContext& ctx, u32 order);

  FpContext ctx_;
  u32 order_;
  std::vector<u32> log_; // empty for the Euler-criterion quadratic path
  std::vector<double> root_re_, root_im_;
};

// Smallest primitive root mod p (p an odd prime).  Exposed for tests.
u64 smallest_primitive_root(u64 p);

} // namespace fproots
