#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fproots/fp.hpp"

namespace fproots {

// Dense univariate polynomial over F_p.  Coefficients are stored constant
// term first with no trailing zeros, so the zero polynomial is the empty
// vector and carries no degree at all; degree() refuses it rather than
// returning a sentinel.
class Poly {
public:
  explicit Poly(const FpContext& ctx) : ctx_(ctx) {}
  Poly(const FpContext& ctx, std::vector<u64> coeffs);

  static Poly constant(const FpContext& ctx, u64 c);
  static Poly x(const FpContext& ctx);
  // X + c
  static Poly x_plus(const FpContext& ctx, u64 c);

  const FpContext& field() const { return ctx_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }

  std::size_t degree() const {
    if (c_.empty()) throw Error(Errc::zero_input, "zero polynomial has no degree");
    return c_.size() - 1;
  }

  u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  u64 leading() const { return c_.back(); } // requires nonzero
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<u64>& coeffs() const { return c_; }

  bool operator==(const Poly& o) const { return ctx_ == o.ctx_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

private:
  FpContext ctx_;
  std::vector<u64> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

// f scaled by the inverse of its leading coefficient.
Poly monic(const Poly& f);

struct DivRem {
  Poly quot;
  Poly rem;
};

// a = quot * b + rem with rem zero or deg rem < deg b.
DivRem div_rem(const Poly& a, const Poly& b);

// Monic gcd via the classical Euclidean remainder sequence, each remainder
// normalized monic to keep coefficients canonical.  gcd(0, 0) is refused.
Poly gcd(const Poly& a, const Poly& b);

Poly derivative(const Poly& f);

// f(X + u).
Poly shift(const Poly& f, u64 u);

u64 eval(const Poly& f, u64 x);

// Precomputed data for repeated reduction mod one fixed modulus of degree
// >= 1 (stored monic).  Large moduli reduce through a Newton inverse of the
// reversed modulus, small ones through plain division.
class PolyModulus {
public:
  explicit PolyModulus(const Poly& m);

  const FpContext& field() const { return ctx_; }
  std::size_t degree() const { return n_; }
  Poly modulus() const { return Poly(ctx_, m_); }

  Poly reduce(const Poly& a) const;
  Poly mul(const Poly& a, const Poly& b) const;
  // base^e mod m by square-and-multiply.
  Poly pow(const Poly& base, u64 e) const;

private:
  std::vector<u64> reduce_raw(std::vector<u64> a) const;

  FpContext ctx_;
  std::vector<u64> m_;    // monic, size n_ + 1
  std::size_t n_ = 0;
  std::vector<u64> rinv_; // rev(m)^-1 mod X^(n-1); empty when division is cheaper
};

Poly powmod(const Poly& base, u64 e, const Poly& modulus);

// Distinct-factor multiplicity profile: pairwise coprime squarefree parts
// z_i with monic(f) equal to the product of z_i^i.  Requires the degree to
// stay below p so derivatives cannot collapse.
std::vector<std::pair<Poly, u32>> squarefree_decomposition(const Poly& f);

// Comma-separated decimal coefficients, constant term first.  Values reduce
// mod p; a leading '-' negates.
Poly parse_poly(const FpContext& ctx, const std::string& text);
std::string to_coeff_string(const Poly& f);

} // namespace fproots
