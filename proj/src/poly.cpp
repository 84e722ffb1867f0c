#include "fproots/poly.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace fproots {

namespace {

constexpr std::size_t kSchoolbookMax = 32; // larger operands go through Karatsuba
constexpr std::size_t kNewtonMin = 64;     // below this, plain division beats the two
                                           // Newton multiplications per reduction
constexpr u64 kLazyLimit = u64(1) << 31;   // below this, products accumulate unreduced

void trim_raw(std::vector<u64>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// out[k] = sum a[i]*b[j] over i+j = k; operands nonempty.
std::vector<u64> mul_schoolbook(const FpContext& ctx, const u64* a, std::size_t la,
                                const u64* b, std::size_t lb) {
  std::vector<u64> out(la + lb - 1, 0);
  if (ctx.p() < kLazyLimit) {
    // Terms stay below 2^62, so a u128 accumulator cannot overflow at any
    // length this library reaches.
    std::vector<u128> acc(la + lb - 1, 0);
    for (std::size_t i = 0; i < la; ++i) {
      const u64 ai = a[i];
      if (ai == 0) continue;
      for (std::size_t j = 0; j < lb; ++j) acc[i + j] += (u128)ai * b[j];
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = ctx.reduce_wide(acc[k]);
  } else {
    for (std::size_t i = 0; i < la; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < lb; ++j)
        out[i + j] = ctx.add(out[i + j], ctx.mul(a[i], b[j]));
    }
  }
  return out;
}

std::vector<u64> mul_rec(const FpContext& ctx, const u64* a, std::size_t la, const u64* b,
                         std::size_t lb) {
  if (la < lb) {
    std::swap(a, b);
    std::swap(la, lb);
  }
  if (lb == 0) return {};
  if (lb <= kSchoolbookMax) return mul_schoolbook(ctx, a, la, b, lb);

  const std::size_t m = (la + 1) / 2;
  if (lb <= m) {
    // Too lopsided for the sum trick: split only the longer operand and
    // recombine by plain addition.
    std::vector<u64> lo = mul_rec(ctx, a, m, b, lb);
    std::vector<u64> hi = mul_rec(ctx, a + m, la - m, b, lb);
    std::vector<u64> out(la + lb - 1, 0);
    for (std::size_t i = 0; i < lo.size(); ++i) out[i] = lo[i];
    for (std::size_t i = 0; i < hi.size(); ++i) out[m + i] = ctx.add(out[m + i], hi[i]);
    return out;
  }
  // Balanced case: lb > m, so both halves of both operands are nonempty and
  // every intermediate below fits the slot it is written into.
  const u64* a0 = a;
  const std::size_t la0 = m;
  const u64* a1 = a + m;
  const std::size_t la1 = la - m;
  const u64* b0 = b;
  const std::size_t lb0 = m;
  const u64* b1 = b + lb0;
  const std::size_t lb1 = lb - lb0;

  std::vector<u64> z0 = mul_rec(ctx, a0, la0, b0, lb0);
  std::vector<u64> z2 = mul_rec(ctx, a1, la1, b1, lb1);

  std::vector<u64> s1(std::max(la0, la1), 0);
  for (std::size_t i = 0; i < la0; ++i) s1[i] = a0[i];
  for (std::size_t i = 0; i < la1; ++i) s1[i] = ctx.add(s1[i], a1[i]);
  std::vector<u64> s2(std::max(lb0, lb1), 0);
  for (std::size_t i = 0; i < lb0; ++i) s2[i] = b0[i];
  for (std::size_t i = 0; i < lb1; ++i) s2[i] = ctx.add(s2[i], b1[i]);

  std::vector<u64> z1 = mul_rec(ctx, s1.data(), s1.size(), s2.data(), s2.size());
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = ctx.sub(z1[i], z0[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = ctx.sub(z1[i], z2[i]);

  std::vector<u64> out(la + lb - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z1.size(); ++i) out[m + i] = ctx.add(out[m + i], z1[i]);
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] = ctx.add(out[2 * m + i], z2[i]);
  return out;
}

std::vector<u64> mul_raw(const FpContext& ctx, const std::vector<u64>& a,
                         const std::vector<u64>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<u64> out = mul_rec(ctx, a.data(), a.size(), b.data(), b.size());
  trim_raw(out);
  return out;
}

// In-place remainder of a by monic m; also fills q when wanted.
void divrem_monic_raw(const FpContext& ctx, std::vector<u64>& a, const std::vector<u64>& m,
                      std::vector<u64>* q) {
  const std::size_t n = m.size() - 1;
  if (q) q->assign(a.size() > n ? a.size() - n : 0, 0);
  if (a.size() <= n) return;
  for (std::size_t k = a.size() - 1; k + 1 > n; --k) {
    const u64 c = a[k];
    if (q) (*q)[k - n] = c;
    if (c != 0) {
      for (std::size_t j = 0; j < n; ++j)
        a[k - n + j] = ctx.sub(a[k - n + j], ctx.mul(c, m[j]));
      a[k] = 0;
    }
  }
  a.resize(n);
  trim_raw(a);
}

std::vector<u64> scale_raw(const FpContext& ctx, std::vector<u64> v, u64 c) {
  for (u64& x : v) x = ctx.mul(x, c);
  return v;
}

} // namespace

Poly::Poly(const FpContext& ctx, std::vector<u64> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
  for (u64& v : c_) v = ctx_.reduce(v);
  trim_raw(c_);
}

Poly Poly::constant(const FpContext& ctx, u64 c) { return Poly(ctx, {c}); }
Poly Poly::x(const FpContext& ctx) { return Poly(ctx, {0, 1}); }
Poly Poly::x_plus(const FpContext& ctx, u64 c) { return Poly(ctx, {c, 1}); }

Poly operator+(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const FpContext& ctx = a.field();
  std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.add(a.coeff(i), b.coeff(i));
  return Poly(ctx, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  const FpContext& ctx = a.field();
  std::vector<u64> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = ctx.sub(a.coeff(i), b.coeff(i));
  return Poly(ctx, std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  return Poly(a.field(), mul_raw(a.field(), a.coeffs(), b.coeffs()));
}

Poly monic(const Poly& f) {
  if (f.is_zero()) throw Error(Errc::zero_input, "cannot normalize the zero polynomial");
  if (f.is_monic()) return f;
  const FpContext& ctx = f.field();
  return Poly(ctx, scale_raw(ctx, f.coeffs(), ctx.inv(f.leading())));
}

DivRem div_rem(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (b.is_zero()) throw Error(Errc::division_by_zero, "division by the zero polynomial");
  const FpContext& ctx = a.field();
  if (a.is_zero() || a.coeffs().size() < b.coeffs().size())
    return {Poly(ctx), a};

  const u64 lead_inv = ctx.inv(b.leading());
  std::vector<u64> m = b.coeffs();
  if (b.leading() != 1) m = scale_raw(ctx, std::move(m), lead_inv);

  std::vector<u64> r = a.coeffs();
  std::vector<u64> q;
  divrem_monic_raw(ctx, r, m, &q);
  // a = q' * (b / lead) + r, so the true quotient is q' / lead.
  if (b.leading() != 1) q = scale_raw(ctx, std::move(q), lead_inv);
  trim_raw(q);
  return {Poly(ctx, std::move(q)), Poly(ctx, std::move(r))};
}

Poly gcd(const Poly& a, const Poly& b) {
  require_same_field(a.field(), b.field());
  if (a.is_zero() && b.is_zero())
    throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  if (!x.is_zero()) x = monic(x);
  if (!y.is_zero()) y = monic(y);
  while (!y.is_zero()) {
    Poly r = div_rem(x, y).rem;
    x = std::move(y);
    y = r.is_zero() ? std::move(r) : monic(r);
  }
  return x;
}

Poly derivative(const Poly& f) {
  const FpContext& ctx = f.field();
  if (f.coeffs().size() <= 1) return Poly(ctx);
  std::vector<u64> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i)
    out[i - 1] = ctx.mul(ctx.reduce(i), f.coeff(i));
  return Poly(ctx, std::move(out));
}

Poly shift(const Poly& f, u64 u) {
  const FpContext& ctx = f.field();
  u = ctx.reduce(u);
  if (f.is_zero() || u == 0) return f;
  // Horner in (X + u): r <- r*(X + u) + c_i from the top coefficient down.
  std::vector<u64> r;
  r.reserve(f.coeffs().size());
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    r.push_back(0);
    for (std::size_t j = r.size() - 1; j > 0; --j)
      r[j] = ctx.add(r[j - 1], ctx.mul(u, r[j]));
    r[0] = ctx.mul(u, r[0]);
    r[0] = ctx.add(r[0], f.coeff(i));
  }
  return Poly(ctx, std::move(r));
}

u64 eval(const Poly& f, u64 x) {
  const FpContext& ctx = f.field();
  x = ctx.reduce(x);
  u64 r = 0;
  for (std::size_t i = f.coeffs().size(); i-- > 0;) r = ctx.add(ctx.mul(r, x), f.coeff(i));
  return r;
}

PolyModulus::PolyModulus(const Poly& m) : ctx_(m.field()) {
  if (m.is_zero() || m.degree() < 1)
    throw Error(Errc::modulus_degree_zero, "modulus must have degree >= 1");
  Poly mm = monic(m);
  m_ = mm.coeffs();
  n_ = m_.size() - 1;

  if (n_ >= kNewtonMin) {
    // Newton iteration for rev(m)^-1 mod X^(n-1); quotients in reduce_raw
    // never need more precision than that.
    const std::size_t want = n_ - 1;
    std::vector<u64> f(m_.rbegin(), m_.rend()); // f[0] = 1 since m is monic
    std::vector<u64> inv{1};
    std::size_t have = 1;
    while (have < want) {
      const std::size_t t = std::min(want, 2 * have);
      std::vector<u64> ft(f.begin(), f.begin() + std::min(f.size(), t));
      std::vector<u64> v = mul_raw(ctx_, ft, inv);
      v.resize(t, 0);
      for (u64& x : v) x = ctx_.neg(x);
      v[0] = ctx_.add(v[0], 2);
      inv = mul_raw(ctx_, inv, v);
      inv.resize(t, 0);
      have = t;
    }
    rinv_ = std::move(inv);
  }
}

std::vector<u64> PolyModulus::reduce_raw(std::vector<u64> a) const {
  trim_raw(a);
  if (a.size() <= n_) return a;
  const std::size_t da = a.size() - 1;
  if (rinv_.empty() || da > 2 * n_ - 2) {
    divrem_monic_raw(ctx_, a, m_, nullptr);
    return a;
  }
  // r = a - q*m with rev(q) = rev(a) * rev(m)^-1 mod X^(da - n + 1).
  const std::size_t k = da - n_ + 1;
  std::vector<u64> arev(k);
  for (std::size_t i = 0; i < k; ++i) arev[i] = a[da - i];
  std::vector<u64> iv(rinv_.begin(), rinv_.begin() + std::min(rinv_.size(), k));
  std::vector<u64> qrev = mul_raw(ctx_, arev, iv);
  qrev.resize(k, 0);
  std::vector<u64> q(k);
  for (std::size_t i = 0; i < k; ++i) q[i] = qrev[k - 1 - i];
  trim_raw(q);
  std::vector<u64> qm = mul_raw(ctx_, q, m_);
  std::vector<u64> r(n_, 0);
  for (std::size_t j = 0; j < n_; ++j)
    r[j] = ctx_.sub(j < a.size() ? a[j] : 0, j < qm.size() ? qm[j] : 0);
  trim_raw(r);
  return r;
}

Poly PolyModulus::reduce(const Poly& a) const {
  require_same_field(ctx_, a.field());
  return Poly(ctx_, reduce_raw(a.coeffs()));
}

Poly PolyModulus::mul(const Poly& a, const Poly& b) const {
  require_same_field(ctx_, a.field());
  require_same_field(ctx_, b.field());
  return Poly(ctx_, reduce_raw(mul_raw(ctx_, a.coeffs(), b.coeffs())));
}

Poly PolyModulus::pow(const Poly& base, u64 e) const {
  require_same_field(ctx_, base.field());
  if (e == 0) return Poly(ctx_, {1});
  std::vector<u64> b = reduce_raw(base.coeffs());
  if (b.empty()) return Poly(ctx_);
  std::vector<u64> r = b;
  for (int bit = 62 - std::countl_zero(e); bit >= 0; --bit) {
    r = reduce_raw(mul_raw(ctx_, r, r));
    if ((e >> bit) & 1) r = reduce_raw(mul_raw(ctx_, r, b));
  }
  return Poly(ctx_, std::move(r));
}

Poly powmod(const Poly& base, u64 e, const Poly& modulus) {
  return PolyModulus(modulus).pow(base, e);
}

std::vector<std::pair<Poly, u32>> squarefree_decomposition(const Poly& f) {
  const FpContext& ctx = f.field();
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  if (f.degree() >= ctx.p())
    throw Error(Errc::bad_input, "degree must stay below the characteristic");

  std::vector<std::pair<Poly, u32>> out;
  if (f.degree() == 0) return out;

  Poly a = monic(f);
  Poly c = gcd(a, derivative(a));
  Poly w = div_rem(a, c).quot;
  u32 i = 1;
  std::size_t seen = 0;
  while (!w.is_constant()) {
    Poly y = gcd(w, c);
    Poly z = div_rem(w, y).quot;
    if (!z.is_constant()) {
      out.emplace_back(z, i);
      seen += i * z.degree();
    }
    c = div_rem(c, y).quot;
    w = std::move(y);
    ++i;
    if (i > a.degree() + 1) throw Error(Errc::internal, "squarefree loop ran away");
  }
  if (seen != a.degree()) throw Error(Errc::internal, "squarefree profile lost degree");
  return out;
}

Poly parse_poly(const FpContext& ctx, const std::string& text) {
  std::vector<u64> coeffs;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(Errc::bad_input, "empty coefficient");
    tok = tok.substr(b, e - b + 1);

    bool negate = false;
    std::size_t start = 0;
    if (tok[0] == '-' || tok[0] == '+') {
      negate = tok[0] == '-';
      start = 1;
    }
    if (start == tok.size()) throw Error(Errc::bad_input, "coefficient has no digits");
    u64 mag = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + start, tok.data() + tok.size(), mag);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::bad_input, "bad coefficient '" + tok + "'");
    u64 v = ctx.reduce(mag);
    coeffs.push_back(negate ? ctx.neg(v) : v);

    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Poly(ctx, std::move(coeffs));
}

std::string to_coeff_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f.coeff(i));
  }
  return out;
}

} // namespace fproots
