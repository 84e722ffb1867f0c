#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "fproots/corpus.hpp"
#include "fproots/poly.hpp"
#include "fproots/rng.hpp"

using namespace fproots;

namespace {

Poly rand_poly(const FpContext& ctx, std::size_t deg, Rng& rng, bool monic_out = false) {
  std::vector<u64> c(deg + 1);
  for (auto& v : c) v = rng.below(ctx.p());
  c[deg] = monic_out ? 1 : 1 + rng.below(ctx.p() - 1);
  return Poly(ctx, std::move(c));
}

// Independent quadratic-time product used as the multiplication oracle.
Poly mul_naive(const Poly& a, const Poly& b) {
  const FpContext& ctx = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(ctx);
  std::vector<u64> r(a.degree() + b.degree() + 1, 0);
  for (std::size_t i = 0; i <= a.degree(); ++i)
    for (std::size_t j = 0; j <= b.degree(); ++j)
      r[i + j] = ctx.add(r[i + j], ctx.mul(a.coeff(i), b.coeff(j)));
  return Poly(ctx, std::move(r));
}

} // namespace

TEST_CASE("construction reduces and trims") {
  FpContext ctx(7);
  Poly f(ctx, {8, 14, 7});
  CHECK(f == Poly::constant(ctx, 1));
  CHECK(Poly(ctx, {0, 0, 0}).is_zero());
  CHECK(Poly(ctx).is_zero());
  CHECK_THROWS_AS(Poly(ctx).degree(), Error);
  CHECK(Poly::x(ctx).degree() == 1);
  CHECK(Poly::x_plus(ctx, 9).coeff(0) == 2);
  Poly g(ctx, {1, 2, 3});
  CHECK(g.coeff(2) == 3);
  CHECK(g.coeff(17) == 0);
  CHECK(g.leading() == 3);
  CHECK_FALSE(g.is_monic());
}

TEST_CASE("parse and print") {
  FpContext ctx(7);
  CHECK(parse_poly(ctx, "6,0,0,1") == Poly(ctx, {6, 0, 0, 1}));
  CHECK(parse_poly(ctx, " -1, 8 ") == Poly(ctx, {6, 1}));
  CHECK(parse_poly(ctx, "0") .is_zero());
  CHECK(to_coeff_string(Poly(ctx)) == "0");
  CHECK(to_coeff_string(parse_poly(ctx, "6,0,0,1")) == "6,0,0,1");
  CHECK_THROWS_AS(parse_poly(ctx, ""), Error);
  CHECK_THROWS_AS(parse_poly(ctx, "1,,2"), Error);
  CHECK_THROWS_AS(parse_poly(ctx, "x"), Error);
  CHECK_THROWS_AS(parse_poly(ctx, "1,2,"), Error);
  CHECK_THROWS_AS(parse_poly(ctx, "99999999999999999999999"), Error);
}

TEST_CASE("ring operations at small sizes") {
  FpContext ctx(7);
  Poly a = parse_poly(ctx, "1,1");  // X + 1
  Poly b = parse_poly(ctx, "6,1");  // X + 6
  CHECK(a * b == parse_poly(ctx, "6,0,1")); // X^2 - 1
  CHECK(a + b == parse_poly(ctx, "0,2"));
  CHECK(a - a == Poly(ctx));
  CHECK((a - b) == Poly::constant(ctx, 2));
  Poly z(ctx);
  CHECK(z * a == z);
  CHECK(z + a == a);
  CHECK(derivative(parse_poly(ctx, "5,2,0,1")) == parse_poly(ctx, "2,0,3"));
  CHECK(derivative(Poly::constant(ctx, 3)).is_zero());
  CHECK(monic(parse_poly(ctx, "2,4")) == parse_poly(ctx, "4,1"));
  CHECK_THROWS_AS(monic(z), Error);
}

TEST_CASE("cross-field operations are refused") {
  FpContext p7(7), p11(11);
  Poly a = Poly::x(p7), b = Poly::x(p11);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS(gcd(a, b), Error);
}

TEST_CASE("multiplication matches the naive oracle across size regimes") {
  // Degrees straddle the karatsuba threshold; the large modulus leaves the
  // lazy-accumulation path and exercises per-term reduction.
  Rng rng(7);
  for (u64 p : {u64(10007), (u64(1) << 61) - 1}) {
    FpContext ctx(p);
    for (std::size_t da : {0, 1, 5, 31, 32, 33, 64, 200}) {
      for (std::size_t db : {0, 1, 17, 33, 150}) {
        Poly a = rand_poly(ctx, da, rng);
        Poly b = rand_poly(ctx, db, rng);
        CHECK(a * b == mul_naive(a, b));
      }
    }
  }
}

TEST_CASE("division roundtrip") {
  Rng rng(11);
  for (u64 p : {u64(7), u64(101), u64(10007)}) {
    FpContext ctx(p);
    for (int t = 0; t < 40; ++t) {
      Poly a = rand_poly(ctx, rng.below(30), rng);
      Poly b = rand_poly(ctx, rng.below(12), rng);
      DivRem d = div_rem(a, b);
      CHECK(d.quot * b + d.rem == a);
      if (!d.rem.is_zero()) CHECK(d.rem.degree() < b.degree());
    }
    CHECK_THROWS_AS(div_rem(Poly::x(ctx), Poly(ctx)), Error);
  }
}

TEST_CASE("gcd of the worked pair over F_7") {
  FpContext ctx(7);
  Poly a = parse_poly(ctx, "6,0,1");  // X^2 + 6 = (X+1)(X+6)
  Poly b = parse_poly(ctx, "3,4,1");  // X^2 + 4X + 3 = (X+1)(X+3)
  CHECK(gcd(a, b) == parse_poly(ctx, "1,1"));
}

TEST_CASE("gcd basic laws") {
  FpContext ctx(101);
  Rng rng(13);
  Poly z(ctx);
  Poly f = rand_poly(ctx, 6, rng);
  CHECK(gcd(f, z) == monic(f));
  CHECK(gcd(z, f) == monic(f));
  CHECK_THROWS_AS(gcd(z, z), Error);
  for (int t = 0; t < 25; ++t) {
    Poly a = rand_poly(ctx, 1 + rng.below(10), rng);
    Poly b = rand_poly(ctx, 1 + rng.below(10), rng);
    Poly g = gcd(a, b);
    CHECK(g == gcd(b, a));
    CHECK(g.is_monic());
    CHECK(div_rem(a, g).rem.is_zero());
    CHECK(div_rem(b, g).rem.is_zero());
    // Common factors surface: gcd(ac, bc) is divisible by monic(c).
    Poly c = rand_poly(ctx, 3, rng);
    Poly g2 = gcd(a * c, b * c);
    CHECK(div_rem(g2, monic(c)).rem.is_zero());
  }
}

TEST_CASE("shift is evaluation-compatible") {
  FpContext ctx(7);
  Poly f = parse_poly(ctx, "6,0,0,1"); // X^3 + 6
  CHECK(shift(f, 3) == parse_poly(ctx, "5,6,2,1"));
  CHECK(shift(f, 0) == f);
  FpContext big(100003);
  Rng rng(17);
  for (int t = 0; t < 20; ++t) {
    Poly g = rand_poly(big, 1 + rng.below(15), rng);
    u64 u = rng.below(big.p());
    Poly s = shift(g, u);
    for (int k = 0; k < 10; ++k) {
      u64 x = rng.below(big.p());
      CHECK(eval(s, x) == eval(g, big.add(x, u)));
    }
    CHECK(shift(s, big.neg(u)) == g);
  }
}

TEST_CASE("eval") {
  FpContext ctx(7);
  Poly f = parse_poly(ctx, "6,0,0,1");
  CHECK(eval(f, 1) == 0);
  CHECK(eval(f, 2) == 0);
  CHECK(eval(f, 4) == 0);
  CHECK(eval(f, 3) == 5); // 27 + 6 = 33 = 5 mod 7
  CHECK(eval(Poly(ctx), 4) == 0);
}

TEST_CASE("modular reduction matches long division in both regimes") {
  Rng rng(19);
  FpContext ctx(10007);
  // Small modulus: division path.  Large modulus: newton inverse path.
  for (std::size_t n : {1, 4, 60, 256, 300}) {
    Poly m = rand_poly(ctx, n, rng, true);
    PolyModulus pm(m);
    CHECK(pm.degree() == n);
    CHECK(pm.modulus() == m);
    for (std::size_t da : std::vector<std::size_t>{0, 1, n, 2 * n - 1, 2 * n, 3 * n + 5}) {
      Poly a = rand_poly(ctx, da, rng);
      CHECK(pm.reduce(a) == div_rem(a, m).rem);
    }
    Poly a = rand_poly(ctx, n, rng), b = rand_poly(ctx, n, rng);
    CHECK(pm.mul(a, b) == div_rem(a * b, m).rem);
  }
  CHECK_THROWS_AS(PolyModulus(Poly::constant(ctx, 3)), Error);
  CHECK_THROWS_AS(PolyModulus(Poly(ctx)), Error);
}

TEST_CASE("powmod") {
  FpContext ctx(7);
  Poly m = parse_poly(ctx, "6,0,0,1"); // X^3 + 6, so X^3 = 1 mod m
  CHECK(powmod(Poly::x(ctx), 7, m) == Poly::x(ctx));
  CHECK(powmod(Poly::x(ctx), 0, m) == Poly::constant(ctx, 1));
  CHECK(powmod(Poly(ctx), 5, m).is_zero());
  CHECK(powmod(Poly(ctx), 0, m) == Poly::constant(ctx, 1));

  FpContext big(1009);
  Rng rng(23);
  Poly mod = rand_poly(big, 9, rng, true);
  PolyModulus pm(mod);
  Poly base = rand_poly(big, 8, rng);
  // Exponent additivity against the one-step product.
  Poly p1 = pm.pow(base, 37), p2 = pm.pow(base, 63);
  CHECK(pm.mul(p1, p2) == pm.pow(base, 100));
  // Repeated squaring against literal repeated multiplication.
  Poly acc = Poly::constant(big, 1);
  for (int i = 0; i < 13; ++i) acc = pm.mul(acc, base);
  CHECK(acc == pm.pow(base, 13));
}

TEST_CASE("squarefree decomposition") {
  FpContext ctx(101);
  Poly x = Poly::x(ctx);
  Poly x1 = Poly::x_plus(ctx, 1);

  auto d1 = squarefree_decomposition(x * x);
  REQUIRE(d1.size() == 1);
  CHECK(d1[0].first == x);
  CHECK(d1[0].second == 2);

  auto d2 = squarefree_decomposition(x * x1);
  REQUIRE(d2.size() == 1);
  CHECK(d2[0].first == x * x1);
  CHECK(d2[0].second == 1);

  // 3 * X^2 * (X+1)^3: the unit disappears (parts multiply to the monic part).
  Poly f = Poly::constant(ctx, 3) * x * x * x1 * x1 * x1;
  auto d3 = squarefree_decomposition(f);
  REQUIRE(d3.size() == 2);
  CHECK(d3[0].first == x);
  CHECK(d3[0].second == 2);
  CHECK(d3[1].first == x1);
  CHECK(d3[1].second == 3);

  // Reconstruction property on random products.
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    Poly g = Poly::constant(ctx, 1 + rng.below(100));
    for (int k = 0; k < 3; ++k) {
      Poly part = rand_poly(ctx, 1 + rng.below(3), rng, true);
      u32 e = 1 + (u32)rng.below(3);
      for (u32 i = 0; i < e; ++i) g = g * part;
    }
    Poly prod = Poly::constant(ctx, 1);
    for (auto& [z, i] : squarefree_decomposition(g)) {
      CHECK(gcd(z, derivative(z)).is_constant()); // parts are squarefree
      for (u32 k = 0; k < i; ++k) prod = prod * z;
    }
    CHECK(prod == monic(g));
  }

  CHECK_THROWS_AS(squarefree_decomposition(Poly(ctx)), Error);
  // A constant has an empty squarefree part list (the parts multiply to 1).
  CHECK(squarefree_decomposition(Poly::constant(ctx, 5)).empty());
  // Degree must stay below the characteristic.
  FpContext tiny(3);
  Poly big_f(tiny, {1, 1, 1, 1}); // degree 3 over F_3
  CHECK_THROWS_AS(squarefree_decomposition(big_f), Error);
}
