#include "fproots/roots.hpp"

#include <algorithm>
#include <cmath>

#include "fproots/refine.hpp"

namespace fproots {

namespace {

// Parallel early-exit sweeps work in fixed blocks of this many shifts so the
// reported counters never depend on the thread count.
constexpr u64 kSweepBlock = 64;

void check_config(const RootFindConfig& cfg) {
  if (!(cfg.c_all >= 1.0)) throw Error(Errc::bad_input, "c_all must be >= 1");
  if (!(cfg.delta > 0.0 && cfg.delta < 0.5))
    throw Error(Errc::bad_input, "delta must lie in (0, 0.5)");
}

Poly g_u_impl(const Poly& f, const PolyModulus& pm, u64 u) {
  const FpContext& ctx = f.field();
  Poly h = pm.pow(Poly::x_plus(ctx, ctx.reduce(u)), (ctx.p() - 1) / 2);
  return gcd(f, h - Poly::constant(ctx, 1));
}

// Smallest u in [lo, hi] whose evaluation returns a payload.  `count`
// advances by exactly the number of shifts a serial scan would have
// evaluated; speculative work beyond the first hit in a parallel block is
// not charged.
template <typename Fn>
std::optional<std::pair<u64, Poly>> sweep_first_hit(u64 lo, u64 hi, Exec exec, u64& count,
                                                    Fn&& eval_at) {
  if (lo > hi) return std::nullopt;
  if (exec == Exec::serial) {
    for (u64 u = lo; u <= hi; ++u) {
      ++count;
      std::optional<Poly> r = eval_at(u);
      if (r) return std::make_pair(u, std::move(*r));
    }
    return std::nullopt;
  }
  for (u64 block_lo = lo; block_lo <= hi; block_lo += kSweepBlock) {
    const u64 block_hi = std::min(hi, block_lo + kSweepBlock - 1);
    const u64 n = block_hi - block_lo + 1;
    std::vector<std::optional<Poly>> slot((std::size_t)n);
#pragma omp parallel for schedule(static)
    for (u64 i = 0; i < n; ++i) slot[(std::size_t)i] = eval_at(block_lo + i);
    for (u64 i = 0; i < n; ++i) {
      if (slot[(std::size_t)i]) {
        count += i + 1;
        return std::make_pair(block_lo + i, std::move(*slot[(std::size_t)i]));
      }
    }
    count += n;
  }
  return std::nullopt;
}

std::vector<u64> scan_roots(const Poly& f) {
  const FpContext& ctx = f.field();
  std::vector<u64> out;
  for (u64 x = 0; x < ctx.p(); ++x) {
    if (eval(f, x) == 0) out.push_back(x);
  }
  return out;
}

} // namespace

Poly split_part(const Poly& f, WorkStats* stats) {
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  if (f.is_constant()) throw Error(Errc::bad_input, "split part needs degree >= 1");
  const FpContext& ctx = f.field();
  PolyModulus pm(f);
  Poly xp = pm.pow(Poly::x(ctx), ctx.p());
  if (stats) ++stats->setup_powmods;
  Poly g = gcd(f, xp - Poly::x(ctx));
  if (stats) ++stats->gcds;
  return g;
}

Poly g_u(const Poly& f, u64 u) {
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  if (f.is_constant()) throw Error(Errc::bad_input, "g_u needs degree >= 1");
  return g_u_impl(f, PolyModulus(f), u);
}

RootsResult find_all_roots(const Poly& f, const RootFindConfig& cfg) {
  check_config(cfg);
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  const FpContext& ctx = f.field();
  const u64 p = ctx.p();
  RootsResult res;

  if (p < cfg.small_p_cutoff) {
    res.roots = scan_roots(f);
    return res;
  }
  if (f.is_constant()) return res;

  Poly fs = split_part(f, &res.stats);
  if (fs.is_constant()) return res;
  if (fs.degree() == 1) {
    res.roots.push_back(ctx.neg(fs.coeff(0)));
    return res;
  }

  u64 h = std::min<u64>(p - 1, (u64)std::ceil(cfg.c_all * std::sqrt((long double)p)));
  PolyModulus pm(fs);
  std::vector<Poly> family{fs};
  u64 next_u = 0;

  while (true) {
    const u64 n = h - next_u + 1;
    std::vector<std::optional<Poly>> slot((std::size_t)n);
    if (cfg.exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (u64 i = 0; i < n; ++i) slot[(std::size_t)i] = g_u_impl(fs, pm, next_u + i);
    } else {
      for (u64 i = 0; i < n; ++i) slot[(std::size_t)i] = g_u_impl(fs, pm, next_u + i);
    }
    res.stats.sweep_powmods += n;
    res.stats.gcds += n;
    for (u64 i = 0; i < n; ++i) {
      if (!slot[(std::size_t)i]->is_constant()) family.push_back(std::move(*slot[(std::size_t)i]));
    }

    // Every g_u divides fs, so each basis element does too; the exponent
    // table of a full refinement would be all ones and is not needed here.
    std::vector<Poly> basis = coprime_basis(family);
    std::vector<u64> roots;
    bool all_linear = true;
    for (const Poly& b : basis) {
      if (b.degree() != 1) {
        all_linear = false;
        break;
      }
      roots.push_back(ctx.neg(b.coeff(0)));
    }
    if (all_linear) {
      if (roots.size() != fs.degree())
        throw Error(Errc::internal, "refined basis lost roots");
      std::sort(roots.begin(), roots.end());
      res.roots = std::move(roots);
      return res;
    }

    if (!cfg.fallback_doubling)
      throw Error(Errc::incomplete_separation,
                  "shift range exhausted before the basis became linear");
    if (h == p - 1)
      throw Error(Errc::internal, "full shift range failed to separate the roots");
    next_u = h + 1;
    h = std::min<u64>(p - 1, 2 * h);
    ++res.stats.fallback_doublings;
  }
}

std::optional<SpacingHit> spacing_split(const Poly& f, u64 h, const RootFindConfig& cfg,
                                        WorkStats* stats) {
  check_config(cfg);
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  if (f.is_constant() || f.degree() < 2)
    throw Error(Errc::degree_too_small, "spacing probe needs degree >= 2");
  const FpContext& ctx = f.field();
  Poly fm = monic(f);
  const std::size_t n = fm.degree();
  const u64 hi = std::min(h, ctx.p() - 1); // shifts repeat mod p beyond that

  u64 cnt = 0;
  auto hit = sweep_first_hit(1, hi, cfg.exec, cnt, [&](u64 u) -> std::optional<Poly> {
    Poly d = gcd(fm, shift(fm, u));
    if (!d.is_constant() && d.degree() < n) return d;
    return std::nullopt;
  });
  if (stats) stats->gcds += cnt;
  if (!hit) return std::nullopt;
  return SpacingHit{std::move(hit->second), hit->first};
}

FactorResult find_one_factor(const Poly& f, const RootFindConfig& cfg) {
  check_config(cfg);
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  if (f.is_constant() || f.degree() < 2)
    throw Error(Errc::degree_too_small, "factor search needs degree >= 2");
  const FpContext& ctx = f.field();
  const u64 p = ctx.p();
  Poly fm = monic(f);
  const std::size_t n = fm.degree();
  FactorResult res{Poly(ctx), {}};

  if (p < cfg.small_p_cutoff) {
    std::vector<u64> roots = scan_roots(fm);
    if (roots.size() != n)
      throw Error(Errc::bad_input, "expected a squarefree polynomial that splits over F_p");
    Poly g = Poly::constant(ctx, 1);
    for (std::size_t i = 0; i < n / 2; ++i) g = g * Poly::x_plus(ctx, ctx.neg(roots[i]));
    res.factor = std::move(g);
    return res;
  }

  u64 h = (u64)std::floor((1.0L + std::sqrt((long double)p) / (long double)n) *
                          std::pow((long double)p, (long double)cfg.delta / 2));
  h = std::max<u64>(h, 1);
  h = std::min<u64>(h, p - 1);

  PolyModulus pm(fm);
  Poly g(ctx);
  u64 done_shift = 0, done_legendre = 0;
  while (true) {
    // Phase 1: find a root pair closer than h, if one exists.
    u64 cnt = 0;
    auto hit = sweep_first_hit(done_shift + 1, h, cfg.exec, cnt, [&](u64 u) -> std::optional<Poly> {
      Poly d = gcd(fm, shift(fm, u));
      if (!d.is_constant() && d.degree() < n) return d;
      return std::nullopt;
    });
    res.stats.gcds += cnt;
    if (hit) {
      g = std::move(hit->second);
      break;
    }
    done_shift = h;

    // Phase 2: the root set is h-spaced; sweep the quadratic-residue split.
    u64 cnt2 = 0;
    auto hit2 = sweep_first_hit(done_legendre + 1, h, cfg.exec, cnt2,
                                [&](u64 u) -> std::optional<Poly> {
                                  Poly d = g_u_impl(fm, pm, u);
                                  if (!d.is_constant() && d.degree() < n) return d;
                                  return std::nullopt;
                                });
    res.stats.sweep_powmods += cnt2;
    res.stats.gcds += cnt2;
    if (hit2) {
      g = std::move(hit2->second);
      break;
    }
    done_legendre = h;

    if (!cfg.fallback_doubling)
      throw Error(Errc::incomplete_separation, "no nontrivial split within the shift range");
    if (h >= p - 1)
      throw Error(Errc::internal, "split polynomial of degree >= 2 must share a shifted root");
    ++res.stats.fallback_doublings;
    h = std::min<u64>(p - 1, 2 * h);
  }

  if (g.degree() > n / 2) {
    DivRem qr = div_rem(fm, g);
    if (!qr.rem.is_zero()) throw Error(Errc::internal, "sweep produced a non-divisor");
    g = monic(qr.quot);
  }
  res.factor = std::move(g);
  return res;
}

RootResult find_one_root(const Poly& f, const RootFindConfig& cfg) {
  check_config(cfg);
  if (f.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  const FpContext& ctx = f.field();
  RootResult res{0, {}};

  if (ctx.p() < cfg.small_p_cutoff) {
    for (u64 x = 0; x < ctx.p(); ++x) {
      if (eval(f, x) == 0) {
        res.root = x;
        return res;
      }
    }
    throw Error(Errc::no_root, "no roots in the field");
  }

  if (f.is_constant()) throw Error(Errc::no_root, "no roots in the field");
  Poly cur = split_part(f, &res.stats);
  if (cur.is_constant()) throw Error(Errc::no_root, "no roots in the field");

  while (cur.degree() > 1) {
    FactorResult fr = find_one_factor(cur, cfg);
    res.stats += fr.stats;
    ++res.stats.iterations;
    cur = std::move(fr.factor);
  }
  res.root = ctx.neg(cur.coeff(0));
  if (eval(f, res.root) != 0) throw Error(Errc::internal, "candidate root fails to evaluate to zero");
  return res;
}

} // namespace fproots
