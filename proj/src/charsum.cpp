#include "fproots/charsum.hpp"

#include <algorithm>
#include <cmath>

namespace fproots {

namespace {

constexpr u64 kTupleCap = 100'000'000;

void check_interval(const FpContext& ctx, const Interval& I) {
  if (I.h < 1 || I.h > ctx.p() - 1)
    throw Error(Errc::bad_input, "interval length must lie in [1, p-1]");
}

void check_ells(const FpContext& ctx, const std::vector<u64>& ells) {
  for (u64 l : ells) {
    if (l == 0 || l % ctx.p() == 0)
      throw Error(Errc::bad_input, "denominator prime not invertible mod p");
  }
}

} // namespace

bool is_h_spaced(const FpContext& ctx, const std::vector<u64>& elems, u64 h) {
  if (elems.empty()) throw Error(Errc::bad_input, "spacing of an empty set");
  if (h < 1 || h > ctx.p() - 1) throw Error(Errc::bad_input, "spacing must lie in [1, p-1]");
  std::vector<u64> v(elems);
  for (u64& x : v) x = ctx.reduce(x);
  std::sort(v.begin(), v.end());
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] - v[i - 1] <= h) return false; // covers duplicates as gap 0
  }
  if (v.size() >= 2 && ctx.p() - (v.back() - v.front()) <= h) return false;
  return true;
}

SpacedSet SpacedSet::make(const FpContext& ctx, std::vector<u64> elems, u64 spacing) {
  if (spacing >= ctx.p()) throw Error(Errc::bad_input, "spacing must be below p");
  for (u64& x : elems) x = ctx.reduce(x);
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end())
    throw Error(Errc::bad_input, "set elements must be distinct");
  if (spacing >= 1 && !elems.empty() && !is_h_spaced(ctx, elems, spacing))
    throw Error(Errc::bad_input, "set is not spaced as claimed");
  return SpacedSet(ctx, std::move(elems), spacing);
}

SpacedSet SpacedSet::random(const FpContext& ctx, std::size_t size, u64 spacing, Rng& rng) {
  if (spacing >= ctx.p()) throw Error(Errc::bad_input, "spacing must be below p");
  if ((u128)(spacing + 1) * size > ctx.p())
    throw Error(Errc::bad_input, "no spaced set of this size exists");

  const u64 p = ctx.p();
  std::vector<u64> cur;
  cur.reserve(size);
  u64 attempts = 0;
  const u64 attempt_cap = 1000 + 200 * (u64)size;
  while (cur.size() < size) {
    if (++attempts > attempt_cap)
      throw Error(Errc::cap_exceeded, "rejection sampling stalled; set too dense");
    const u64 r = rng.below(p);
    auto it = std::lower_bound(cur.begin(), cur.end(), r);
    if (!cur.empty()) {
      const u64 succ = it == cur.end() ? cur.front() : *it;
      const u64 pred = it == cur.begin() ? cur.back() : *(it - 1);
      if ((r + p - pred) % p <= spacing) continue;
      if ((succ + p - r) % p <= spacing) continue;
    }
    cur.insert(it, r);
  }
  return SpacedSet(ctx, std::move(cur), spacing);
}

double t_chi(const Interval& I, const SpacedSet& S, const Character& chi, Exec exec) {
  const FpContext& ctx = chi.field();
  require_same_field(ctx, S.field());
  check_interval(ctx, I);

  const u64 h = I.h;
  const std::vector<u64>& ss = S.elements();
  const u32 d = chi.order();

  if (d == 2) {
    // chi values are 0 or +-1, so every per-u inner sum is a small integer
    // and the whole statistic is exact.
    std::vector<i64> inner(h);
    auto body = [&](u64 u) {
      i64 acc = 0;
      for (u64 s : ss) {
        CharValue v = chi.value(ctx.add(u, s));
        if (!v.zero) acc += v.index == 0 ? 1 : -1;
      }
      inner[u - 1] = acc;
    };
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
      for (u64 u = 1; u <= h; ++u) body(u);
    } else {
      for (u64 u = 1; u <= h; ++u) body(u);
    }
    u128 total = 0;
    for (u64 u = 1; u <= h; ++u) total += (u128)(inner[u - 1] * inner[u - 1]);
    return (double)total;
  }

  std::vector<double> term(h);
  auto body = [&](u64 u) {
    std::vector<u64> cnt(d, 0);
    for (u64 s : ss) {
      CharValue v = chi.value(ctx.add(u, s));
      if (!v.zero) ++cnt[v.index];
    }
    double re = 0.0, im = 0.0;
    for (u32 k = 0; k < d; ++k) {
      if (cnt[k] == 0) continue;
      re += (double)cnt[k] * chi.root_re(k);
      im += (double)cnt[k] * chi.root_im(k);
    }
    term[u - 1] = re * re + im * im;
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (u64 u = 1; u <= h; ++u) body(u);
  } else {
    for (u64 u = 1; u <= h; ++u) body(u);
  }
  double total = 0.0;
  for (u64 u = 1; u <= h; ++u) total += term[u - 1]; // fixed order: u ascending
  return total;
}

WeilResult weil_sum(const Poly& F, const Character& chi, Exec exec) {
  const FpContext& ctx = F.field();
  require_same_field(ctx, chi.field());
  if (F.is_zero()) throw Error(Errc::zero_input, "zero polynomial");
  if (F.is_constant()) throw Error(Errc::bad_input, "bound needs a nonconstant polynomial");
  if (ctx.p() > kMaxTableField)
    throw Error(Errc::field_too_large, "full-field sum needs p <= 2^26");
  if (F.degree() >= ctx.p())
    throw Error(Errc::bad_input, "degree must stay below the characteristic");

  const u64 p = ctx.p();
  const u32 d = chi.order();
  const std::vector<u64>& cf = F.coeffs();

  auto horner = [&](u64 x) {
    u64 r = 0;
    for (std::size_t i = cf.size(); i-- > 0;) r = ctx.add(ctx.mul(r, x), cf[i]);
    return r;
  };

  // Integer tallies per root-of-unity index; merge order cannot matter.
  std::vector<u64> cnt(d, 0);
  if (exec == Exec::parallel) {
#pragma omp parallel
    {
      std::vector<u64> local(d, 0);
#pragma omp for schedule(static) nowait
      for (u64 x = 0; x < p; ++x) {
        CharValue v = chi.value(horner(x));
        if (!v.zero) ++local[v.index];
      }
#pragma omp critical
      for (u32 k = 0; k < d; ++k) cnt[k] += local[k];
    }
  } else {
    for (u64 x = 0; x < p; ++x) {
      CharValue v = chi.value(horner(x));
      if (!v.zero) ++cnt[v.index];
    }
  }

  WeilResult res{};
  Poly sqf = div_rem(F, gcd(F, derivative(F))).quot;
  res.n_distinct = sqf.degree();

  res.power_exempt = true;
  for (const auto& [part, mult] : squarefree_decomposition(F)) {
    (void)part;
    if (mult % d != 0) {
      res.power_exempt = false;
      break;
    }
  }

  res.bound = (double)res.n_distinct * std::sqrt((double)p);
  if (d == 2) {
    res.exact = true;
    res.int_sum = (i64)cnt[0] - (i64)cnt[1];
    const u128 lhs2 = (u128)((res.int_sum < 0 ? -res.int_sum : res.int_sum)) *
                      (u128)(res.int_sum < 0 ? -res.int_sum : res.int_sum);
    const u128 rhs2 = (u128)res.n_distinct * res.n_distinct * p;
    res.abs_sum = std::abs((double)res.int_sum);
    res.bound_ok = lhs2 <= rhs2;
  } else {
    double re = 0.0, im = 0.0;
    for (u32 k = 0; k < d; ++k) {
      if (cnt[k] == 0) continue;
      re += (double)cnt[k] * chi.root_re(k);
      im += (double)cnt[k] * chi.root_im(k);
    }
    res.exact = false;
    res.int_sum = 0;
    res.abs_sum = std::hypot(re, im);
    res.bound_ok = res.abs_sum <= res.bound * (1.0 + 1e-12) + 1e-9;
  }
  return res;
}

namespace {

// Fills the multiset of values (u+s)/l over the full parameter box, one slot
// per flat index so both Exec modes produce the same vector.
std::vector<u64> value_box(const FpContext& ctx, const Interval& I,
                           const std::vector<u64>& ells, const SpacedSet& S, Exec exec) {
  const u64 h = I.h;
  const std::size_t nl = ells.size();
  const std::size_t ns = S.size();
  std::vector<u64> inv(nl);
  for (std::size_t i = 0; i < nl; ++i) inv[i] = ctx.inv(ctx.reduce(ells[i]));

  const std::vector<u64>& ss = S.elements();
  std::vector<u64> vals(h * nl * ns);
  auto body = [&](u64 u) {
    std::size_t base = (std::size_t)(u - 1) * nl * ns;
    for (std::size_t li = 0; li < nl; ++li) {
      for (std::size_t si = 0; si < ns; ++si)
        vals[base + li * ns + si] = ctx.mul(ctx.add(u, ss[si]), inv[li]);
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (u64 u = 1; u <= h; ++u) body(u);
  } else {
    for (u64 u = 1; u <= h; ++u) body(u);
  }
  return vals;
}

} // namespace

u64 count_W(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
            const SpacedSet& S, Exec exec) {
  require_same_field(ctx, S.field());
  check_interval(ctx, I);
  check_ells(ctx, ell_primes);
  if (ell_primes.empty() || S.size() == 0) return 0;
  if ((u128)I.h * ell_primes.size() * S.size() > kTupleCap)
    throw Error(Errc::too_large, "parameter box exceeds the 10^8 triple cap");

  std::vector<u64> vals = value_box(ctx, I, ell_primes, S, exec);
  std::sort(vals.begin(), vals.end());
  u64 total = 0;
  for (std::size_t i = 0; i < vals.size();) {
    std::size_t j = i;
    while (j < vals.size() && vals[j] == vals[i]) ++j;
    const u64 run = j - i;
    total += run * run;
    i = j;
  }
  return total;
}

WTable w_table(const FpContext& ctx, const Interval& I, const std::vector<u64>& ell_primes,
               const SpacedSet& S, Exec exec) {
  require_same_field(ctx, S.field());
  check_interval(ctx, I);
  check_ells(ctx, ell_primes);
  const u64 h = I.h;
  const std::size_t nl = ell_primes.size();
  const std::size_t ns = S.size();
  if ((u128)h * nl * ns * ns > kTupleCap)
    throw Error(Errc::too_large, "parameter box exceeds the 10^8 tuple cap");

  std::vector<u64> inv(nl);
  for (std::size_t i = 0; i < nl; ++i) inv[i] = ctx.inv(ctx.reduce(ell_primes[i]));
  const std::vector<u64>& ss = S.elements();

  std::vector<u128> keys((std::size_t)h * nl * ns * ns);
  auto body = [&](u64 u) {
    std::vector<u64> v(ns);
    for (std::size_t li = 0; li < nl; ++li) {
      for (std::size_t si = 0; si < ns; ++si) v[si] = ctx.mul(ctx.add(u, ss[si]), inv[li]);
      std::size_t base = ((std::size_t)(u - 1) * nl + li) * ns * ns;
      for (std::size_t si = 0; si < ns; ++si) {
        for (std::size_t ti = 0; ti < ns; ++ti)
          keys[base + si * ns + ti] = ((u128)v[si] << 64) | v[ti];
      }
    }
  };
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
    for (u64 u = 1; u <= h; ++u) body(u);
  } else {
    for (u64 u = 1; u <= h; ++u) body(u);
  }

  std::sort(keys.begin(), keys.end());
  WTable t;
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    t.keys_.push_back(keys[i]);
    t.counts_.push_back(j - i);
    i = j;
  }
  return t;
}

u64 WTable::total() const {
  u64 s = 0;
  for (u64 c : counts_) s += c;
  return s;
}

u64 WTable::sum_squares() const {
  u64 s = 0;
  for (u64 c : counts_) s += c * c;
  return s;
}

u64 WTable::lookup(u64 x, u64 y) const {
  const u128 key = ((u128)x << 64) | y;
  auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return 0;
  return counts_[(std::size_t)(it - keys_.begin())];
}

std::size_t WTable::distinct_cells() const { return keys_.size(); }

std::vector<WTable::Cell> WTable::cells() const {
  std::vector<Cell> out(keys_.size());
  for (std::size_t i = 0; i < keys_.size(); ++i)
    out[i] = Cell{(u64)(keys_[i] >> 64), (u64)keys_[i], counts_[i]};
  return out;
}

namespace {

BoundReport make_report(double lhs, std::vector<double> terms, const BoundParams& params) {
  BoundReport r;
  r.lhs = lhs;
  r.rhs_terms = std::move(terms);
  double m = 0.0;
  for (double t : r.rhs_terms) m = std::max(m, t);
  r.ratio = lhs == 0.0 ? 0.0 : lhs / m;
  r.params = params;
  return r;
}

} // namespace

BoundReport report_pair_collisions(u64 count_w_value, const BoundParams& params) {
  const double s = (double)params.set_size;
  const double h = (double)params.h;
  const double L = (double)params.L;
  const double p = (double)params.p;
  const double shl = s * h * L;
  return make_report((double)count_w_value, {shl * shl / p, shl * std::log(p)}, params);
}

BoundReport report_energy(u64 sum_w_sq, const BoundParams& params) {
  const double s = (double)params.set_size;
  const double hl = (double)params.h * (double)params.L;
  const double p = (double)params.p;
  return make_report((double)sum_w_sq,
                     {s * s * s * hl * hl / p, s * s * (double)params.h * (double)params.L * std::log(p)},
                     params);
}

BoundReport report_decay(double t_chi_value, const BoundParams& params) {
  const double s = (double)params.set_size;
  const double h = (double)params.h;
  return make_report(t_chi_value, {s * s * h}, params);
}

} // namespace fproots
