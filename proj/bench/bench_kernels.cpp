// Compares every parallel kernel against its serial twin: wall times plus a
// strict equality check of the results.  --quick shrinks the workloads to
// smoke-test size (used by ctest); exit status reports mismatches.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "fproots/charsum.hpp"
#include "fproots/corpus.hpp"
#include "fproots/exec.hpp"
#include "fproots/roots.hpp"

using namespace fproots;

namespace {

int failures = 0;

template <typename F>
double time_ms(F&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& kernel, const std::string& params, double ser_ms, double par_ms,
         bool match) {
  std::printf("%s,%s,%.3f,%.3f,%.2f,%s\n", kernel.c_str(), params.c_str(), ser_ms, par_ms,
              par_ms > 0 ? ser_ms / par_ms : 0.0, match ? "true" : "false");
  if (!match) ++failures;
}

void bench_tchi(bool quick) {
  FpContext ctx(100003);
  Character chi = Character::quadratic(ctx);
  const u64 h = quick ? 300 : 2000;
  const std::size_t n = quick ? 100 : 500;
  Rng rng(1);
  SpacedSet S = SpacedSet::random(ctx, n, 0, rng);
  double ts = 0, tp = 0;
  double ser_ms = time_ms([&] { ts = t_chi({h}, S, chi, Exec::serial); });
  double par_ms = time_ms([&] { tp = t_chi({h}, S, chi, Exec::parallel); });
  row("tchi", "p=100003 h=" + std::to_string(h) + " s=" + std::to_string(n), ser_ms, par_ms,
      ts == tp);
}

void bench_weil(bool quick) {
  FpContext ctx(quick ? 100003 : 1000003);
  Character chi = Character::quadratic(ctx);
  Rng rng(2);
  Poly F = random_squarefree_poly(ctx, 5, rng);
  WeilResult ws{}, wp{};
  double ser_ms = time_ms([&] { ws = weil_sum(F, chi, Exec::serial); });
  double par_ms = time_ms([&] { wp = weil_sum(F, chi, Exec::parallel); });
  bool match = ws.int_sum == wp.int_sum && ws.abs_sum == wp.abs_sum &&
               ws.bound_ok == wp.bound_ok && ws.n_distinct == wp.n_distinct;
  row("weil", "p=" + std::to_string(ctx.p()) + " deg=5", ser_ms, par_ms, match);
}

void bench_count_w(bool quick) {
  FpContext ctx(100003);
  const u64 h = quick ? 200 : 2000;
  std::vector<u64> ells = primes_in_interval(11, 37);
  Rng rng(3);
  SpacedSet S = SpacedSet::random(ctx, 50, 0, rng);
  u64 cs = 0, cp = 0;
  double ser_ms = time_ms([&] { cs = count_W(ctx, {h}, ells, S, Exec::serial); });
  double par_ms = time_ms([&] { cp = count_W(ctx, {h}, ells, S, Exec::parallel); });
  row("count_w", "p=100003 h=" + std::to_string(h) + " l=8 s=50", ser_ms, par_ms, cs == cp);
}

void bench_wtable(bool quick) {
  FpContext ctx(100003);
  const u64 h = quick ? 50 : 200; // tuple count #I * #L * #S^2 drives the memory bill
  std::vector<u64> ells = primes_in_interval(11, 37);
  Rng rng(4);
  SpacedSet S = SpacedSet::random(ctx, quick ? 20 : 32, 0, rng);
  WTable a, b;
  double ser_ms = time_ms([&] { a = w_table(ctx, {h}, ells, S, Exec::serial); });
  double par_ms = time_ms([&] { b = w_table(ctx, {h}, ells, S, Exec::parallel); });
  bool match = a.total() == b.total() && a.sum_squares() == b.sum_squares() &&
               a.distinct_cells() == b.distinct_cells();
  row("wtable",
      "p=100003 h=" + std::to_string(h) + " l=8 s=" + std::to_string(S.size()), ser_ms,
      par_ms, match);
}

void bench_roots(bool quick) {
  FpContext ctx(quick ? 9973 : 99991);
  const std::size_t k = quick ? 16 : 64;
  Rng rng(5);
  SplitPoly sp = random_split_poly(ctx, k, rng);
  RootFindConfig ser, par;
  ser.exec = Exec::serial;
  par.exec = Exec::parallel;
  RootsResult rs, rp;
  double ser_ms = time_ms([&] { rs = find_all_roots(sp.poly, ser); });
  double par_ms = time_ms([&] { rp = find_all_roots(sp.poly, par); });
  bool match = rs.roots == rp.roots && rs.roots == sp.roots &&
               rs.stats.sweep_powmods == rp.stats.sweep_powmods &&
               rs.stats.gcds == rp.stats.gcds;
  row("roots", "p=" + std::to_string(ctx.p()) + " n=" + std::to_string(k), ser_ms, par_ms,
      match);
}

} // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--quick") == 0) quick = true;

  std::printf("# serial vs parallel kernel comparison (threads=%d)%s\n", max_threads(),
              quick ? " quick" : "");
  std::printf("kernel,params,serial_ms,parallel_ms,speedup,match\n");
  bench_tchi(quick);
  bench_weil(quick);
  bench_count_w(quick);
  bench_wtable(quick);
  bench_roots(quick);
  return failures == 0 ? 0 : 1;
}
