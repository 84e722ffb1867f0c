// Command-line front end: root finding, coprime refinement, character-sum
// experiments and benchmarks.  All machine output is CSV or JSON; every
// printed root or factor is re-verified against the input first.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fproots/charsum.hpp"
#include "fproots/corpus.hpp"
#include "fproots/exec.hpp"
#include "fproots/fp.hpp"
#include "fproots/oracle.hpp"
#include "fproots/poly.hpp"
#include "fproots/refine.hpp"
#include "fproots/roots.hpp"
#include "fproots/rng.hpp"

using namespace fproots;

namespace {

// Exit codes: 0 success, 2 input error, 3 resource cap, 4 failed
// self-verification (must never happen).
int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::too_large:
    case Errc::cap_exceeded:
    case Errc::field_too_large:
      return 3;
    case Errc::internal:
      return 4;
    default:
      return 2;
  }
}

// Any modulus problem is an input error at the CLI boundary, including the
// width cap that the library reports as a resource code.
FpContext make_context(u64 p) {
  try {
    return FpContext(p);
  } catch (const Error& e) {
    throw Error(Errc::bad_input, e.what());
  }
}

std::vector<u64> parse_u64_list(const std::string& text, const char* what) {
  std::vector<u64> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string tok =
        text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    std::size_t b = tok.find_first_not_of(" \t");
    std::size_t e = tok.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw Error(Errc::bad_input, std::string("empty entry in ") + what);
    tok = tok.substr(b, e - b + 1);
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw Error(Errc::bad_input, std::string("bad value '") + tok + "' in " + what);
    out.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string fmt_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string join_semi(const std::vector<u64>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(vs[i]);
  }
  return out;
}

// Output sink: stdout for "-", otherwise a file replaced atomically enough
// for our purposes (plain fopen/w).
class Sink {
public:
  explicit Sink(const std::string& path) {
    if (path.empty() || path == "-") {
      f_ = stdout;
      owned_ = false;
    } else {
      f_ = std::fopen(path.c_str(), "wb");
      if (!f_) throw Error(Errc::bad_input, "cannot open output file '" + path + "'");
      owned_ = true;
    }
  }
  ~Sink() {
    if (owned_ && f_) std::fclose(f_);
  }
  Sink(const Sink&) = delete;
  Sink& operator=(const Sink&) = delete;

  void line(const std::string& s) { std::fputs((s + "\n").c_str(), f_); }

private:
  FILE* f_ = nullptr;
  bool owned_ = false;
};

void verify_roots_or_die(const Poly& f, const std::vector<u64>& roots) {
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (eval(f, roots[i]) != 0)
      throw Error(Errc::internal, "self-check failed: printed value is not a root");
    if (i && roots[i - 1] >= roots[i])
      throw Error(Errc::internal, "self-check failed: roots not strictly ascending");
  }
}

// ---- roots / root -------------------------------------------------------

struct PolyArgs {
  u64 modulus = 0;
  std::string poly;
  bool serial = false;
};

int run_roots(const PolyArgs& a, double c_all, bool json) {
  FpContext ctx = make_context(a.modulus);
  Poly f = parse_poly(ctx, a.poly);
  RootFindConfig cfg;
  cfg.c_all = c_all;
  cfg.exec = a.serial ? Exec::serial : Exec::parallel;
  RootsResult res = find_all_roots(f, cfg);
  verify_roots_or_die(f, res.roots);
  if (json) {
    nlohmann::json arr = res.roots;
    std::printf("%s\n", arr.dump().c_str());
  } else {
    for (u64 r : res.roots) std::printf("%llu\n", (unsigned long long)r);
  }
  return 0;
}

int run_root(const PolyArgs& a, double delta) {
  FpContext ctx = make_context(a.modulus);
  Poly f = parse_poly(ctx, a.poly);
  RootFindConfig cfg;
  cfg.delta = delta;
  cfg.exec = a.serial ? Exec::serial : Exec::parallel;
  try {
    RootResult res = find_one_root(f, cfg);
    if (eval(f, res.root) != 0)
      throw Error(Errc::internal, "self-check failed: printed value is not a root");
    std::printf("%llu\n", (unsigned long long)res.root);
  } catch (const Error& e) {
    if (e.code() != Errc::no_root) throw;
    std::printf("no-root\n");
  }
  return 0;
}

// ---- refine -------------------------------------------------------------

int run_refine(u64 modulus, const std::vector<std::string>& poly_texts) {
  FpContext ctx = make_context(modulus);
  std::vector<Poly> inputs;
  for (const std::string& t : poly_texts) inputs.push_back(parse_poly(ctx, t));
  RefinedBasis rb = factor_refine(inputs);

  for (std::size_t i = 0; i < rb.basis.size(); ++i)
    for (std::size_t j = i + 1; j < rb.basis.size(); ++j)
      if (!gcd(rb.basis[i], rb.basis[j]).is_one())
        throw Error(Errc::internal, "self-check failed: basis not coprime");
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    Poly acc = Poly::constant(ctx, rb.units[i]);
    for (std::size_t j = 0; j < rb.basis.size(); ++j)
      for (u32 e = 0; e < rb.exponents[i][j]; ++e) acc = acc * rb.basis[j];
    if (acc != inputs[i])
      throw Error(Errc::internal, "self-check failed: basis does not reconstruct input");
  }

  nlohmann::ordered_json out;
  out["modulus"] = modulus;
  out["units"] = rb.units;
  nlohmann::ordered_json basis = nlohmann::ordered_json::array();
  for (const Poly& b : rb.basis) basis.push_back(b.coeffs());
  out["basis"] = std::move(basis);
  out["exponents"] = rb.exponents;
  std::printf("%s\n", out.dump().c_str());
  return 0;
}

// ---- experiments --------------------------------------------------------

struct ExperimentArgs {
  std::string p_list;
  u64 seed = 1;
  std::string out = "-";
};

int run_exp_tchi(const ExperimentArgs& a, double delta, u64 trials, long long set_size) {
  if (delta <= 0 || delta >= 0.5) throw Error(Errc::bad_input, "delta must lie in (0, 0.5)");
  std::vector<u64> ps = parse_u64_list(a.p_list, "--p-list");
  Sink sink(a.out);
  sink.line("# tool=fproots command=experiment-tchi rng=" + std::string(kRngName) +
            " seed=" + std::to_string(a.seed) + " delta=" + fmt_real(delta) +
            " trials=" + std::to_string(trials) +
            " set-size=" + (set_size < 0 ? std::string("auto") : std::to_string(set_size)) +
            " p-list=" + join_semi(ps));
  sink.line("p,h,set_size,trial,T,ratio");
  for (u64 p : ps) {
    FpContext ctx = make_context(p);
    Character chi = Character::quadratic(ctx);
    u64 h = std::max<u64>(1, (u64)std::llround(std::pow((double)p, (0.5 + delta) / 2)));
    h = std::min(h, p - 1);
    u64 s = set_size < 0 ? h : (u64)set_size;
    // An h-spaced set of size s needs s*(h+1) <= p; clamp auto-derived sizes
    // so tiny primes stay usable.
    if (set_size < 0) s = std::min(s, p / (h + 1));
    for (u64 t = 0; t < trials; ++t) {
      Rng rng(Rng::mix(a.seed, Rng::mix(p, t)));
      SpacedSet S = SpacedSet::random(ctx, s, h, rng);
      double T = t_chi({h}, S, chi, Exec::parallel);
      double ratio = s == 0 ? 0.0 : T / ((double)s * (double)s * (double)h);
      sink.line(std::to_string(p) + "," + std::to_string(h) + "," + std::to_string(s) + "," +
                std::to_string(t) + "," + fmt_real(T) + "," + fmt_real(ratio));
    }
  }
  return 0;
}

int run_exp_energy(const ExperimentArgs& a, bool verify) {
  std::vector<u64> ps = parse_u64_list(a.p_list, "--p-list");
  Sink sink(a.out);
  sink.line("# tool=fproots command=experiment-energy rng=" + std::string(kRngName) +
            " seed=" + std::to_string(a.seed) + " verify=" + (verify ? "1" : "0") +
            " p-list=" + join_semi(ps));
  sink.line("p,h,L,set_size,count_W,sum_W_sq,ratio22,ratio23");
  for (u64 p : ps) {
    FpContext ctx = make_context(p);
    u64 h = std::max<u64>(1, (u64)std::llround(std::pow((double)p, 0.3)));
    h = std::min(h, p - 1);
    u64 L = std::max<u64>(2, h / 2);
    std::vector<u64> ells;
    for (u64 q : primes_in_interval(L, 2 * L))
      if (q % p != 0) ells.push_back(q);
    u64 s = std::max<u64>(1, (u64)std::llround(std::pow((double)p, 0.3)));
    s = std::max<u64>(1, std::min(s, p / (h + 1))); // spacing feasibility
    Rng rng(Rng::mix(a.seed, p));
    SpacedSet S = SpacedSet::random(ctx, s, h, rng);

    u64 cw = count_W(ctx, {h}, ells, S, Exec::parallel);
    WTable wt = w_table(ctx, {h}, ells, S, Exec::parallel);
    u64 sq = wt.sum_squares();
    if (verify) {
      if (cw != brute_count_W(ctx, {h}, ells, S) || sq != brute_sum_W_sq(ctx, {h}, ells, S))
        throw Error(Errc::internal, "self-check failed: counts disagree with the brute oracle");
    }
    BoundParams bp{p, h, L, S.size(), 2};
    double r22 = report_pair_collisions(cw, bp).ratio;
    double r23 = report_energy(sq, bp).ratio;
    sink.line(std::to_string(p) + "," + std::to_string(h) + "," + std::to_string(L) + "," +
              std::to_string(S.size()) + "," + std::to_string(cw) + "," + std::to_string(sq) +
              "," + fmt_real(r22) + "," + fmt_real(r23));
  }
  return 0;
}

int run_exp_weil(const ExperimentArgs& a, u64 trials, u64 deg_max) {
  if (deg_max < 1) throw Error(Errc::bad_input, "--deg-max must be >= 1");
  std::vector<u64> ps = parse_u64_list(a.p_list, "--p-list");
  Sink sink(a.out);
  sink.line("# tool=fproots command=experiment-weil rng=" + std::string(kRngName) +
            " seed=" + std::to_string(a.seed) + " trials=" + std::to_string(trials) +
            " deg-max=" + std::to_string(deg_max) + " p-list=" + join_semi(ps));
  sink.line("p,deg,N,abs_sum,bound,ok");
  for (u64 p : ps) {
    FpContext ctx = make_context(p);
    Character chi = Character::quadratic(ctx);
    for (u64 t = 0; t < trials; ++t) {
      Rng rng(Rng::mix(a.seed, Rng::mix(p, t)));
      u64 deg = 1 + rng.below(deg_max);
      deg = std::min(deg, p - 1); // weil needs deg < p
      Poly F = random_squarefree_poly(ctx, deg, rng);
      WeilResult w = weil_sum(F, chi, Exec::parallel);
      sink.line(std::to_string(p) + "," + std::to_string(deg) + "," +
                std::to_string(w.n_distinct) + "," + fmt_real(w.abs_sum) + "," +
                fmt_real(w.bound) + "," + (w.bound_ok ? "true" : "false"));
    }
  }
  return 0;
}

// ---- bench --------------------------------------------------------------

int run_bench(bool all_roots, u64 modulus, const std::string& degrees_text, u64 trials,
              u64 seed, const std::string& out, double c_all, double delta) {
  FpContext ctx = make_context(modulus);
  std::vector<u64> degrees = parse_u64_list(degrees_text, "--degrees");
  for (u64 d : degrees)
    if (d < 1 || d >= ctx.p())
      throw Error(Errc::bad_input, "degrees must lie in [1, p-1]");
  Sink sink(out);
  sink.line(std::string("# tool=fproots command=bench-") + (all_roots ? "roots" : "root") +
            " rng=" + std::string(kRngName) + " p=" + std::to_string(modulus) +
            " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed) +
            " degrees=" + join_semi(degrees));
  sink.line("command,p,degree,trial,wall_ms,sweep_powmods,setup_powmods,gcds,"
            "fallback_doublings,iterations");
  RootFindConfig cfg;
  cfg.c_all = c_all;
  cfg.delta = delta;
  for (u64 deg : degrees) {
    for (u64 t = 0; t < trials; ++t) {
      Rng rng(Rng::mix(seed, Rng::mix(deg, t)));
      SplitPoly sp = random_split_poly(ctx, deg, rng);
      WorkStats st;
      auto t0 = std::chrono::steady_clock::now();
      if (all_roots) {
        RootsResult r = find_all_roots(sp.poly, cfg);
        st = r.stats;
        verify_roots_or_die(sp.poly, r.roots);
        if (r.roots != sp.roots)
          throw Error(Errc::internal, "self-check failed: planted roots not recovered");
      } else {
        RootResult r = find_one_root(sp.poly, cfg);
        st = r.stats;
        if (eval(sp.poly, r.root) != 0)
          throw Error(Errc::internal, "self-check failed: bench output is not a root");
      }
      auto t1 = std::chrono::steady_clock::now();
      double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      sink.line(std::string(all_roots ? "roots" : "root") + "," + std::to_string(modulus) +
                "," + std::to_string(deg) + "," + std::to_string(t) + "," + fmt_real(ms) +
                "," + std::to_string(st.sweep_powmods) + "," + std::to_string(st.setup_powmods) +
                "," + std::to_string(st.gcds) + "," + std::to_string(st.fallback_doublings) +
                "," + std::to_string(st.iterations));
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic root finding over F_p and character-sum experiments"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "cap OpenMP worker threads (0 = default)");

  PolyArgs roots_args;
  double roots_c_all = 2.0;
  bool roots_json = false;
  CLI::App* cmd_roots = app.add_subcommand("roots", "all roots of a polynomial");
  cmd_roots->add_option("--modulus", roots_args.modulus, "odd prime modulus")->required();
  cmd_roots->add_option("--poly", roots_args.poly, "coefficients c0,c1,...")->required();
  cmd_roots->add_option("--c-all", roots_c_all, "shift range multiplier");
  cmd_roots->add_flag("--json", roots_json, "print a JSON array");
  cmd_roots->add_flag("--serial", roots_args.serial, "force the serial kernels");

  PolyArgs root_args;
  double root_delta = 0.25;
  CLI::App* cmd_root = app.add_subcommand("root", "one root of a polynomial");
  cmd_root->add_option("--modulus", root_args.modulus, "odd prime modulus")->required();
  cmd_root->add_option("--poly", root_args.poly, "coefficients c0,c1,...")->required();
  cmd_root->add_option("--delta", root_delta, "one-root range exponent in (0, 0.5)");
  cmd_root->add_flag("--serial", root_args.serial, "force the serial kernels");

  u64 refine_modulus = 0;
  std::vector<std::string> refine_polys;
  CLI::App* cmd_refine = app.add_subcommand("refine", "coprime basis of a family");
  cmd_refine->add_option("--modulus", refine_modulus, "odd prime modulus")->required();
  cmd_refine->add_option("--poly", refine_polys, "coefficients c0,c1,... (repeatable)")
      ->required();

  CLI::App* cmd_exp = app.add_subcommand("experiment", "character-sum sweeps (CSV)");
  cmd_exp->require_subcommand(1);
  ExperimentArgs tchi_args, energy_args, weil_args;
  double tchi_delta = 0.1;
  u64 tchi_trials = 20;
  long long tchi_set_size = -1;
  CLI::App* exp_tchi = cmd_exp->add_subcommand("tchi", "T over shifted spaced sets");
  exp_tchi->add_option("--p-list", tchi_args.p_list, "comma-separated primes")->required();
  exp_tchi->add_option("--delta", tchi_delta, "spacing exponent, h ~ p^((1/2+delta)/2)");
  exp_tchi->add_option("--trials", tchi_trials, "independent sets per prime");
  exp_tchi->add_option("--set-size", tchi_set_size, "override #S (default: equal to h)");
  exp_tchi->add_option("--seed", tchi_args.seed, "corpus seed");
  exp_tchi->add_option("--out", tchi_args.out, "output file, - for stdout");

  bool energy_verify = false;
  CLI::App* exp_energy = cmd_exp->add_subcommand("energy", "collision counts and energy");
  exp_energy->add_option("--p-list", energy_args.p_list, "comma-separated primes")->required();
  exp_energy->add_flag("--verify", energy_verify, "cross-check against the brute oracles");
  exp_energy->add_option("--seed", energy_args.seed, "corpus seed");
  exp_energy->add_option("--out", energy_args.out, "output file, - for stdout");

  u64 weil_trials = 100, weil_deg_max = 5;
  CLI::App* exp_weil = cmd_exp->add_subcommand("weil", "full-field sums vs the sqrt bound");
  exp_weil->add_option("--p-list", weil_args.p_list, "comma-separated primes")->required();
  exp_weil->add_option("--trials", weil_trials, "random polynomials per prime");
  exp_weil->add_option("--deg-max", weil_deg_max, "maximum polynomial degree");
  exp_weil->add_option("--seed", weil_args.seed, "corpus seed");
  exp_weil->add_option("--out", weil_args.out, "output file, - for stdout");

  CLI::App* cmd_bench = app.add_subcommand("bench", "timing and counter sweeps (CSV)");
  cmd_bench->require_subcommand(1);
  u64 bench_modulus = 0, bench_trials = 3, bench_seed = 1;
  std::string bench_degrees = "16,32,64,128", bench_out = "-";
  double bench_c_all = 2.0, bench_delta = 0.25;
  for (const char* name : {"roots", "root"}) {
    CLI::App* sub = cmd_bench->add_subcommand(name, std::string("benchmark find_") +
                                                        (name[4] ? "all_roots" : "one_root"));
    sub->add_option("--modulus", bench_modulus, "odd prime modulus")->required();
    sub->add_option("--degrees", bench_degrees, "comma-separated degree list");
    sub->add_option("--trials", bench_trials, "polynomials per degree");
    sub->add_option("--seed", bench_seed, "corpus seed");
    sub->add_option("--out", bench_out, "output file, - for stdout");
    sub->add_option("--c-all", bench_c_all, "shift range multiplier");
    sub->add_option("--delta", bench_delta, "one-root range exponent");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (threads > 0) set_threads(threads);

  try {
    if (app.got_subcommand(cmd_roots)) return run_roots(roots_args, roots_c_all, roots_json);
    if (app.got_subcommand(cmd_root)) return run_root(root_args, root_delta);
    if (app.got_subcommand(cmd_refine)) return run_refine(refine_modulus, refine_polys);
    if (app.got_subcommand(cmd_exp)) {
      if (cmd_exp->got_subcommand(exp_tchi))
        return run_exp_tchi(tchi_args, tchi_delta, tchi_trials, tchi_set_size);
      if (cmd_exp->got_subcommand(exp_energy)) return run_exp_energy(energy_args, energy_verify);
      return run_exp_weil(weil_args, weil_trials, weil_deg_max);
    }
    // bench
    bool all_roots = cmd_bench->got_subcommand("roots");
    return run_bench(all_roots, bench_modulus, bench_degrees, bench_trials, bench_seed,
                     bench_out, bench_c_all, bench_delta);
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
