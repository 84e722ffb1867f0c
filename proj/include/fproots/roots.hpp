#pragma once

#include <optional>
#include <vector>

#include "fproots/exec.hpp"
#include "fproots/poly.hpp"

namespace fproots {

struct RootFindConfig {
  double c_all = 2.0;          // all-roots shift range multiplier, h = ceil(c_all * sqrt(p))
  double delta = 0.25;         // one-root range exponent, must stay in (0, 0.5)
  u64 small_p_cutoff = 4096;   // below this, every entry point enumerates directly
  bool fallback_doubling = true;
  Exec exec = Exec::parallel;
};

// Operation counters.  sweep_powmods and the sweep share of gcds count
// identically in both Exec modes: a parallel block charges only the prefix a
// serial run would have evaluated before the first hit.
struct WorkStats {
  u64 sweep_powmods = 0;      // (X+u)^((p-1)/2) evaluations across all sweeps
  u64 setup_powmods = 0;      // X^p mod f in split-part extraction
  u64 gcds = 0;               // sweep-level gcds (split part, shifts, Legendre splits)
  u64 fallback_doublings = 0;
  u64 iterations = 0;         // degree-halving rounds in find_one_root

  WorkStats& operator+=(const WorkStats& o) {
    sweep_powmods += o.sweep_powmods;
    setup_powmods += o.setup_powmods;
    gcds += o.gcds;
    fallback_doublings += o.fallback_doublings;
    iterations += o.iterations;
    return *this;
  }
};

struct RootsResult {
  std::vector<u64> roots; // ascending
  WorkStats stats;
};

struct FactorResult {
  Poly factor; // monic, 1 <= deg <= floor(deg f / 2)
  WorkStats stats;
};

struct RootResult {
  u64 root;
  WorkStats stats;
};

struct SpacingHit {
  Poly factor; // monic, 1 <= deg < deg f
  u64 u = 0;   // smallest shift that worked
};

// Monic squarefree polynomial with the same root set as f in F_p, computed
// as gcd(f, X^p - X); keeps the root 0.
Poly split_part(const Poly& f, WorkStats* stats = nullptr);

// gcd(f, (X+u)^((p-1)/2) - 1): the divisor of f collecting roots a with
// a + u a nonzero quadratic residue.  f must be monic squarefree split.
Poly g_u(const Poly& f, u64 u);

// All roots of f, ascending.  Exact for every nonzero f.
RootsResult find_all_roots(const Poly& f, const RootFindConfig& cfg = {});

// First u in [1, h] with 1 <= deg gcd(f(X), f(X+u)) < deg f, if any; an
// empty result certifies the root set of f is h-spaced.
std::optional<SpacingHit> spacing_split(const Poly& f, u64 h, const RootFindConfig& cfg = {},
                                        WorkStats* stats = nullptr);

// A monic factor of degree in [1, floor(deg f / 2)] of a monic squarefree
// split polynomial of degree >= 2.
FactorResult find_one_factor(const Poly& f, const RootFindConfig& cfg = {});

// One root of f, via repeated degree halving.  Throws NoRoot when f has no
// root in F_p.
RootResult find_one_root(const Poly& f, const RootFindConfig& cfg = {});

} // namespace fproots
