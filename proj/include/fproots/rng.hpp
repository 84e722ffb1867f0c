#pragma once

#include <cstdint>
#include <random>

namespace fproots {

// All randomized corpora and experiments draw from this wrapper so runs are
// reproducible from a single u64 seed and the generator can be named in
// output metadata.
inline constexpr const char* kRngName = "mt19937_64";

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased uniform draw from [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t cut = (-n) % n; // 2^64 mod n
    std::uint64_t r;
    do {
      r = eng_();
    } while (r < cut);
    return r % n;
  }

  // splitmix64 finalizer; used to derive independent per-trial seeds from
  // (base seed, trial index) without correlating the streams.
  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

private:
  std::mt19937_64 eng_;
};

} // namespace fproots
