#pragma once

#include <stdexcept>
#include <string>

namespace fproots {

enum class Errc {
  bad_input,
  not_prime,
  too_large,
  field_too_large,
  division_by_zero,
  modulus_mismatch,
  zero_input,
  both_zero,
  modulus_degree_zero,
  degree_too_small,
  no_root,
  cap_exceeded,
  incomplete_separation,
  internal,
};

// Single exception type for the whole library; `code` is stable, the
// message is for humans only.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

} // namespace fproots
