#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lsk {

// Bad input from a caller or from the command line.
struct usage_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// inv(x, n) with gcd(x, n) != 1; carries the offending gcd.
struct not_a_unit_error : usage_error {
  not_a_unit_error(std::int64_t x, std::int64_t n, std::int64_t g)
      : usage_error("not a unit: gcd(" + std::to_string(x) + ", " +
                    std::to_string(n) + ") = " + std::to_string(g)),
        gcd(g) {}
  std::int64_t gcd;
};

// A broken internal invariant: a bug, not bad input.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lsk
