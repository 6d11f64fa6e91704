#pragma once

#include <cstdint>
#include <vector>

#include "reescm/ints.hpp"

namespace reescm {

/// Dense row-major matrix of exact integers.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}

  Int& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  bool is_zero() const {
    for (const Int& x : a)
      if (x != 0) return false;
    return true;
  }
};

IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs);

/// Rank over the rationals by Bareiss fraction-free elimination (all
/// divisions exact, no rational arithmetic).
int rank_rational(IntMatrix m);

/// Rank over GF(p) by Gaussian elimination; p must be an odd prime or 2,
/// p < 2^31. Primality is the caller's concern (checked in Field).
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

}  // namespace reescm
