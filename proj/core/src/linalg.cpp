#include "reescm/linalg.hpp"

#include <utility>

namespace reescm {

IntMatrix multiply(const IntMatrix& lhs, const IntMatrix& rhs) {
  IntMatrix out(lhs.rows, rhs.cols);
  for (std::size_t i = 0; i < lhs.rows; ++i)
    for (std::size_t k = 0; k < lhs.cols; ++k) {
      const Int& l = lhs.at(i, k);
      if (l == 0) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j) out.at(i, j) += l * rhs.at(k, j);
    }
  return out;
}

int rank_rational(IntMatrix m) {
  const std::size_t n = std::min(m.rows, m.cols);
  std::size_t r = 0;
  Int prev = 1;
  while (r < n) {
    // Full pivoting: any nonzero entry in the trailing block.
    std::size_t pi = r, pj = r;
    bool found = false;
    for (std::size_t i = r; i < m.rows && !found; ++i)
      for (std::size_t j = r; j < m.cols && !found; ++j)
        if (m.at(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    if (pi != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pi, j), m.at(r, j));
    if (pj != r)
      for (std::size_t i = 0; i < m.rows; ++i) std::swap(m.at(i, pj), m.at(i, r));

    // Bareiss step: divisions by the previous pivot are exact.
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = r + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(r, r) - m.at(i, r) * m.at(r, j)) / prev;
      m.at(i, r) = 0;
    }
    prev = m.at(r, r);
    ++r;
  }
  return static_cast<int>(r);
}

int rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  // Reduce entries into [0, p).
  std::vector<std::uint64_t> a(m.rows * m.cols);
  for (std::size_t i = 0; i < m.a.size(); ++i) {
    Int v = m.a[i] % static_cast<long long>(p);
    if (v < 0) v += static_cast<long long>(p);
    a[i] = v.convert_to<std::uint64_t>();
  }
  auto at = [&](std::size_t r, std::size_t c) -> std::uint64_t& {
    return a[r * m.cols + c];
  };
  auto inv_mod = [&](std::uint64_t x) {
    // Fermat: x^(p-2) mod p.
    std::uint64_t result = 1, base = x % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };

  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows && at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != r)
      for (std::size_t j = col; j < m.cols; ++j) std::swap(at(pivot, j), at(r, j));
    const std::uint64_t inv = inv_mod(at(r, col));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (at(i, col) == 0) continue;
      const std::uint64_t factor = at(i, col) * inv % p;
      for (std::size_t j = col; j < m.cols; ++j)
        at(i, j) = (at(i, j) + (p - factor) * at(r, j)) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace reescm
