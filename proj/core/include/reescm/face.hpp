#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace reescm {

/// A face of a simplicial complex: a set of vertex labels in 1..64,
/// stored as a single machine word (label v occupies bit v-1).
///
/// The empty face (mask 0) is a legitimate value and is distinct from
/// "no face", which callers express with std::optional<Face>.
class Face {
 public:
  constexpr Face() = default;
  constexpr explicit Face(std::uint64_t mask) : mask_(mask) {}
  Face(std::initializer_list<int> vertices) {
    for (int v : vertices) mask_ |= bit(v);
  }

  static constexpr Face empty() { return Face{}; }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int cardinality() const { return std::popcount(mask_); }
  constexpr bool is_empty() const { return mask_ == 0; }

  constexpr bool contains(int vertex) const { return (mask_ & bit(vertex)) != 0; }
  constexpr bool subset_of(Face other) const { return (mask_ & ~other.mask_) == 0; }

  constexpr Face intersect(Face other) const { return Face(mask_ & other.mask_); }
  constexpr Face unite(Face other) const { return Face(mask_ | other.mask_); }
  constexpr Face minus(Face other) const { return Face(mask_ & ~other.mask_); }
  constexpr Face without(int vertex) const { return Face(mask_ & ~bit(vertex)); }
  constexpr Face with(int vertex) const { return Face(mask_ | bit(vertex)); }

  /// Vertex labels in ascending order.
  std::vector<int> vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cardinality()));
    std::uint64_t m = mask_;
    while (m) {
      out.push_back(std::countr_zero(m) + 1);
      m &= m - 1;
    }
    return out;
  }

  friend constexpr bool operator==(Face, Face) = default;
  friend constexpr auto operator<=>(Face a, Face b) { return a.mask_ <=> b.mask_; }

 private:
  static constexpr std::uint64_t bit(int vertex) {
    return std::uint64_t{1} << (vertex - 1);
  }
  std::uint64_t mask_ = 0;
};

/// Canonical face order used throughout: descending cardinality,
/// then ascending mask value.
constexpr bool canonical_face_less(Face a, Face b) {
  if (a.cardinality() != b.cardinality()) return a.cardinality() > b.cardinality();
  return a.mask() < b.mask();
}

}  // namespace reescm
