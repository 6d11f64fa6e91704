#include "reescm/enumerate.hpp"

#include <numeric>
#include <vector>

#include "reescm/errors.hpp"

namespace reescm {

namespace {

struct AntichainWalk {
  int n;
  const std::function<void(const SimplicialComplex&)>& fn;
  std::vector<Face> chosen;

  void emit() {
    fn(SimplicialComplex::from_facets(n, chosen));
  }

  // Extends the antichain with masks strictly above `start`, so every
  // antichain is produced exactly once (as its increasing mask sequence).
  void grow(std::uint64_t start) {
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    for (std::uint64_t m = start + 1; m <= top; ++m) {
      bool comparable = false;
      for (Face f : chosen) {
        const std::uint64_t inter = f.mask() & m;
        if (inter == f.mask() || inter == m) {
          comparable = true;
          break;
        }
      }
      if (comparable) continue;
      chosen.emplace_back(m);
      emit();
      grow(m);
      chosen.pop_back();
    }
  }
};

}  // namespace

void for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& fn) {
  if (n < 1 || n > 7) throw VertexOutOfRange("exhaustive enumeration supports 1..7 vertices");
  fn(SimplicialComplex::from_facets(n, {Face::empty()}));
  AntichainWalk walk{n, fn, {}};
  walk.grow(0);
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  return lo + rng() % span;  // modulo bias is irrelevant for test corpora
}

SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  const auto facet_count = draw(rng, 1, static_cast<std::uint64_t>(2 * n));
  std::vector<Face> raw;
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (std::uint64_t f = 0; f < facet_count; ++f) {
    const auto k = static_cast<int>(draw(rng, 1, static_cast<std::uint64_t>(n)));
    std::iota(labels.begin(), labels.end(), 1);
    Face face;
    for (int i = 0; i < k; ++i) {  // partial Fisher-Yates
      const auto j = draw(rng, static_cast<std::uint64_t>(i),
                          static_cast<std::uint64_t>(n - 1));
      std::swap(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]);
      face = face.with(labels[static_cast<std::size_t>(i)]);
    }
    raw.push_back(face);
  }
  return SimplicialComplex::from_facets(n, raw);
}

}  // namespace reescm
