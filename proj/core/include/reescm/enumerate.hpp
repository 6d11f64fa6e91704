#pragma once

#include <cstdint>
#include <functional>
#include <random>

#include "reescm/complex.hpp"

namespace reescm {

/// Calls fn once for every simplicial complex on the vertex universe
/// {1..n}: the complex {{}} plus every nonempty antichain of nonempty
/// subsets (each complex exactly once). n <= 7; the count is the Dedekind
/// number minus one and grows violently (7,828,353 at n = 6).
void for_each_complex(int n, const std::function<void(const SimplicialComplex&)>& fn);

/// Deterministic uniform draw in [lo, hi] from the engine (the standard
/// distributions are implementation-defined, so reports would not be
/// reproducible across library versions through them).
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi);

/// A random complex on {1..n}: facet count uniform in 1..2n, each raw facet
/// a uniform k-subset with k uniform in 1..n, then canonicalized. No
/// uniformity over isomorphism classes is claimed.
SimplicialComplex random_complex(std::mt19937_64& rng, int n);

}  // namespace reescm
