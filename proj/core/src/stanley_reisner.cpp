#include "reescm/stanley_reisner.hpp"

#include <algorithm>
#include <unordered_set>

#include "reescm/errors.hpp"

namespace reescm {

MonomialIdeal minimal_nonfaces(const SimplicialComplex& c) {
  // N is a minimal non-face iff N is not a face and every N \ {v} is.
  // Candidates: face + one vertex, grown from the face set.
  std::unordered_set<std::uint64_t> faces;
  for (Face f : enumerate_faces(c)) faces.insert(f.mask());

  std::unordered_set<std::uint64_t> found;
  std::vector<Face> out;
  for (std::uint64_t fm : faces) {
    Face g(fm);
    for (int v = 1; v <= c.vertex_count(); ++v) {
      if (g.contains(v)) continue;
      const Face cand = g.with(v);
      if (faces.contains(cand.mask()) || found.contains(cand.mask())) continue;
      bool minimal = true;
      for (int w : cand.vertices()) {
        if (!faces.contains(cand.without(w).mask())) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        found.insert(cand.mask());
        out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.mask() < b.mask();
  });
  return MonomialIdeal{std::move(out)};
}

std::vector<Face> minimal_primes(const SimplicialComplex& c) {
  const std::uint64_t universe = c.vertex_count() == 64
                                     ? ~std::uint64_t{0}
                                     : (std::uint64_t{1} << c.vertex_count()) - 1;
  std::vector<Face> out;
  out.reserve(c.facets().size());
  for (Face f : c.facets()) out.emplace_back(universe & ~f.mask());
  return out;
}

HilbertSeries hilbert_series_interval(const SimplicialComplex& big,
                                      const std::optional<SimplicialComplex>& small) {
  // The series only depends on how many faces of each cardinality the
  // difference contains, and faces(small) is a subset of faces(big) once
  // nesting holds, so two censuses suffice.
  std::vector<Int> counts = face_census(big);
  if (small) {
    for (Face f : small->facets())
      if (!big.is_face(f)) throw NotNested("small complex is not a subcomplex of big");
    const std::vector<Int> small_counts = face_census(*small);
    for (std::size_t k = 0; k < small_counts.size(); ++k) counts[k] -= small_counts[k];
  }
  // sum_k counts[k] t^k (1-t)^{D-k} over the common denominator (1-t)^D.
  const int D = big.dimension() + 1;
  std::vector<Int> num(static_cast<std::size_t>(D) + 1, Int(0));
  for (int k = 0; k <= D; ++k) {
    const Int& n_k = counts[static_cast<std::size_t>(k)];
    if (n_k == 0) continue;
    Int binom = 1;  // C(D-k, j), alternating signs
    for (int j = 0; k + j <= D; ++j) {
      Int term = n_k * binom;
      if (j % 2 != 0) term = -term;
      num[static_cast<std::size_t>(k + j)] += term;
      binom = binom * (D - k - j) / (j + 1);
    }
  }
  return HilbertSeries(Polynomial(std::move(num)), D);
}

HilbertSeries hilbert_series(const SimplicialComplex& c) {
  return hilbert_series_interval(c, std::nullopt);
}

DimensionFiltration dimension_filtration(const SimplicialComplex& c) {
  if (c.facets().front().is_empty())
    throw DegenerateComplex("the complex {{}} has no dimension filtration here");

  DimensionFiltration filt;
  for (Face f : c.facets()) filt.cardinalities.push_back(f.cardinality());
  std::sort(filt.cardinalities.begin(), filt.cardinalities.end());
  filt.cardinalities.erase(
      std::unique(filt.cardinalities.begin(), filt.cardinalities.end()),
      filt.cardinalities.end());

  const int ell = filt.length();
  for (int i = 0; i < ell; ++i) {
    // Theta_i = <facets of cardinality >= c_{i+1}>; Theta_0 = Delta.
    std::vector<Face> gens;
    for (Face f : c.facets())
      if (f.cardinality() >= filt.cardinalities[static_cast<std::size_t>(i)])
        gens.push_back(f);
    filt.thetas.push_back(
        SimplicialComplex::from_facets(c.vertex_count(), gens));
  }
  for (int i = 1; i <= ell; ++i) {
    std::optional<SimplicialComplex> lower;  // Theta_i; void when i == ell
    if (i < ell) lower = filt.thetas[static_cast<std::size_t>(i)];
    filt.quotients.push_back(DimensionFiltration::Quotient{
        .index = i,
        .cardinality = filt.cardinalities[static_cast<std::size_t>(i - 1)],
        .series = hilbert_series_interval(filt.thetas[static_cast<std::size_t>(i - 1)],
                                          lower)});
  }
  return filt;
}

Face splitting_monomial(const SimplicialComplex& prefix, Face last_facet) {
  SimplicialComplex last =
      SimplicialComplex::from_facets(prefix.vertex_count(), {last_facet});
  SimplicialComplex inter = intersect_generated(prefix, last);
  if (!inter.is_pure() || inter.dimension() != last_facet.cardinality() - 2)
    throw NotAShellingStep("intersection is not pure of dimension |F| - 2");

  Face w;
  for (int v : last_facet.vertices()) {
    const Face corank1 = last_facet.without(v);
    if (std::find(inter.facets().begin(), inter.facets().end(), corank1) !=
        inter.facets().end())
      w = w.with(v);
  }
  return w;
}

int a_invariant_recursive(const SimplicialComplex& c, const ShellingOrder& order) {
  if (!c.is_pure()) throw NotPure("the a-invariant recursion needs a pure complex");
  std::vector<Face> sorted_facets = c.facets();
  std::vector<Face> sorted_order = order.facets;
  std::sort(sorted_facets.begin(), sorted_facets.end());
  std::sort(sorted_order.begin(), sorted_order.end());
  if (sorted_facets != sorted_order)
    throw NotAShelling("order is not a permutation of the facets");

  // Unrolled over prefixes (prefixes of a shelling are shellings): with
  // t_m the intersection facet count at step m,
  //   a = max( -|F_1|, max_m (t_m - |F_m|), max_m -|F_m| ).
  // Step validity and t_m both come out of the bitmask analysis: the
  // intersection's facets are F_m \ {v} over the corank-1 support.
  int a = -order.facets.front().cardinality();
  for (std::size_t i = 1; i < order.facets.size(); ++i) {
    const auto step =
        analyze_step(std::span<const Face>(order.facets.data(), i), order.facets[i]);
    if (!step.valid) throw NotAShelling("order fails the shelling condition");
    const int fm = order.facets[i].cardinality();
    a = std::max({a, step.corank1_support.cardinality() - fm, -fm});
  }
  return a;
}

}  // namespace reescm
