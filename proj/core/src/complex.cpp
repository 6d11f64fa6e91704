#include "reescm/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "reescm/errors.hpp"

namespace reescm {

namespace {

std::vector<Face> canonical_antichain(std::vector<Face> faces) {
  // Sort big-to-small so absorption needs one pass.
  std::sort(faces.begin(), faces.end(), canonical_face_less);
  std::vector<Face> out;
  for (Face f : faces) {
    bool absorbed = false;
    for (Face kept : out) {
      if (f.subset_of(kept)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) out.push_back(f);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 std::span<const Face> raw) {
  if (vertex_count < 1 || vertex_count > 64)
    throw VertexOutOfRange("vertex_count must lie in [1, 64]");
  if (raw.empty()) throw EmptyInput("a simplicial complex needs at least one facet");
  const std::uint64_t universe =
      vertex_count == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << vertex_count) - 1;
  for (Face f : raw) {
    if ((f.mask() & ~universe) != 0)
      throw VertexOutOfRange("facet vertex outside 1..vertex_count");
  }
  return SimplicialComplex(
      vertex_count, canonical_antichain(std::vector<Face>(raw.begin(), raw.end())));
}

SimplicialComplex SimplicialComplex::from_facets(int vertex_count,
                                                 std::initializer_list<Face> raw) {
  return from_facets(vertex_count, std::span<const Face>(raw.begin(), raw.size()));
}

int SimplicialComplex::dimension() const {
  return facets_.front().cardinality() - 1;  // canonical order: largest first
}

bool SimplicialComplex::is_pure() const {
  return facets_.front().cardinality() == facets_.back().cardinality();
}

bool SimplicialComplex::is_face(Face g) const {
  for (Face f : facets_)
    if (g.subset_of(f)) return true;
  return false;
}

bool is_face(const SimplicialComplex& c, Face g) { return c.is_face(g); }

std::vector<Face> enumerate_faces(const SimplicialComplex& c) {
  std::unordered_set<std::uint64_t> seen;
  for (Face f : c.facets()) {
    const std::uint64_t m = f.mask();
    // All subsets of m, including m itself and 0.
    std::uint64_t sub = m;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & m;
    }
  }
  std::vector<Face> out;
  out.reserve(seen.size());
  for (std::uint64_t m : seen) out.emplace_back(m);
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    if (a.cardinality() != b.cardinality()) return a.cardinality() < b.cardinality();
    return a.mask() < b.mask();
  });
  return out;
}

std::vector<Face> faces_of_cardinality(const SimplicialComplex& c, int k) {
  std::vector<Face> out;
  for (Face f : enumerate_faces(c))
    if (f.cardinality() == k) out.push_back(f);
  return out;
}

std::vector<Int> face_census(const SimplicialComplex& c) {
  std::vector<Int> counts(static_cast<std::size_t>(c.dimension()) + 2, Int(0));
  if (c.vertex_count() <= 14) {
    // Dense scan beats hashing at these sizes.
    const std::uint64_t top = (std::uint64_t{1} << c.vertex_count()) - 1;
    for (std::uint64_t m = 0; m <= top; ++m)
      if (c.is_face(Face(m))) counts[static_cast<std::size_t>(std::popcount(m))] += 1;
  } else {
    for (Face g : enumerate_faces(c)) counts[static_cast<std::size_t>(g.cardinality())] += 1;
  }
  return counts;
}

FVector f_vector(const SimplicialComplex& c) { return FVector{face_census(c)}; }

HVector h_from_f(const FVector& f) {
  // sum_i f_{i-1} t^i (1-t)^{D-i}, D = top cardinality; collect coefficients.
  const int D = f.top_cardinality();
  std::vector<Int> h(static_cast<std::size_t>(D) + 1, Int(0));
  for (int i = 0; i <= D; ++i) {
    // (1-t)^{D-i} = sum_j C(D-i, j) (-t)^j
    Int binom = 1;
    for (int j = 0; j + i <= D; ++j) {
      Int term = f.counts[static_cast<std::size_t>(i)] * binom;
      if (j % 2 != 0) term = -term;
      h[static_cast<std::size_t>(i + j)] += term;
      binom = binom * (D - i - j) / (j + 1);
    }
  }
  return HVector{std::move(h)};
}

FVector f_from_h(const HVector& h) {
  // f_{k-1} = sum_i C(D-i, k-i) h_i with D = deg h.
  const int D = static_cast<int>(h.entries.size()) - 1;
  std::vector<Int> f(static_cast<std::size_t>(D) + 1, Int(0));
  for (int i = 0; i <= D; ++i) {
    Int binom = 1;
    for (int k = i; k <= D; ++k) {
      f[static_cast<std::size_t>(k)] += h.entries[static_cast<std::size_t>(i)] * binom;
      binom = binom * (D - k) / (k - i + 1);
    }
  }
  return FVector{std::move(f)};
}

HVector h_vector(const SimplicialComplex& c) { return h_from_f(f_vector(c)); }

SimplicialComplex generated_subcomplex(int vertex_count, std::span<const Face> faces) {
  return SimplicialComplex::from_facets(vertex_count, faces);
}

SimplicialComplex intersect_generated(const SimplicialComplex& c1,
                                      const SimplicialComplex& c2) {
  // faces(c1) & faces(c2) is generated by the pairwise facet intersections.
  std::vector<Face> gens;
  gens.reserve(c1.facets().size() * c2.facets().size());
  for (Face a : c1.facets())
    for (Face b : c2.facets()) gens.push_back(a.intersect(b));
  return SimplicialComplex::from_facets(c1.vertex_count(), gens);
}

SimplicialComplex link(const SimplicialComplex& c, Face g) {
  if (!c.is_face(g)) throw NotAFace();
  std::vector<Face> gens;
  for (Face f : c.facets())
    if (g.subset_of(f)) gens.push_back(f.minus(g));
  return SimplicialComplex::from_facets(c.vertex_count(), gens);
}

SimplicialComplex relabel(const SimplicialComplex& c, std::span<const int> perm) {
  std::vector<Face> mapped;
  mapped.reserve(c.facets().size());
  for (Face f : c.facets()) {
    Face image;
    for (int v : f.vertices()) image = image.with(perm[static_cast<std::size_t>(v - 1)]);
    mapped.push_back(image);
  }
  return SimplicialComplex::from_facets(c.vertex_count(), mapped);
}

}  // namespace reescm
