#include "reescm/homology.hpp"

#include <unordered_map>
#include <unordered_set>

#include "reescm/errors.hpp"

namespace reescm {

Field Field::prime(std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 31)) throw NotPrime("p must be a prime below 2^31");
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw NotPrime("p is composite");
  return Field(p);
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c) {
  const int d = c.dimension();
  // Faces bucketed by cardinality, each bucket in ascending mask order.
  std::vector<std::vector<Face>> by_card(static_cast<std::size_t>(d) + 2);
  for (Face f : enumerate_faces(c))
    by_card[static_cast<std::size_t>(f.cardinality())].push_back(f);

  std::vector<BoundaryMatrix> out;
  for (int i = 0; i <= d; ++i) {
    const auto& domain = by_card[static_cast<std::size_t>(i) + 1];
    const auto& codomain = by_card[static_cast<std::size_t>(i)];
    std::unordered_map<std::uint64_t, std::size_t> row_of;
    for (std::size_t r = 0; r < codomain.size(); ++r) row_of[codomain[r].mask()] = r;

    BoundaryMatrix b{.dim = i,
                     .matrix = IntMatrix(codomain.size(), domain.size()),
                     .domain_faces = domain,
                     .codomain_faces = codomain};
    for (std::size_t col = 0; col < domain.size(); ++col) {
      const auto verts = domain[col].vertices();  // ascending
      for (std::size_t j = 0; j < verts.size(); ++j) {
        const Face sub = domain[col].without(verts[j]);
        b.matrix.at(row_of.at(sub.mask()), col) = (j % 2 == 0) ? 1 : -1;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

HomologyProfile reduced_homology(const SimplicialComplex& c, Field field) {
  const int d = c.dimension();
  auto boundaries = boundary_matrices(c);

  // ranks[i] = rank d_i for 0 <= i <= d; rank d_{d+1} = 0.
  std::vector<int> ranks(static_cast<std::size_t>(d) + 2, 0);
  std::vector<std::size_t> face_counts(static_cast<std::size_t>(d) + 2, 0);
  face_counts[0] = 1;  // the empty face
  for (int i = 0; i <= d; ++i) {
    const auto& b = boundaries[static_cast<std::size_t>(i)];
    face_counts[static_cast<std::size_t>(i) + 1] = b.domain_faces.size();
    ranks[static_cast<std::size_t>(i)] =
        field.is_rationals() ? rank_rational(b.matrix)
                             : rank_mod_p(b.matrix, field.characteristic());
  }

  HomologyProfile profile;
  profile.betti.resize(static_cast<std::size_t>(d) + 2, 0);
  for (int i = -1; i <= d; ++i) {
    // kernel of d_i minus image of d_{i+1}; d_{-1} is the zero map to 0.
    const auto n_i = static_cast<std::int64_t>(face_counts[static_cast<std::size_t>(i + 1)]);
    const std::int64_t ker =
        i == -1 ? n_i : n_i - ranks[static_cast<std::size_t>(i)];
    profile.betti[static_cast<std::size_t>(i + 1)] =
        ker - ranks[static_cast<std::size_t>(i + 1)];
  }
  return profile;
}

bool is_cohen_macaulay(const SimplicialComplex& c, Field field) {
  for (Face g : enumerate_faces(c)) {
    const SimplicialComplex lk = link(c, g);
    const int dl = lk.dimension();
    if (dl < 0) continue;  // {{}}: nothing below dimension -1
    const HomologyProfile h = reduced_homology(lk, field);
    for (int i = -1; i < dl; ++i)
      if (h.reduced_betti(i) != 0) return false;
  }
  return true;
}

bool is_sequentially_cm(const SimplicialComplex& c, Field field) {
  std::unordered_set<int> facet_cards;
  for (Face f : c.facets()) facet_cards.insert(f.cardinality());
  for (int k : facet_cards) {
    const auto faces_k = faces_of_cardinality(c, k);
    const SimplicialComplex skeleton =
        SimplicialComplex::from_facets(c.vertex_count(), faces_k);
    if (!is_cohen_macaulay(skeleton, field)) return false;
  }
  return true;
}

}  // namespace reescm
