#pragma once

#include <optional>
#include <span>
#include <vector>

#include "reescm/face.hpp"
#include "reescm/ints.hpp"

namespace reescm {

/// Face-count vector f_{-1}, f_0, ..., f_d (f_{-1} = 1 counts the empty
/// face). counts[i] is the number of faces of cardinality i.
struct FVector {
  std::vector<Int> counts;

  int top_cardinality() const { return static_cast<int>(counts.size()) - 1; }
  friend bool operator==(const FVector&, const FVector&) = default;
};

/// h_0, ..., h_{d+1} obtained from the f-vector by the standard transform
///   sum_i f_{i-1} t^i (1-t)^{d+1-i} = sum_i h_i t^i.
struct HVector {
  std::vector<Int> entries;
  friend bool operator==(const HVector&, const HVector&) = default;
};

/// A finite simplicial complex given by its facets (maximal faces) over a
/// vertex universe {1, ..., vertex_count}, vertex_count <= 64.
///
/// Facets always form an antichain and are stored in canonical order
/// (descending cardinality, then ascending mask), so equality of complexes
/// is structural. The facet list is never empty; the complex whose only
/// face is the empty set is represented by the single facet {}. The void
/// complex (no faces at all) is not a valid SimplicialComplex; the few
/// routines that need it as the bottom of an interval take
/// std::optional<SimplicialComplex>.
class SimplicialComplex {
 public:
  /// Canonicalizes: drops faces contained in other listed faces, merges
  /// duplicates. Throws EmptyInput / VertexOutOfRange.
  static SimplicialComplex from_facets(int vertex_count, std::span<const Face> raw);
  static SimplicialComplex from_facets(int vertex_count, std::initializer_list<Face> raw);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Face>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  /// max facet cardinality - 1 (the complex {{}} has dimension -1).
  int dimension() const;
  bool is_pure() const;
  bool is_face(Face g) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(int vertex_count, std::vector<Face> facets)
      : vertex_count_(vertex_count), facets_(std::move(facets)) {}

  int vertex_count_ = 0;
  std::vector<Face> facets_;
};

/// is_face as a free function, mirroring the member.
bool is_face(const SimplicialComplex& c, Face g);

/// Every face of the complex (including the empty face), deduplicated by
/// enumerating facet subsets, in deterministic order: ascending
/// cardinality, then ascending mask.
std::vector<Face> enumerate_faces(const SimplicialComplex& c);

/// Faces with exactly k vertices, ascending mask order.
std::vector<Face> faces_of_cardinality(const SimplicialComplex& c, int k);

/// census[k] = number of faces of cardinality k, for k = 0..dim+1.
std::vector<Int> face_census(const SimplicialComplex& c);

FVector f_vector(const SimplicialComplex& c);
HVector h_vector(const SimplicialComplex& c);
HVector h_from_f(const FVector& f);
FVector f_from_h(const HVector& h);

/// The complex whose faces are exactly the subsets of the listed faces.
SimplicialComplex generated_subcomplex(int vertex_count, std::span<const Face> faces);

/// The complex whose face set is faces(c1) & faces(c2), computed as the
/// antichain of maximal pairwise facet intersections. Both arguments must
/// share a vertex universe. The result is at least the complex {{}}.
SimplicialComplex intersect_generated(const SimplicialComplex& c1,
                                      const SimplicialComplex& c2);

/// link(c, g) = { h : h disjoint from g, h union g a face of c }.
/// Throws NotAFace when g is not a face of c.
SimplicialComplex link(const SimplicialComplex& c, Face g);

/// Image of the complex under a vertex relabeling; perm[v-1] is the new
/// label of vertex v (a permutation of 1..vertex_count).
SimplicialComplex relabel(const SimplicialComplex& c, std::span<const int> perm);

}  // namespace reescm
