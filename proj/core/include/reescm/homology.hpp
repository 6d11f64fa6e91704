#pragma once

#include <cstdint>
#include <vector>

#include "reescm/complex.hpp"
#include "reescm/linalg.hpp"

namespace reescm {

/// Coefficient field for homology: the rationals (exact, fraction-free
/// integer elimination) or a prime field GF(p).
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws NotPrime unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

/// The simplicial boundary map from i-faces to (i-1)-faces, rows and
/// columns indexed by the deterministic face order of the complex
/// (ascending mask within a cardinality).
struct BoundaryMatrix {
  int dim = 0;  // i
  IntMatrix matrix;
  std::vector<Face> domain_faces;    // i-faces (columns)
  std::vector<Face> codomain_faces;  // (i-1)-faces (rows)
};

/// Augmented chain complex boundaries d_0, ..., d_d (d_0 maps vertices to
/// the empty face).
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& c);

/// Reduced Betti numbers beta_{-1}, beta_0, ..., beta_dim; betti[i + 1]
/// holds beta_i.
struct HomologyProfile {
  std::vector<std::int64_t> betti;

  std::int64_t reduced_betti(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[static_cast<std::size_t>(idx)];
  }
  friend bool operator==(const HomologyProfile&, const HomologyProfile&) = default;
};

HomologyProfile reduced_homology(const SimplicialComplex& c, Field field);

/// Reisner's criterion: k[Delta] is Cohen-Macaulay over the field iff for
/// every face G (including the empty face) the link of G has vanishing
/// reduced homology below its own dimension.
bool is_cohen_macaulay(const SimplicialComplex& c, Field field);

/// Pure-skeleton test: for every dimension i carried by some facet, the
/// subcomplex generated by all i-dimensional faces must be Cohen-Macaulay.
bool is_sequentially_cm(const SimplicialComplex& c, Field field);

}  // namespace reescm
