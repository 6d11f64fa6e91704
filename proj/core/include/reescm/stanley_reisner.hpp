#pragma once

#include <optional>
#include <vector>

#include "reescm/complex.hpp"
#include "reescm/hilbert.hpp"
#include "reescm/shelling.hpp"

namespace reescm {

/// A squarefree monomial ideal, generators identified with their supports.
/// The generators form an antichain; no generators means the zero ideal,
/// and the empty face as sole generator is the unit ideal.
struct MonomialIdeal {
  std::vector<Face> generators;

  bool is_zero() const { return generators.empty(); }
  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
};

/// Antichain of minimal non-faces of c: the generators of the
/// Stanley-Reisner ideal. Generators are listed in ascending cardinality,
/// then ascending mask.
MonomialIdeal minimal_nonfaces(const SimplicialComplex& c);

/// Minimal primes of the Stanley-Reisner ring, one per facet: the variable
/// set V \ F, listed in canonical facet order.
std::vector<Face> minimal_primes(const SimplicialComplex& c);

/// Exact reduced Hilbert series of the monomial span of
/// faces(big) \ faces(small):
///   sum over G in the difference of t^|G| / (1-t)^|G|.
/// `small` omitted (void) gives the Hilbert series of k[big]. Throws
/// NotNested unless faces(small) is contained in faces(big).
HilbertSeries hilbert_series_interval(const SimplicialComplex& big,
                                      const std::optional<SimplicialComplex>& small);

HilbertSeries hilbert_series(const SimplicialComplex& c);

/// The dimension filtration of k[Delta], realized combinatorially: with
/// facet cardinalities c_1 < ... < c_l, Theta_i is generated by the facets
/// of cardinality >= c_{i+1} (Theta_0 = Delta, Theta_l = void), and the
/// filtration quotient C_i = D_i / D_{i-1} has monomial basis
/// faces(Theta_{i-1}) \ faces(Theta_i).
struct DimensionFiltration {
  struct Quotient {
    int index = 0;        // i, 1-based
    int cardinality = 0;  // c_i = Krull dimension of C_i
    HilbertSeries series;
  };

  std::vector<int> cardinalities;           // c_1 < ... < c_l
  std::vector<SimplicialComplex> thetas;    // Theta_0, ..., Theta_{l-1}
  std::vector<Quotient> quotients;          // C_1, ..., C_l

  int length() const { return static_cast<int>(cardinalities.size()); }
};

/// Throws DegenerateComplex when c is the complex {{}}.
DimensionFiltration dimension_filtration(const SimplicialComplex& c);

/// For a shelling step (prefix, last_facet), the vertex set W such that the
/// splitting monomial is prod_{v in W} x_v:
///   W = { v in last_facet : last_facet \ {v} is a facet of the
///         intersection of prefix with <last_facet> },
/// so |W| equals the intersection's facet count. Throws NotAShellingStep
/// unless the intersection is pure of dimension |last_facet| - 2.
Face splitting_monomial(const SimplicialComplex& prefix, Face last_facet);

/// a(k[Delta]) for a pure shellable complex, computed by recursion over
/// shelling prefixes:
///   m = 1: -|F_1|
///   m > 1: max( #facets(<F_1..F_{m-1}> cap <F_m>) - |F_m|,
///               a(k[<F_1..F_{m-1}>]),  -|F_m| ).
/// Throws NotPure / NotAShelling.
int a_invariant_recursive(const SimplicialComplex& c, const ShellingOrder& order);

}  // namespace reescm
