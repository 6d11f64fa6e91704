#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reescm/complex.hpp"

namespace reescm {

/// An ordered facet list F_1, ..., F_m, a permutation of the complex's
/// facets. Instances handed out by verify_shelling / find_shelling satisfy
/// the shelling condition: for every i >= 2 the complex
/// <F_1,...,F_{i-1}> intersected with <F_i> is pure of dimension
/// dim F_i - 1 (the Bjorner-Wachs condition, which also covers non-pure
/// complexes).
struct ShellingOrder {
  std::vector<Face> facets;

  int size() const { return static_cast<int>(facets.size()); }
  bool dims_nonincreasing() const;
};

/// Witness for one step of a shelling check.
struct ShellingStepReport {
  int index = 0;  // i, 1-based position in the order; reports start at i = 2
  SimplicialComplex intersection;
  int intersection_facet_count = 0;
  bool pure = false;
  bool dimension_ok = false;  // dim(intersection) == dim F_i - 1

  bool ok() const { return pure && dimension_ok; }
};

/// Checks the shelling condition at every step; the report carries one
/// witness per step i = 2..m. Throws NotAPermutation when `order` is not a
/// permutation of facets(c).
std::pair<bool, std::vector<ShellingStepReport>> verify_shelling(
    const SimplicialComplex& c, const std::vector<Face>& order);

/// Bitmask analysis of one candidate step. When the step is valid, the
/// intersection of <prefix...> with <next> is pure of dimension
/// |next| - 2 and its facets are exactly next \ {v} for v in
/// corank1_support, so the support's cardinality is the intersection's
/// facet count (and the support is the splitting monomial's vertex set).
struct StepAnalysis {
  bool valid = false;
  Face corank1_support;
};
StepAnalysis analyze_step(std::span<const Face> prefix, Face next);

/// Permutation check plus the shelling condition, with no witness
/// construction. Throws NotAPermutation.
bool is_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order);

/// Lexicographically smallest shelling order under the canonical facet
/// order, or nothing when the complex is not shellable. With
/// require_nonincreasing_dims the search is restricted to orders with
/// dim F_1 >= dim F_2 >= ... >= dim F_m (equivalently: each step picks a
/// facet of maximal remaining cardinality). Deterministic.
std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           bool require_nonincreasing_dims);

/// All valid shelling orders in lexicographic order, up to max_orders of
/// them (the search stops once the cap is hit). Intended for small facet
/// counts; order counts grow factorially.
std::vector<ShellingOrder> enumerate_shellings(const SimplicialComplex& c,
                                               bool require_nonincreasing_dims,
                                               std::size_t max_orders);

}  // namespace reescm
