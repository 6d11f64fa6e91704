#pragma once

#include <optional>
#include <vector>

#include "reescm/shelling.hpp"
#include "reescm/stanley_reisner.hpp"

namespace reescm {

/// Decision record for the sequential Cohen-Macaulayness of the Rees
/// algebra R(m) of k[Delta]. The combinatorial check walks a shelling
/// order with non-increasing facet dimensions and requires, at every step
/// i >= 2, the strict inequality
///   |F_i| > #facets( <F_1,...,F_{i-1}> cap <F_i> );
/// the independent check requires a(C_i) < 0 for every quotient of the
/// dimension filtration. The two verdicts provably coincide; a computed
/// disagreement is an implementation bug.
struct ReesReport {
  struct Step {
    int index = 0;                 // i (2..m)
    int facet_cardinality = 0;     // |F_i|
    int intersection_facets = 0;   // #facets(Delta_1 cap Delta_2)
    bool strict = false;           // |F_i| > intersection_facets
    Face splitting_support;        // W with |W| = intersection_facets
  };

  ShellingOrder order;
  std::vector<Step> steps;
  bool combinatorial_verdict = false;  // m == 1 or all steps strict

  // Filled by the a-invariant path (cross_validate).
  std::optional<std::vector<int>> a_invariants;        // a(C_1), ..., a(C_l)
  std::optional<bool> a_invariant_verdict;             // all a(C_i) < 0
  std::optional<bool> cross_check_agreed;

  bool verdict() const { return combinatorial_verdict; }
};

/// Runs the per-step combinatorial criterion along `order`. Requirements:
/// Delta != {{}} (DegenerateComplex), `order` a valid shelling
/// (NotAShelling) with non-increasing facet dimensions
/// (DimsNotNonincreasing).
ReesReport combinatorial_criterion(const SimplicialComplex& c,
                                   const ShellingOrder& order);

struct AInvariantCriterion {
  bool verdict = false;  // every a(C_i) < 0
  std::vector<int> a_invariants;
  DimensionFiltration filtration;
};

/// The independent verdict through the dimension filtration: computes each
/// quotient's reduced Hilbert series and reads a(C_i) as its degree (the
/// quotients of a shellable complex are Cohen-Macaulay, so the degree is
/// the a-invariant). Throws NotShellable / DegenerateComplex.
AInvariantCriterion a_invariant_criterion(const SimplicialComplex& c);

/// Sufficient condition: with |F_m| >= 2, if every step intersection is a
/// simplex (exactly one facet), the Rees algebra is sequentially
/// Cohen-Macaulay. Preconditions as in combinatorial_criterion; |F_m| < 2
/// raises the base Error (the hypothesis is enforced, not silently
/// weakened).
bool simplex_intersection_sufficient(const SimplicialComplex& c,
                                     const ShellingOrder& order);

/// Finds the canonical non-increasing-dimension shelling, runs both
/// criteria, and asserts they agree (CrossCheckDisagreement otherwise).
ReesReport cross_validate(const SimplicialComplex& c);

}  // namespace reescm
