#include "reescm/rees.hpp"

#include <span>

#include "reescm/errors.hpp"

namespace reescm {

ReesReport combinatorial_criterion(const SimplicialComplex& c,
                                   const ShellingOrder& order) {
  if (c.facets().front().is_empty())
    throw DegenerateComplex("the criterion requires Delta != {{}}");
  auto [ok, step_reports] = verify_shelling(c, order.facets);
  if (!ok) throw NotAShelling("order fails the shelling condition");
  if (!order.dims_nonincreasing())
    throw DimsNotNonincreasing("facet dimensions must be non-increasing");

  ReesReport report;
  report.order = order;
  report.combinatorial_verdict = true;
  for (const auto& sr : step_reports) {
    const std::size_t i = static_cast<std::size_t>(sr.index);
    const Face fi = order.facets[i - 1];
    SimplicialComplex prefix = SimplicialComplex::from_facets(
        c.vertex_count(), std::span<const Face>(order.facets.data(), i - 1));
    ReesReport::Step step{
        .index = sr.index,
        .facet_cardinality = fi.cardinality(),
        .intersection_facets = sr.intersection_facet_count,
        .strict = fi.cardinality() > sr.intersection_facet_count,
        .splitting_support = splitting_monomial(prefix, fi)};
    report.combinatorial_verdict = report.combinatorial_verdict && step.strict;
    report.steps.push_back(step);
  }
  return report;
}

AInvariantCriterion a_invariant_criterion(const SimplicialComplex& c) {
  if (c.facets().front().is_empty())
    throw DegenerateComplex("the criterion requires Delta != {{}}");
  if (!find_shelling(c, true))
    throw NotShellable("a-invariants of C_i equal series degrees only for shellable input");

  AInvariantCriterion result;
  result.filtration = dimension_filtration(c);
  result.verdict = true;
  for (const auto& q : result.filtration.quotients) {
    // C_i is a nonzero module: Theta_{i-1} has facets of cardinality c_i
    // that are not faces of Theta_i.
    const int a = *a_invariant(q.series);
    result.a_invariants.push_back(a);
    result.verdict = result.verdict && a < 0;
  }
  return result;
}

bool simplex_intersection_sufficient(const SimplicialComplex& c,
                                     const ShellingOrder& order) {
  ReesReport report = combinatorial_criterion(c, order);
  if (order.facets.back().cardinality() < 2)
    throw Error("simplex-intersection test needs |F_m| >= 2");
  for (const auto& step : report.steps)
    if (step.intersection_facets != 1) return false;
  return true;
}

ReesReport cross_validate(const SimplicialComplex& c) {
  auto order = find_shelling(c, true);
  if (!order) throw NotShellable("the criterion applies to shellable complexes");
  ReesReport report = combinatorial_criterion(c, *order);
  AInvariantCriterion indep = a_invariant_criterion(c);
  report.a_invariants = indep.a_invariants;
  report.a_invariant_verdict = indep.verdict;
  report.cross_check_agreed = (indep.verdict == report.combinatorial_verdict);
  if (!*report.cross_check_agreed)
    throw CrossCheckDisagreement(
        "combinatorial and a-invariant verdicts differ: implementation bug");
  return report;
}

}  // namespace reescm
