#include <doctest.h>

#include "reescm/enumerate.hpp"
#include "reescm/errors.hpp"
#include "reescm/rees.hpp"

using namespace reescm;

namespace {

SimplicialComplex paper_example_1() {
  return SimplicialComplex::from_facets(5, {Face{1, 2, 3}, Face{2, 3, 4}, Face{4, 5}});
}

SimplicialComplex paper_example_2() {
  return SimplicialComplex::from_facets(
      5, {Face{1, 2, 5}, Face{2, 3}, Face{3, 4}, Face{4, 5}});
}

SimplicialComplex triangle_boundary() {
  return SimplicialComplex::from_facets(3, {Face{1, 2}, Face{2, 3}, Face{1, 3}});
}

}  // namespace

TEST_CASE("combinatorial criterion on the worked examples") {
  auto c1 = paper_example_1();
  auto rep1 = combinatorial_criterion(c1, *find_shelling(c1, true));
  CHECK(rep1.combinatorial_verdict);
  REQUIRE(rep1.steps.size() == 2);
  CHECK(rep1.steps[0].index == 2);
  CHECK(rep1.steps[0].intersection_facets == 1);
  CHECK(rep1.steps[0].facet_cardinality == 3);
  CHECK(rep1.steps[1].index == 3);
  CHECK(rep1.steps[1].intersection_facets == 1);
  CHECK(rep1.steps[1].facet_cardinality == 2);

  auto c2 = paper_example_2();
  auto rep2 = combinatorial_criterion(c2, *find_shelling(c2, true));
  CHECK_FALSE(rep2.combinatorial_verdict);
  REQUIRE(rep2.steps.size() == 3);
  CHECK(rep2.steps[0].strict);
  CHECK(rep2.steps[1].strict);
  CHECK(rep2.steps[2].index == 4);
  CHECK(rep2.steps[2].intersection_facets == 2);
  CHECK(rep2.steps[2].facet_cardinality == 2);
  CHECK_FALSE(rep2.steps[2].strict);

  auto single = SimplicialComplex::from_facets(4, {Face{2, 3, 4}});
  auto rep3 = combinatorial_criterion(single, ShellingOrder{{Face{2, 3, 4}}});
  CHECK(rep3.combinatorial_verdict);
  CHECK(rep3.steps.empty());
}

TEST_CASE("combinatorial criterion rejects bad inputs") {
  CHECK_THROWS_AS(
      combinatorial_criterion(SimplicialComplex::from_facets(1, {Face::empty()}),
                              ShellingOrder{{Face::empty()}}),
      DegenerateComplex);

  auto path = SimplicialComplex::from_facets(4, {Face{1, 2}, Face{2, 3}, Face{3, 4}});
  CHECK_THROWS_AS(combinatorial_criterion(
                      path, ShellingOrder{{Face{1, 2}, Face{3, 4}, Face{2, 3}}}),
                  NotAShelling);

  // [123, 5, 234] is a valid shelling whose dimensions wobble 2, 0, 2.
  auto wobble =
      SimplicialComplex::from_facets(5, {Face{1, 2, 3}, Face{2, 3, 4}, Face{5}});
  ShellingOrder wobble_order{{Face{1, 2, 3}, Face{5}, Face{2, 3, 4}}};
  CHECK(verify_shelling(wobble, wobble_order.facets).first);
  CHECK_THROWS_AS(combinatorial_criterion(wobble, wobble_order),
                  DimsNotNonincreasing);
}

TEST_CASE("a-invariant criterion on the worked examples") {
  auto r1 = a_invariant_criterion(paper_example_1());
  CHECK(r1.verdict);
  CHECK(r1.a_invariants == std::vector<int>{-1, -2});

  auto r2 = a_invariant_criterion(paper_example_2());
  CHECK_FALSE(r2.verdict);
  REQUIRE(r2.a_invariants.size() == 2);
  CHECK(r2.a_invariants[0] == 0);

  auto r3 = a_invariant_criterion(SimplicialComplex::from_facets(3, {Face{1, 2, 3}}));
  CHECK(r3.verdict);
  CHECK(r3.a_invariants == std::vector<int>{-3});

  CHECK_THROWS_AS(
      a_invariant_criterion(SimplicialComplex::from_facets(4, {Face{1, 2}, Face{3, 4}})),
      NotShellable);
  CHECK_THROWS_AS(
      a_invariant_criterion(SimplicialComplex::from_facets(1, {Face::empty()})),
      DegenerateComplex);
}

TEST_CASE("simplex intersection sufficient condition") {
  auto c1 = paper_example_1();
  CHECK(simplex_intersection_sufficient(c1, *find_shelling(c1, true)));

  auto c2 = paper_example_2();
  CHECK_FALSE(simplex_intersection_sufficient(c2, *find_shelling(c2, true)));

  auto tb = triangle_boundary();
  CHECK_FALSE(simplex_intersection_sufficient(tb, *find_shelling(tb, true)));

  auto vertex_last = SimplicialComplex::from_facets(2, {Face{1}, Face{2}});
  CHECK_THROWS_AS(
      simplex_intersection_sufficient(vertex_last, *find_shelling(vertex_last, true)),
      Error);
}

TEST_CASE("cross validation agrees on the worked examples") {
  auto rep1 = cross_validate(paper_example_1());
  CHECK(rep1.verdict());
  CHECK(*rep1.cross_check_agreed);
  CHECK(*rep1.a_invariant_verdict);

  auto rep2 = cross_validate(paper_example_2());
  CHECK_FALSE(rep2.verdict());
  CHECK(*rep2.cross_check_agreed);
  CHECK_FALSE(*rep2.a_invariant_verdict);

  auto rep3 = cross_validate(triangle_boundary());
  CHECK_FALSE(rep3.verdict());
  CHECK(*rep3.cross_check_agreed);
  CHECK(rep3.a_invariants == std::optional<std::vector<int>>{{0}});
  REQUIRE(rep3.steps.size() == 2);
  CHECK(rep3.steps[1].intersection_facets == 2);

  CHECK_THROWS_AS(
      cross_validate(SimplicialComplex::from_facets(4, {Face{1, 2}, Face{3, 4}})),
      NotShellable);
}

TEST_CASE("simplex-intersection condition implies the criterion") {
  for_each_complex(5, [](const SimplicialComplex& c) {
    auto order = find_shelling(c, true);
    if (!order || c.facets().front().is_empty()) return;
    if (order->facets.back().cardinality() < 2) return;
    if (simplex_intersection_sufficient(c, *order))
      CHECK(combinatorial_criterion(c, *order).combinatorial_verdict);
  });
}

TEST_CASE("verdict is relabeling-invariant") {
  const std::vector<int> perm{2, 5, 3, 1, 4};
  for_each_complex(5, [&](const SimplicialComplex& c) {
    if (!find_shelling(c, true) || c.facets().front().is_empty()) return;
    CHECK(cross_validate(c).verdict() == cross_validate(relabel(c, perm)).verdict());
  });
}

TEST_CASE("single-facet complexes always pass") {
  for (int k = 1; k <= 6; ++k) {
    Face f;
    for (int v = 1; v <= k; ++v) f = f.with(v);
    auto c = SimplicialComplex::from_facets(k, {f});
    auto rep = cross_validate(c);
    CHECK(rep.verdict());
    CHECK(rep.a_invariants == std::optional<std::vector<int>>{{-k}});
  }
}

TEST_CASE("splitting support size equals the intersection facet count") {
  for_each_complex(5, [](const SimplicialComplex& c) {
    auto order = find_shelling(c, true);
    if (!order || c.facets().front().is_empty()) return;
    for (const auto& step : combinatorial_criterion(c, *order).steps)
      CHECK(step.splitting_support.cardinality() == step.intersection_facets);
  });
}
