#include <doctest.h>

#include "reescm/complex.hpp"
#include "reescm/enumerate.hpp"
#include "reescm/errors.hpp"
#include "reescm/shelling.hpp"

using namespace reescm;

namespace {

SimplicialComplex paper_example_1() {
  return SimplicialComplex::from_facets(5, {Face{1, 2, 3}, Face{2, 3, 4}, Face{4, 5}});
}

SimplicialComplex paper_example_2() {
  return SimplicialComplex::from_facets(
      5, {Face{1, 2, 5}, Face{2, 3}, Face{3, 4}, Face{4, 5}});
}

}  // namespace

TEST_CASE("verify_shelling on the worked examples") {
  auto c = paper_example_1();
  auto [ok, reports] = verify_shelling(c, {Face{1, 2, 3}, Face{2, 3, 4}, Face{4, 5}});
  CHECK(ok);
  REQUIRE(reports.size() == 2);
  CHECK(reports[0].intersection_facet_count == 1);
  CHECK(reports[1].intersection_facet_count == 1);

  auto single = SimplicialComplex::from_facets(3, {Face{1, 2, 3}});
  CHECK(verify_shelling(single, {Face{1, 2, 3}}).first);  // m = 1 is vacuous

  auto [bad, bad_reports] =
      verify_shelling(c, {Face{4, 5}, Face{1, 2, 3}, Face{2, 3, 4}});
  CHECK_FALSE(bad);
  REQUIRE(!bad_reports.empty());
  // i = 2: intersection is {{}}, dimension -1 != dim{1,2,3} - 1
  CHECK(bad_reports[0].index == 2);
  CHECK(bad_reports[0].intersection.dimension() == -1);
  CHECK(bad_reports[0].pure);
  CHECK_FALSE(bad_reports[0].dimension_ok);

  CHECK_THROWS_AS(verify_shelling(c, {Face{1, 2, 3}}), NotAPermutation);
  CHECK_THROWS_AS(verify_shelling(c, {Face{1, 2, 3}, Face{1, 2, 3}, Face{4, 5}}),
                  NotAPermutation);
}

TEST_CASE("find_shelling returns the lexicographic minimum") {
  auto order = find_shelling(paper_example_2(), true);
  REQUIRE(order.has_value());
  CHECK(order->facets ==
        std::vector<Face>{Face{1, 2, 5}, Face{2, 3}, Face{3, 4}, Face{4, 5}});
  CHECK(order->dims_nonincreasing());

  CHECK_FALSE(find_shelling(SimplicialComplex::from_facets(4, {Face{1, 2}, Face{3, 4}}),
                            false)
                  .has_value());

  auto single = find_shelling(SimplicialComplex::from_facets(3, {Face{1, 2, 3}}), true);
  REQUIRE(single.has_value());
  CHECK(single->facets == std::vector<Face>{Face{1, 2, 3}});
}

TEST_CASE("found shellings verify") {
  for_each_complex(5, [](const SimplicialComplex& c) {
    for (bool flag : {false, true}) {
      auto order = find_shelling(c, flag);
      if (!order) continue;
      CHECK(verify_shelling(c, order->facets).first);
      if (flag) CHECK(order->dims_nonincreasing());
    }
  });
}

TEST_CASE("plain and dimension-ordered searches succeed together") {
  // The non-increasing-dimension order always exists when any shelling does.
  for_each_complex(5, [](const SimplicialComplex& c) {
    CHECK(find_shelling(c, false).has_value() == find_shelling(c, true).has_value());
  });
}

TEST_CASE("shelling existence is relabeling-invariant") {
  const std::vector<int> perm{4, 2, 5, 1, 3};
  for_each_complex(5, [&](const SimplicialComplex& c) {
    CHECK(find_shelling(c, true).has_value() ==
          find_shelling(relabel(c, perm), true).has_value());
  });
}

TEST_CASE("pure shellable complexes have nonnegative h-vectors") {
  for_each_complex(5, [](const SimplicialComplex& c) {
    if (!c.is_pure() || !find_shelling(c, false)) return;
    for (const Int& h : h_vector(c).entries) CHECK(h >= 0);
  });
}

TEST_CASE("enumerate_shellings lists valid orders in lexicographic order") {
  auto c = paper_example_1();
  auto orders = enumerate_shellings(c, false, 1000);
  CHECK(!orders.empty());
  for (const auto& o : orders) CHECK(verify_shelling(c, o.facets).first);
  // The first enumerated order is what find_shelling returns.
  CHECK(orders.front().facets == find_shelling(c, false)->facets);

  auto capped = enumerate_shellings(c, false, 1);
  REQUIRE(capped.size() == 1);
  CHECK(capped.front().facets == orders.front().facets);
}
