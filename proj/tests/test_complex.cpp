#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "reescm/complex.hpp"
#include "reescm/enumerate.hpp"
#include "reescm/errors.hpp"
#include "reescm/homology.hpp"
#include "oracles.hpp"

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

TEST_CASE("from_facets canonicalizes") {
  auto c = paper_example_1();
  CHECK(c.facet_count() == 3);
  CHECK(c.dimension() == 2);
  CHECK(c.facets()[0] == Face{1, 2, 3});
  CHECK(c.facets()[1] == Face{2, 3, 4});
  CHECK(c.facets()[2] == Face{4, 5});

  auto absorbed = SimplicialComplex::from_facets(3, {Face{1, 2, 3}, Face{1, 2}});
  CHECK(absorbed.facet_count() == 1);
  CHECK(absorbed.facets()[0] == Face{1, 2, 3});

  auto mixed = paper_example_2();
  CHECK(mixed.facet_count() == 4);
  CHECK(mixed.dimension() == 2);
  CHECK_FALSE(mixed.is_pure());

  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, std::span<const Face>{}), EmptyInput);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(3, {Face{4}}), VertexOutOfRange);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(0, {Face{1}}), VertexOutOfRange);
  CHECK_THROWS_AS(SimplicialComplex::from_facets(65, {Face{1}}), VertexOutOfRange);
}

TEST_CASE("is_face") {
  auto c = paper_example_1();
  CHECK(c.is_face(Face{2, 3}));
  CHECK_FALSE(c.is_face(Face{1, 4}));
  CHECK(c.is_face(Face::empty()));
}

TEST_CASE("dimension and purity") {
  CHECK(paper_example_1().dimension() == 2);
  CHECK_FALSE(paper_example_1().is_pure());

  auto simplex = SimplicialComplex::from_facets(3, {Face{1, 2, 3}});
  CHECK(simplex.dimension() == 2);
  CHECK(simplex.is_pure());

  auto irrelevant = SimplicialComplex::from_facets(1, {Face::empty()});
  CHECK(irrelevant.dimension() == -1);
  CHECK(irrelevant.is_pure());
}

TEST_CASE("faces_of_cardinality") {
  auto simplex = SimplicialComplex::from_facets(3, {Face{1, 2, 3}});
  auto edges = faces_of_cardinality(simplex, 2);
  REQUIRE(edges.size() == 3);
  CHECK(edges[0] == Face{1, 2});
  CHECK(edges[1] == Face{1, 3});
  CHECK(edges[2] == Face{2, 3});

  CHECK(faces_of_cardinality(paper_example_2(), 2).size() == 6);

  auto zero = faces_of_cardinality(paper_example_1(), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].is_empty());
}

TEST_CASE("f- and h-vectors of the spec examples") {
  auto simplex = SimplicialComplex::from_facets(3, {Face{1, 2, 3}});
  CHECK(f_vector(simplex).counts == std::vector<Int>{1, 3, 3, 1});
  CHECK(h_vector(simplex).entries == std::vector<Int>{1, 0, 0, 0});

  auto two = SimplicialComplex::from_facets(4, {Face{1, 2, 3}, Face{2, 3, 4}});
  CHECK(f_vector(two).counts == std::vector<Int>{1, 4, 5, 2});
  CHECK(h_vector(two).entries == std::vector<Int>{1, 1, 0, 0});

  auto mixed = paper_example_2();
  CHECK(f_vector(mixed).counts == std::vector<Int>{1, 5, 6, 1});
  CHECK(h_vector(mixed).entries == std::vector<Int>{1, 2, -1, -1});
}

TEST_CASE("h-vector matches the polynomial-expansion oracle") {
  auto check = [](const SimplicialComplex& c) {
    const auto f = f_vector(c);
    const int D = f.top_cardinality();
    oracle::Poly expanded;
    for (int i = 0; i <= D; ++i) {
      oracle::Poly term = oracle::one_minus_t_power(D - i);
      oracle::Poly shifted(static_cast<std::size_t>(i), 0);
      shifted.push_back(1);
      term = oracle::mul(term, shifted);
      for (long long& coef : term)
        coef *= f.counts[static_cast<std::size_t>(i)].convert_to<long long>();
      expanded = oracle::add(expanded, term);
    }
    expanded.resize(static_cast<std::size_t>(D) + 1, 0);
    const auto h = h_vector(c).entries;
    REQUIRE(h.size() == expanded.size());
    for (std::size_t i = 0; i < h.size(); ++i)
      CHECK(h[i] == Int(expanded[i]));
  };
  check(paper_example_1());
  check(paper_example_2());
  check(SimplicialComplex::from_facets(4, {Face{1, 2, 3}, Face{2, 3, 4}}));
}

TEST_CASE("generated subcomplexes") {
  auto g = generated_subcomplex(5, std::vector<Face>{Face{1, 2, 3}, Face{2, 3, 4}});
  CHECK(g == SimplicialComplex::from_facets(5, {Face{1, 2, 3}, Face{2, 3, 4}}));

  auto single = generated_subcomplex(5, std::vector<Face>{Face{4, 5}});
  CHECK(single.facet_count() == 1);

  auto absorb = generated_subcomplex(3, std::vector<Face>{Face{1, 2}, Face{1, 2, 3}});
  CHECK(absorb == SimplicialComplex::from_facets(3, {Face{1, 2, 3}}));
}

TEST_CASE("intersect_generated on the spec examples") {
  auto a = SimplicialComplex::from_facets(5, {Face{1, 2, 3}, Face{2, 3, 4}});
  auto b = SimplicialComplex::from_facets(5, {Face{4, 5}});
  auto inter = intersect_generated(a, b);
  REQUIRE(inter.facet_count() == 1);
  CHECK(inter.facets()[0] == Face{4});

  auto c1 = SimplicialComplex::from_facets(5, {Face{1, 2, 5}, Face{2, 3}, Face{3, 4}});
  auto inter2 = intersect_generated(c1, b);
  REQUIRE(inter2.facet_count() == 2);
  CHECK(inter2.facets()[0] == Face{4});
  CHECK(inter2.facets()[1] == Face{5});

  auto c = paper_example_2();
  CHECK(intersect_generated(c, c) == c);
}

TEST_CASE("face-set semantics of intersection (exhaustive oracle)") {
  auto check = [](const SimplicialComplex& c1, const SimplicialComplex& c2) {
    auto inter = intersect_generated(c1, c2);
    auto faces1 = oracle::brute_faces(c1);
    auto faces2 = oracle::brute_faces(c2);
    std::vector<Face> expected;
    std::set_intersection(faces1.begin(), faces1.end(), faces2.begin(), faces2.end(),
                          std::back_inserter(expected));
    auto got = oracle::brute_faces(inter);
    CHECK(got == expected);
  };
  check(SimplicialComplex::from_facets(5, {Face{1, 2, 3}, Face{2, 3, 4}}),
        SimplicialComplex::from_facets(5, {Face{4, 5}}));
  check(paper_example_1(), paper_example_2());
  check(paper_example_2(),
        SimplicialComplex::from_facets(5, {Face{1, 3, 5}, Face{2, 4}}));
}

TEST_CASE("link") {
  auto simplex = SimplicialComplex::from_facets(3, {Face{1, 2, 3}});
  CHECK(link(simplex, Face{1}) == SimplicialComplex::from_facets(3, {Face{2, 3}}));

  auto lk = link(paper_example_1(), Face{4});
  REQUIRE(lk.facet_count() == 2);
  CHECK(lk.facets()[0] == Face{2, 3});
  CHECK(lk.facets()[1] == Face{5});

  CHECK(link(paper_example_1(), Face::empty()) == paper_example_1());
  CHECK_THROWS_AS(link(paper_example_1(), Face{1, 4}), NotAFace);
}

TEST_CASE("link faces agree with the brute-force definition") {
  auto c = paper_example_2();
  for (Face g : enumerate_faces(c)) {
    auto lk = link(c, g);
    auto lk_faces = oracle::brute_faces(lk);
    std::vector<Face> expected;
    const std::uint64_t top = (std::uint64_t{1} << c.vertex_count()) - 1;
    for (std::uint64_t m = 0; m <= top; ++m) {
      Face h(m);
      if (h.intersect(g).is_empty() && c.is_face(h.unite(g))) expected.push_back(h);
    }
    CHECK(lk_faces == expected);
  }
}

TEST_CASE("antichain invariant holds for every constructed complex") {
  for_each_complex(4, [](const SimplicialComplex& c) {
    for (std::size_t i = 0; i < c.facets().size(); ++i)
      for (std::size_t j = 0; j < c.facets().size(); ++j) {
        if (i == j) continue;
        CHECK_FALSE(c.facets()[i].subset_of(c.facets()[j]));
      }
  });
}

TEST_CASE("f<->h roundtrip is the identity") {
  for_each_complex(5, [](const SimplicialComplex& c) {
    const auto f = f_vector(c);
    CHECK(f_from_h(h_from_f(f)) == f);
  });
}

TEST_CASE("alternating f-sum equals 1 + reduced Euler characteristic") {
  // Cross-checked against homology ranks: chi~ = sum (-1)^i betti~_i.
  for_each_complex(4, [](const SimplicialComplex& c) {
    const auto f = f_vector(c);
    Int alt = 0;  // sum over i >= 0 of (-1)^i f_i, cardinality index i+1
    for (std::size_t k = 1; k < f.counts.size(); ++k)
      alt += (k % 2 == 1 ? f.counts[k] : -f.counts[k]);
    const auto h = reduced_homology(c, Field::rationals());
    Int chi = 0;
    for (int i = -1; i <= c.dimension(); ++i)
      chi += (i % 2 == 0 ? Int(h.reduced_betti(i)) : Int(-h.reduced_betti(i)));
    CHECK(alt == 1 + chi);
  });
}

TEST_CASE("vertex relabeling equivariance") {
  std::vector<int> perm{3, 1, 5, 2, 4};
  auto c1 = paper_example_1();
  auto c2 = paper_example_2();
  CHECK(f_vector(relabel(c1, perm)) == f_vector(c1));
  CHECK(f_vector(relabel(c2, perm)) == f_vector(c2));
  CHECK(relabel(intersect_generated(c1, c2), perm) ==
        intersect_generated(relabel(c1, perm), relabel(c2, perm)));
}

TEST_CASE("enumerate_faces matches the 2^n oracle") {
  for_each_complex(5, [](const SimplicialComplex& c) {
    auto got = enumerate_faces(c);
    std::sort(got.begin(), got.end());
    CHECK(got == oracle::brute_faces(c));
  });
}
