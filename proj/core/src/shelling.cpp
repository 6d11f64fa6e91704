#include "reescm/shelling.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "reescm/errors.hpp"

namespace reescm {

bool ShellingOrder::dims_nonincreasing() const {
  for (std::size_t i = 1; i < facets.size(); ++i)
    if (facets[i].cardinality() > facets[i - 1].cardinality()) return false;
  return true;
}

namespace {

// Backtracking over facet orderings, branching in canonical facet order so
// completions appear in lexicographic order. Sets of used facets that admit
// no completion are memoized (completability depends on the set only, not
// on the order it was reached in).
struct Search {
  const std::vector<Face>& facets;
  const bool nonincreasing;
  const bool use_memo;
  std::vector<int> chosen;
  std::vector<Face> prefix;
  std::unordered_set<std::uint64_t> dead;

  Search(const std::vector<Face>& f, bool nonincr)
      : facets(f), nonincreasing(nonincr), use_memo(f.size() <= 64) {
    prefix.reserve(f.size());
  }

  struct Result {
    bool found_any;
    bool stop;
  };

  // sink(chosen) returns true to keep searching, false to stop.
  template <typename Sink>
  Result dfs(std::uint64_t used, Sink&& sink) {
    const int m = static_cast<int>(facets.size());
    if (static_cast<int>(chosen.size()) == m) return {true, !sink(chosen)};
    if (use_memo && dead.contains(used)) return {false, false};
    int max_card = -1;
    if (nonincreasing) {
      for (int i = 0; i < m; ++i)
        if (!(used >> i & 1))
          max_card = std::max(max_card, facets[static_cast<std::size_t>(i)].cardinality());
    }
    bool found_any = false;
    for (int i = 0; i < m; ++i) {
      if (used >> i & 1) continue;
      const Face cand = facets[static_cast<std::size_t>(i)];
      if (nonincreasing && cand.cardinality() != max_card) continue;
      if (!analyze_step(prefix, cand).valid) continue;
      chosen.push_back(i);
      prefix.push_back(cand);
      Result r = dfs(used | (std::uint64_t{1} << i), sink);
      chosen.pop_back();
      prefix.pop_back();
      found_any = found_any || r.found_any;
      if (r.stop) return {found_any, true};
    }
    if (use_memo && !found_any) dead.insert(used);
    return {found_any, false};
  }
};

template <typename Sink>
void search_shellings(const SimplicialComplex& c, bool nonincreasing, Sink&& sink) {
  Search s(c.facets(), nonincreasing);
  s.dfs(0, sink);
}

ShellingOrder order_from_indices(const SimplicialComplex& c,
                                 const std::vector<int>& chosen) {
  ShellingOrder order;
  order.facets.reserve(chosen.size());
  for (int i : chosen) order.facets.push_back(c.facets()[static_cast<std::size_t>(i)]);
  return order;
}

}  // namespace

StepAnalysis analyze_step(std::span<const Face> prefix, Face next) {
  // Every intersection next & F_j must sit inside a corank-1 subset of
  // `next` that is itself realized as some next & F_k; given the antichain
  // property this says exactly that the intersection complex is pure of
  // dimension |next| - 2.
  if (prefix.empty()) return {true, Face::empty()};
  const std::uint64_t c = next.mask();
  const int k = next.cardinality();
  std::uint64_t realized = 0;  // v such that next \ {v} is in the intersection
  for (Face f : prefix) {
    const std::uint64_t inter = c & f.mask();
    if (std::popcount(inter) == k - 1) realized |= c ^ inter;
  }
  for (Face f : prefix) {
    const std::uint64_t inter = c & f.mask();
    if (std::popcount(inter) == k - 1) continue;
    if ((realized & ~inter) == 0) return {false, Face::empty()};
  }
  return {true, Face(realized)};
}

bool is_shelling_order(const SimplicialComplex& c, const std::vector<Face>& order) {
  std::vector<Face> a = c.facets();
  std::vector<Face> b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw NotAPermutation("order is not a permutation of the facets");
  for (std::size_t i = 1; i < order.size(); ++i)
    if (!analyze_step(std::span<const Face>(order.data(), i), order[i]).valid)
      return false;
  return true;
}

std::pair<bool, std::vector<ShellingStepReport>> verify_shelling(
    const SimplicialComplex& c, const std::vector<Face>& order) {
  std::vector<Face> a = c.facets();
  std::vector<Face> b = order;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw NotAPermutation("order is not a permutation of the facets");

  bool all_ok = true;
  std::vector<ShellingStepReport> reports;
  for (std::size_t i = 1; i < order.size(); ++i) {
    SimplicialComplex prefix = SimplicialComplex::from_facets(
        c.vertex_count(), std::span<const Face>(order.data(), i));
    SimplicialComplex last =
        SimplicialComplex::from_facets(c.vertex_count(), {order[i]});
    SimplicialComplex inter = intersect_generated(prefix, last);
    ShellingStepReport r{.index = static_cast<int>(i) + 1,
                         .intersection = inter,
                         .intersection_facet_count = inter.facet_count(),
                         .pure = inter.is_pure(),
                         .dimension_ok =
                             inter.dimension() == order[i].cardinality() - 2};
    all_ok = all_ok && r.ok();
    reports.push_back(std::move(r));
  }
  return {all_ok, std::move(reports)};
}

std::optional<ShellingOrder> find_shelling(const SimplicialComplex& c,
                                           bool require_nonincreasing_dims) {
  std::optional<ShellingOrder> result;
  search_shellings(c, require_nonincreasing_dims, [&](const std::vector<int>& chosen) {
    result = order_from_indices(c, chosen);
    return false;  // first completion is the lexicographically smallest
  });
  return result;
}

std::vector<ShellingOrder> enumerate_shellings(const SimplicialComplex& c,
                                               bool require_nonincreasing_dims,
                                               std::size_t max_orders) {
  std::vector<ShellingOrder> out;
  if (max_orders == 0) return out;
  search_shellings(c, require_nonincreasing_dims, [&](const std::vector<int>& chosen) {
    out.push_back(order_from_indices(c, chosen));
    return out.size() < max_orders;
  });
  return out;
}

}  // namespace reescm
