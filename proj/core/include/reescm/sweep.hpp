#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "reescm/complex.hpp"
#include "reescm/homology.hpp"

namespace reescm {

std::string to_string(Face f);
std::string to_string(const SimplicialComplex& c);

/// Configuration for a property sweep over generated complexes. Exhaustive
/// mode walks every complex on {1..max_vertices}; random mode draws `count`
/// seeded complexes. Checks can be disabled individually (the homology
/// oracle dominates the cost at larger sizes).
struct SweepOptions {
  enum class Mode { exhaustive, random };

  int max_vertices = 5;
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;  // random mode only

  bool check_remark_equivalence = true;  // plain and dim-ordered searches agree
  bool check_agreement = true;           // combinatorial vs a-invariant verdicts
  bool check_splitting = true;           // |W| equals intersection facet count
  bool check_recursion = true;           // pure shellable: recursion == degree
  bool check_homology = true;            // shellable => sequentially CM
  Field homology_field = Field::rationals();
  bool check_gf2 = false;                // additionally over GF(2)
  bool check_telescoping = true;         // sum of C_i series == series of Delta
  bool check_order_invariance = true;    // verdict identical across all orders

  // All shelling orders are enumerated only when the facet count is at most
  // this bound; larger complexes are checked on the canonical orders.
  int all_orders_max_facets = 5;
  std::size_t max_orders = 2048;
  std::size_t max_recorded_violations = 100;
};

struct SweepViolation {
  std::string kind;
  std::string complex_text;
};

struct SweepSummary {
  std::uint64_t complexes = 0;
  std::uint64_t shellable = 0;
  std::uint64_t degenerate = 0;  // the complex {{}}
  std::uint64_t rees_true = 0;
  std::uint64_t rees_false = 0;
  std::uint64_t steps_checked = 0;   // splitting-degree checks
  std::uint64_t orders_checked = 0;  // recursion / order-invariance orders
  std::uint64_t violation_count = 0;
  std::vector<SweepViolation> violations;  // capped, sorted canonically

  bool clean() const { return violation_count == 0; }
};

SweepSummary run_sweep(const SweepOptions& options);

}  // namespace reescm
