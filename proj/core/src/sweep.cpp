#include "reescm/sweep.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "reescm/enumerate.hpp"
#include "reescm/errors.hpp"
#include "reescm/homology.hpp"
#include "reescm/rees.hpp"

namespace reescm {

std::string to_string(Face f) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : f.vertices()) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const SimplicialComplex& c) {
  std::ostringstream os;
  os << "n=" << c.vertex_count() << ' ';
  bool first = true;
  for (Face f : c.facets()) {
    if (!first) os << ',';
    os << to_string(f);
    first = false;
  }
  return os.str();
}

namespace {

struct Runner {
  const SweepOptions& opt;
  SweepSummary summary;

  void report(const char* kind, const SimplicialComplex& c) {
    ++summary.violation_count;
    if (summary.violations.size() < opt.max_recorded_violations)
      summary.violations.push_back({kind, to_string(c)});
  }

  void visit(const SimplicialComplex& c) {
    ++summary.complexes;

    const auto plain = find_shelling(c, false);
    const auto ordered = find_shelling(c, true);
    if (opt.check_remark_equivalence && plain.has_value() != ordered.has_value())
      report("remark-equivalence", c);
    if (!ordered) return;
    ++summary.shellable;

    if (opt.check_homology && !is_sequentially_cm(c, opt.homology_field))
      report("sequentially-cm", c);
    if (opt.check_gf2 && !is_sequentially_cm(c, Field::prime(2)))
      report("field-independence", c);

    if (c.facets().front().is_empty()) {
      ++summary.degenerate;  // {{}}: the Rees criteria exclude it
      return;
    }

    const bool enumerate_all = c.facet_count() <= opt.all_orders_max_facets;
    const bool need_rees =
        opt.check_agreement || opt.check_splitting || opt.check_order_invariance;

    if (need_rees) {
      ReesReport rep;
      try {
        rep = cross_validate(c);
      } catch (const CrossCheckDisagreement&) {
        report("criteria-agreement", c);
        return;
      }
      if (rep.verdict())
        ++summary.rees_true;
      else
        ++summary.rees_false;

      if (opt.check_splitting) {
        for (const auto& step : rep.steps) {
          ++summary.steps_checked;
          if (step.splitting_support.cardinality() != step.intersection_facets)
            report("splitting-degree", c);
        }
      }

      if (opt.check_order_invariance && enumerate_all) {
        for (const auto& order : enumerate_shellings(c, true, opt.max_orders)) {
          ++summary.orders_checked;
          if (combinatorial_criterion(c, order).combinatorial_verdict != rep.verdict()) {
            report("verdict-order-invariance", c);
            break;
          }
        }
      }
    }

    if (opt.check_telescoping) {
      const DimensionFiltration filt = dimension_filtration(c);
      HilbertSeries sum;
      for (const auto& q : filt.quotients) {
        sum = sum + q.series;
        if (q.series.pole_order() != q.cardinality) report("quotient-pole-order", c);
      }
      if (sum != hilbert_series(c)) report("telescoping", c);
    }

    if (opt.check_recursion && c.is_pure()) {
      const auto expected = *a_invariant(hilbert_series(c));
      std::vector<ShellingOrder> orders;
      if (enumerate_all)
        orders = enumerate_shellings(c, true, opt.max_orders);
      else {
        orders.push_back(*ordered);
        if (plain->facets != ordered->facets) orders.push_back(*plain);
      }
      for (const auto& order : orders) {
        ++summary.orders_checked;
        if (a_invariant_recursive(c, order) != expected) {
          report("recursion-vs-series", c);
          break;
        }
      }
    }
  }
};

}  // namespace

SweepSummary run_sweep(const SweepOptions& options) {
  Runner runner{options, {}};
  if (options.mode == SweepOptions::Mode::exhaustive) {
    for_each_complex(options.max_vertices,
                     [&](const SimplicialComplex& c) { runner.visit(c); });
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < options.count; ++i)
      runner.visit(random_complex(rng, options.max_vertices));
  }
  std::sort(runner.summary.violations.begin(), runner.summary.violations.end(),
            [](const SweepViolation& a, const SweepViolation& b) {
              return std::tie(a.kind, a.complex_text) < std::tie(b.kind, b.complex_text);
            });
  return runner.summary;
}

}  // namespace reescm
