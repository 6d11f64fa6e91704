#pragma once

#include <optional>
#include <vector>

#include "reescm/polynomial.hpp"

namespace reescm {

/// Exact rational function numerator(t) / (1-t)^pole_order in reduced form:
/// either numerator == 0 and pole_order == 0 (the zero series), or
/// numerator(1) != 0. The degree of the series as a rational function is
/// deg(numerator) - pole_order; for graded modules that are Cohen-Macaulay
/// this is the a-invariant.
class HilbertSeries {
 public:
  HilbertSeries() = default;  // zero series

  /// Reduces numerator/(1-t)^pole by cancelling (1-t) factors.
  HilbertSeries(Polynomial numerator, int pole);

  static HilbertSeries zero() { return HilbertSeries(); }
  static HilbertSeries one() { return HilbertSeries(Polynomial::constant(1), 0); }

  bool is_zero() const { return numerator_.is_zero(); }
  const Polynomial& numerator() const { return numerator_; }
  int pole_order() const { return pole_order_; }

  /// deg(numerator) - pole_order; nullopt encodes -infinity (zero series).
  std::optional<int> degree() const;

  HilbertSeries operator+(const HilbertSeries& o) const;

  /// First (count) coefficients of the power-series expansion, obtained by
  /// polynomial long division.
  std::vector<Int> expand(int count) const;

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

 private:
  Polynomial numerator_;
  int pole_order_ = 0;
};

/// The a-invariant read off a reduced series: its degree as a rational
/// function. Valid as the local-cohomology a-invariant only when the module
/// behind the series is Cohen-Macaulay; callers assert that. nullopt is the
/// -infinity sentinel of the zero module.
std::optional<int> a_invariant(const HilbertSeries& series);

}  // namespace reescm
