#pragma once

#include <optional>
#include <vector>

#include "reescm/ints.hpp"

namespace reescm {

/// Dense univariate polynomial over Int, normalized (no trailing zero
/// coefficients; the zero polynomial has an empty coefficient vector).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  static Polynomial constant(Int c);
  static Polynomial monomial(Int c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(int k) const;

  Int eval(const Int& x) const;
  Int eval_at_one() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;

  /// Exact quotient by (1 - t); nullopt if (1 - t) does not divide.
  std::optional<Polynomial> divide_by_one_minus_t() const;

  /// This * (1 - t)^power.
  Polynomial times_one_minus_t(int power) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

}  // namespace reescm
