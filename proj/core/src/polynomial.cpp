#include "reescm/polynomial.hpp"

#include <algorithm>

namespace reescm {

Polynomial::Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::constant(Int c) { return Polynomial({std::move(c)}); }

Polynomial Polynomial::monomial(Int c, int degree) {
  std::vector<Int> v(static_cast<std::size_t>(degree) + 1, Int(0));
  v.back() = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Int(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Int Polynomial::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Int Polynomial::eval_at_one() const {
  Int acc = 0;
  for (const Int& c : coeffs_) acc += c;
  return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  std::vector<Int> out = coeffs_;
  for (Int& c : out) c = -c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(out));
}

std::optional<Polynomial> Polynomial::divide_by_one_minus_t() const {
  if (is_zero()) return Polynomial();
  if (eval_at_one() != 0) return std::nullopt;
  // p = (1-t) q  =>  q_k = p_k + q_{k-1}.
  std::vector<Int> q(coeffs_.size() - 1, Int(0));
  Int carry = 0;
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    carry += coeffs_[k];
    q[k] = carry;
  }
  return Polynomial(std::move(q));
}

Polynomial Polynomial::times_one_minus_t(int power) const {
  Polynomial one_minus_t({Int(1), Int(-1)});
  Polynomial acc = *this;
  for (int i = 0; i < power; ++i) acc = acc * one_minus_t;
  return acc;
}

}  // namespace reescm
