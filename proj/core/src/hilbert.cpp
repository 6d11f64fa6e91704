#include "reescm/hilbert.hpp"

#include <algorithm>

namespace reescm {

HilbertSeries::HilbertSeries(Polynomial numerator, int pole)
    : numerator_(std::move(numerator)), pole_order_(pole) {
  if (numerator_.is_zero()) {
    pole_order_ = 0;
    return;
  }
  while (pole_order_ > 0) {
    auto reduced = numerator_.divide_by_one_minus_t();
    if (!reduced) break;
    numerator_ = std::move(*reduced);
    --pole_order_;
  }
}

std::optional<int> HilbertSeries::degree() const {
  if (is_zero()) return std::nullopt;
  return numerator_.degree() - pole_order_;
}

HilbertSeries HilbertSeries::operator+(const HilbertSeries& o) const {
  const int pole = std::max(pole_order_, o.pole_order_);
  Polynomial num = numerator_.times_one_minus_t(pole - pole_order_) +
                   o.numerator_.times_one_minus_t(pole - o.pole_order_);
  return HilbertSeries(std::move(num), pole);
}

std::vector<Int> HilbertSeries::expand(int count) const {
  std::vector<Int> out(static_cast<std::size_t>(count), Int(0));
  for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = numerator_.coeff(k);
  // Dividing a power series by (1-t) is a running prefix sum.
  for (int pass = 0; pass < pole_order_; ++pass)
    for (int k = 1; k < count; ++k)
      out[static_cast<std::size_t>(k)] += out[static_cast<std::size_t>(k - 1)];
  return out;
}

std::optional<int> a_invariant(const HilbertSeries& series) { return series.degree(); }

}  // namespace reescm
