#include "symquot/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace symquot {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

PowerSeries::PowerSeries(const IntPoly& p, std::size_t order) : c_(order + 1) {
  const auto& pc = p.coefficients();
  for (std::size_t k = 0; k <= order && k < pc.size(); ++k) c_[k] = pc[k];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
  if (order + 1 >= c_.size()) return *this;
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  c_.resize(std::min(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  std::vector<Rational> r(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PowerSeries(std::move(r));
}

PowerSeries operator/(const PowerSeries& a, const PowerSeries& b) {
  if (b.c_.empty() || b.c_[0] == 0)
    throw std::domain_error("power series division: constant term of divisor is zero");
  const std::size_t n = std::min(a.c_.size(), b.c_.size());
  std::vector<Rational> q(n);
  const Rational inv0 = 1 / b.c_[0];
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j)
      if (b.c_[j] != 0) acc -= b.c_[j] * q[k - j];
    q[k] = acc * inv0;
  }
  return PowerSeries(std::move(q));
}

}  // namespace symquot
