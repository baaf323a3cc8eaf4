#include "hypercore/series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "hypercore/numeric.hpp"
#include "hypercore/seqspec.hpp"

namespace hypercore {

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty())
    throw std::invalid_argument("series needs at least the constant term");
}

TruncSeries TruncSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("negative series order");
  return TruncSeries(std::vector<Rational>(static_cast<std::size_t>(order) + 1));
}

const Rational& TruncSeries::coeff(int k) const {
  static const Rational zero{};
  if (k < 0 || k > order()) return zero;
  return c_[static_cast<std::size_t>(k)];
}

bool TruncSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

TruncSeries TruncSeries::exp(const Rational& a, int order) {
  TruncSeries s = zero(order);
  Rational term(1);
  for (int k = 0; k <= order; ++k) {
    s.c_[static_cast<std::size_t>(k)] = term;
    term = term * a / Rational(k + 1);
  }
  return s;
}

TruncSeries TruncSeries::from_poly(const Poly& p, int order) {
  TruncSeries s = zero(order);
  for (int k = 0; k <= order; ++k) s.c_[static_cast<std::size_t>(k)] = p.coeff(k);
  return s;
}

Poly TruncSeries::to_poly() const { return Poly(c_); }

TruncSeries TruncSeries::derivative() const {
  if (order() < 1)
    throw std::invalid_argument("derivative of an order-0 series");
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    d[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return TruncSeries(std::move(d));
}

TruncSeries TruncSeries::integral(const Rational& constant_term) const {
  std::vector<Rational> v(c_.size() + 1);
  v[0] = constant_term;
  for (std::size_t k = 0; k < c_.size(); ++k)
    v[k + 1] = c_[k] / Rational(static_cast<long>(k) + 1);
  return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::exp_mul(const Rational& a) const {
  return *this * exp(a, order());
}

TruncSeries TruncSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("negative series order");
  if (order >= this->order()) return *this;
  return TruncSeries(
      std::vector<Rational>(c_.begin(), c_.begin() + order + 1));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries r = TruncSeries::zero(n);
  for (int k = 0; k <= n; ++k)
    r.c_[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries r = TruncSeries::zero(n);
  for (int k = 0; k <= n; ++k)
    r.c_[static_cast<std::size_t>(k)] = a.coeff(k) - b.coeff(k);
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const int n = std::min(a.order(), b.order());
  TruncSeries r = TruncSeries::zero(n);
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      r.c_[static_cast<std::size_t>(i + j)] += a.coeff(i) * b.coeff(j);
  }
  return r;
}

TruncSeries operator*(const TruncSeries& a, const Rational& s) {
  TruncSeries r = a;
  for (auto& c : r.c_) c *= s;
  return r;
}

std::ostream& operator<<(std::ostream& os, const TruncSeries& s) {
  os << "[";
  for (int k = 0; k <= s.order(); ++k) {
    if (k) os << ", ";
    os << s.coeff(k).str();
  }
  return os << "] + O(x^" << s.order() + 1 << ")";
}

TruncSeries series_from_sequence(const SeqSpec& s, SeriesWeight weight,
                                 int order) {
  std::vector<Rational> v(static_cast<std::size_t>(order) + 1);
  Rational fact(1);
  for (int k = 0; k <= order; ++k) {
    if (k > 0) fact *= Rational(k);
    const Rational g = s.eval(k);
    v[static_cast<std::size_t>(k)] =
        weight == SeriesWeight::kTaylor ? g / fact : g;
  }
  return TruncSeries(std::move(v));
}

TruncSeries series_from_values(const std::vector<Rational>& values,
                               SeriesWeight weight) {
  if (values.empty())
    throw std::invalid_argument("series needs at least one value");
  std::vector<Rational> v(values.size());
  Rational fact(1);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) fact *= Rational(static_cast<long>(k));
    v[k] = weight == SeriesWeight::kTaylor ? values[k] / fact : values[k];
  }
  return TruncSeries(std::move(v));
}

}  // namespace hypercore
