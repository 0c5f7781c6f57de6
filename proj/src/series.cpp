#include "eulerian/series.hpp"

#include "eulerian/combinatorics.hpp"

#include <algorithm>

namespace eulerpoly {

TruncatedSeries::TruncatedSeries(unsigned order) : coeffs_(order + 1, Rational(0)) {}

TruncatedSeries::TruncatedSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw SeriesError("series needs at least one coefficient");
}

TruncatedSeries TruncatedSeries::constant(const Rational& c, unsigned order) {
  TruncatedSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::variable(unsigned order) {
  TruncatedSeries s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(unsigned order) const {
  std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + std::min<std::size_t>(order + 1, coeffs_.size()));
  c.resize(order + 1, Rational(0));
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::derivative() const {
  if (order() == 0) return TruncatedSeries(0u);
  std::vector<Rational> c(order());
  for (unsigned i = 1; i <= order(); ++i) c[i - 1] = coeffs_[i] * i;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::shift_down() const {
  if (order() == 0) throw SeriesError("cannot shift an order-0 series");
  return TruncatedSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
  for (auto& a : coeffs_) a *= c;
  return *this;
}

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
TruncatedSeries operator-(TruncatedSeries a) { return a *= Rational(-1); }
TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return series_div(a, b); }

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  const unsigned order = std::min(a.order(), b.order());
  TruncatedSeries c(order);
  for (unsigned i = 0; i <= order; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; i + j <= order; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == 0) throw SeriesError("series division by a series with zero constant term");
  const unsigned order = std::min(a.order(), b.order());
  const Rational inv_b0 = 1 / b[0];
  TruncatedSeries q(order);
  for (unsigned k = 0; k <= order; ++k) {
    Rational r = a[k];
    for (unsigned j = 1; j <= k; ++j) r -= b[j] * q[k - j];
    q[k] = r * inv_b0;
  }
  return q;
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned e) {
  TruncatedSeries result = TruncatedSeries::constant(1, a.order());
  TruncatedSeries base = a;
  while (e > 0) {
    if (e & 1u) result = series_mul(result, base);
    e >>= 1;
    if (e > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries log1p(unsigned order) {
  TruncatedSeries s(order);
  for (unsigned q = 1; q <= order; ++q) s[q] = make_rational(q % 2 == 1 ? 1 : -1, static_cast<long>(q));
  return s;
}

TruncatedSeries exp_t(unsigned order) {
  TruncatedSeries s(order);
  Integer f = 1;
  for (unsigned q = 0; q <= order; ++q) {
    if (q > 0) f *= q;
    s[q] = make_rational(Integer(1), f);
  }
  return s;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
  if (a[0] != 0) throw SeriesError("exp_series needs a zero constant term");
  // b = exp(a) satisfies b' = a' b, i.e. k b_k = sum_{j=1}^k j a_j b_{k-j}.
  const unsigned order = a.order();
  TruncatedSeries b(order);
  b[0] = 1;
  for (unsigned k = 1; k <= order; ++k) {
    Rational acc = 0;
    for (unsigned j = 1; j <= k; ++j)
      if (a[j] != 0) acc += a[j] * j * b[k - j];
    b[k] = acc / k;
  }
  return b;
}

std::vector<Rational> norlund_from_egf(unsigned max_p) {
  // t / ((1+t) log(1+t)) = 1 / ((1+t) * (log(1+t)/t))
  const unsigned order = max_p;
  TruncatedSeries one_plus_t = TruncatedSeries::constant(1, order) + TruncatedSeries::variable(order);
  TruncatedSeries log_over_t = log1p(order + 1).shift_down();
  TruncatedSeries egf = series_div(TruncatedSeries::constant(1, order), series_mul(one_plus_t, log_over_t));

  std::vector<Rational> out;
  out.reserve(max_p + 1);
  Integer f = 1;
  for (unsigned q = 0; q <= max_p; ++q) {
    if (q > 0) f *= q;
    out.push_back(egf[q] * Rational(f));
  }
  return out;
}

bool verify_stirling_egf(unsigned j, unsigned order) {
  if (j < 1 || order < j) throw std::invalid_argument("verify_stirling_egf: need 1 <= j <= order");
  TruncatedSeries expm1 = exp_t(order) - TruncatedSeries::constant(1, order);
  TruncatedSeries lhs = series_pow(expm1, j) * make_rational(Integer(1), factorial(j));
  const StirlingTable stirling(order);
  for (unsigned n = 0; n <= order; ++n) {
    Rational expected = n < j ? Rational(0) : make_rational(stirling(n, j), factorial(n));
    if (lhs[n] != expected) return false;
  }
  return true;
}

void write_csv(std::ostream& out, const TruncatedSeries& s) {
  out << "index,coefficient\n";
  for (unsigned i = 0; i <= s.order(); ++i) out << i << ',' << to_string(s[i]) << '\n';
}

}  // namespace eulerpoly
