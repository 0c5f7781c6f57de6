#pragma once

// Truncated formal power series over Rational.

#include "eulerian/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

namespace eulerpoly {

struct SeriesError : std::domain_error {
  using std::domain_error::domain_error;
};

/// a_0 + a_1 t + ... + a_order t^order (mod t^{order+1}).
///
/// Binary operations truncate to the smaller of the two orders. The
/// coefficient vector always has exactly order()+1 entries.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order);  // zero series
  TruncatedSeries(std::vector<Rational> coefficients);  // order = size-1; throws if empty

  static TruncatedSeries constant(const Rational& c, unsigned order);
  /// The formal variable t (requires order >= 1 to be non-zero).
  static TruncatedSeries variable(unsigned order);

  unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  const Rational& operator[](unsigned i) const { return coeffs_.at(i); }
  Rational& operator[](unsigned i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  TruncatedSeries truncated(unsigned order) const;
  /// Termwise derivative; the result has order() - 1 (order 0 stays 0).
  TruncatedSeries derivative() const;
  /// Drop the constant term and divide by t; order decreases by one.
  TruncatedSeries shift_down() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  TruncatedSeries& operator*=(const Rational& c);

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Rational> coeffs_;
};

TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b);
TruncatedSeries operator-(TruncatedSeries a);
TruncatedSeries operator*(TruncatedSeries a, const Rational& c);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product at min(order(a), order(b)).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// q with q*b == a up to truncation. Throws SeriesError when b(0) == 0.
TruncatedSeries series_div(const TruncatedSeries& a, const TruncatedSeries& b);

/// Non-negative integer power, at the order of a.
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned e);

/// log(1+t) = sum_{q>=1} (-1)^{q+1} t^q / q.
TruncatedSeries log1p(unsigned order);

/// exp(t) = sum t^q / q!.
TruncatedSeries exp_t(unsigned order);

/// exp(a) for a(0) == 0; throws SeriesError otherwise.
TruncatedSeries exp_series(const TruncatedSeries& a);

/// [N_0, ..., N_max_p] from the exponential generating function
/// t / ((1+t) log(1+t)). The factor t is cancelled by shifting log1p down
/// one degree before dividing.
std::vector<Rational> norlund_from_egf(unsigned max_p);

/// Checks that (e^x - 1)^j / j! has coefficients S(n, j) / n! for
/// j <= n <= order, and vanishes below degree j.
bool verify_stirling_egf(unsigned j, unsigned order);

/// CSV rows "index,num/den" with a header line "index,coefficient".
void write_csv(std::ostream& out, const TruncatedSeries& s);

}  // namespace eulerpoly
