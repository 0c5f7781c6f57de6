#pragma once

// Dense univariate polynomials over Rational, and the two families this
// project studies: the Eulerian polynomials A_n(x) and the monic
// polynomial R_n(y) whose roots are u = 1/(1 - x) for the roots x of A_n.

#include "eulerian/rational.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace eulerpoly {

/// Coefficients in ascending degree, trailing zeros stripped. The zero
/// polynomial has no coefficients and degree -1.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coefficients);
  DensePoly(std::initializer_list<Rational> coefficients);

  static DensePoly monomial(const Rational& c, unsigned degree);

  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  DensePoly derivative() const;
  /// p(a + b y) as a polynomial in y.
  DensePoly compose_affine(const Rational& a, const Rational& b) const;

  friend bool operator==(const DensePoly&, const DensePoly&) = default;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

DensePoly operator+(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a, const DensePoly& b);
DensePoly operator-(const DensePoly& a);
DensePoly operator*(const DensePoly& a, const DensePoly& b);
DensePoly operator*(const DensePoly& a, const Rational& c);

/// Euclidean division; throws std::domain_error for a zero divisor.
std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b);

/// Synthetic division by (x - r). Returns quotient and the remainder p(r).
std::pair<DensePoly, Rational> deflate(const DensePoly& p, const Rational& r);

std::ostream& operator<<(std::ostream& out, const DensePoly& p);

/// A_n(x) = sum_{k=1}^n A(n,k) x^k.
DensePoly eulerian_poly(unsigned n);

/// e_{n,p} = (n-p)!/n! S(n+1, n-p+1), the elementary symmetric functions
/// of the u-roots, for p = 0..n.
std::vector<Rational> u_elementary_symmetric(unsigned n);

/// R_n(y) = sum_p (-1)^p e_{n,p} y^{n-p}: monic, degree n, R_n(1) = 0.
DensePoly u_poly(unsigned n);

}  // namespace eulerpoly
