#include "eulerian/polynomial.hpp"

#include "eulerian/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace eulerpoly {

DensePoly::DensePoly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { normalize(); }

DensePoly::DensePoly(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) { normalize(); }

DensePoly DensePoly::monomial(const Rational& c, unsigned degree) {
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return DensePoly(std::move(v));
}

void DensePoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational DensePoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double DensePoly::operator()(double x) const {
  double acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

DensePoly DensePoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return DensePoly(std::move(d));
}

DensePoly DensePoly::compose_affine(const Rational& a, const Rational& b) const {
  // Horner in polynomial arithmetic: acc = acc * (a + b y) + c_i
  const DensePoly lin{a, b};
  DensePoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + DensePoly{*it};
  return acc;
}

DensePoly operator+(const DensePoly& a, const DensePoly& b) {
  std::vector<Rational> c(std::max(a.coefficients().size(), b.coefficients().size()), Rational(0));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
  return DensePoly(std::move(c));
}

DensePoly operator-(const DensePoly& a) { return a * Rational(-1); }

DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

DensePoly operator*(const DensePoly& a, const DensePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<Rational> c(ac.size() + bc.size() - 1, Rational(0));
  for (std::size_t i = 0; i < ac.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j) c[i + j] += ac[i] * bc[j];
  return DensePoly(std::move(c));
}

DensePoly operator*(const DensePoly& a, const Rational& c) {
  std::vector<Rational> v = a.coefficients();
  for (auto& x : v) x *= c;
  return DensePoly(std::move(v));
}

std::pair<DensePoly, DensePoly> divmod(const DensePoly& a, const DensePoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {DensePoly{}, a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> quot(rem.size() - db, Rational(0));
  const Rational inv_lead = 1 / bc.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational q = rem[k + db] * inv_lead;
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= q * bc[j];
  }
  rem.resize(db);
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

std::pair<DensePoly, Rational> deflate(const DensePoly& p, const Rational& r) {
  if (p.is_zero()) return {DensePoly{}, Rational(0)};
  const auto& c = p.coefficients();
  std::vector<Rational> q(c.size() - 1);
  Rational acc = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * r + c[i];
    if (i > 0) q[i - 1] = acc;
  }
  return {DensePoly(std::move(q)), acc};
}

std::ostream& operator<<(std::ostream& out, const DensePoly& p) {
  if (p.is_zero()) return out << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coefficients().size(); ++i) {
    const Rational& c = p.coefficients()[i];
    if (c == 0) continue;
    if (!first) out << " + ";
    out << '(' << to_string(c) << ')';
    if (i >= 1) out << "*x";
    if (i >= 2) out << '^' << i;
    first = false;
  }
  return out;
}

DensePoly eulerian_poly(unsigned n) {
  const auto row = eulerian_row(n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned k = 1; k <= n; ++k) c[k] = Rational(row[k - 1]);
  return DensePoly(std::move(c));
}

std::vector<Rational> u_elementary_symmetric(unsigned n) {
  if (n == 0) throw std::invalid_argument("u_elementary_symmetric: n must be >= 1");
  const StirlingTable stirling(n + 1);
  const Integer nfact = factorial(n);
  std::vector<Rational> e(n + 1);
  for (unsigned p = 0; p <= n; ++p) e[p] = make_rational(factorial(n - p) * stirling(n + 1, n - p + 1), nfact);
  return e;
}

DensePoly u_poly(unsigned n) {
  const auto e = u_elementary_symmetric(n);
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned p = 0; p <= n; ++p) c[n - p] = p % 2 == 0 ? e[p] : Rational(-e[p]);
  return DensePoly(std::move(c));
}

}  // namespace eulerpoly
