#include "eulerian/measures.hpp"

#include "eulerian/combinatorics.hpp"
#include "eulerian/polynomial.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulerpoly {

EmpiricalMeasure::EmpiricalMeasure(std::vector<double> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("EmpiricalMeasure: no atoms");
  if (std::any_of(atoms_.begin(), atoms_.end(), [](double a) { return std::isnan(a); }))
    throw std::invalid_argument("EmpiricalMeasure: NaN atom");
  std::sort(atoms_.begin(), atoms_.end());
}

std::vector<Rational> exact_power_sums(unsigned n, unsigned p_max) {
  if (p_max < 1 || p_max > n) throw std::invalid_argument("exact_power_sums: need 1 <= p_max <= n");
  const auto e = u_elementary_symmetric(n);
  // m_p = (-1)^{p-1} p e_p + sum_{i=1}^{p-1} (-1)^{p-1+i} e_{p-i} m_i
  std::vector<Rational> m(p_max + 1);
  for (unsigned p = 1; p <= p_max; ++p) {
    Rational acc = e[p] * p;
    if (p % 2 == 0) acc = -acc;
    for (unsigned i = 1; i < p; ++i) {
      const Rational term = e[p - i] * m[i];
      if ((p - 1 + i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    m[p] = acc;
  }
  m.erase(m.begin());
  return m;
}

Rational normalized_moment(unsigned p) {
  Rational v = norlund_integral(p) / Rational(factorial(p));
  return p % 2 == 0 ? v : Rational(-v);
}

std::vector<MomentReport> numeric_moments(const EmpiricalMeasure& m, unsigned p_max, const Rational& rescale) {
  if (p_max < 1) throw std::invalid_argument("numeric_moments: p_max must be >= 1");
  if (rescale <= 0) throw std::invalid_argument("numeric_moments: rescale must be positive");
  const double scale = to_double(rescale);
  std::vector<MomentReport> out;
  out.reserve(p_max);
  std::vector<double> powers(m.atoms().begin(), m.atoms().end());
  for (unsigned p = 1; p <= p_max; ++p) {
    if (p > 1)
      for (std::size_t k = 0; k < powers.size(); ++k) powers[k] *= m.atoms()[k];
    double sum = 0;
    // ascending order of magnitude for u-atoms in (0, 1]
    for (double v : powers) sum += v;
    MomentReport r;
    r.p = p;
    r.numeric_value = sum / scale;
    r.reference_value = normalized_moment(p);
    r.abs_error = std::abs(r.numeric_value - to_double(r.reference_value));
    out.push_back(std::move(r));
  }
  return out;
}

double empirical_cdf(const EmpiricalMeasure& m, double t) {
  const auto atoms = m.atoms();
  const auto count = std::upper_bound(atoms.begin(), atoms.end(), t) - atoms.begin();
  return static_cast<double>(count) / static_cast<double>(atoms.size());
}

double ks_distance(const EmpiricalMeasure& m, const std::function<double(double)>& cdf) {
  const auto atoms = m.atoms();
  const double n = static_cast<double>(atoms.size());
  double sup = 0;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const double f = cdf(atoms[i]);
    const double above = static_cast<double>(i + 1) / n;
    const double below = static_cast<double>(i) / n;
    sup = std::max({sup, std::abs(f - above), std::abs(f - below)});
  }
  return sup;
}

void write_moments_csv_header(std::ostream& out) { out << "n,p,exact,numeric,reference,abs_error\n"; }

void write_moments_csv(std::ostream& out, unsigned n, const std::vector<MomentReport>& reports) {
  for (const auto& r : reports) {
    out << n << ',' << r.p << ',' << (r.exact_value ? to_string(*r.exact_value) : std::string()) << ','
        << fmt::format("{:.17g}", r.numeric_value) << ',' << to_string(r.reference_value) << ','
        << fmt::format("{:.17g}", r.abs_error) << '\n';
  }
}

}  // namespace eulerpoly
