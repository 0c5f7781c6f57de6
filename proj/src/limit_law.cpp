#include "eulerian/limit_law.hpp"

#include "eulerian/measures.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include <array>
#include <cmath>
#include <limits>

namespace eulerpoly {

namespace {

constexpr double kCutTolerance = 4 * std::numeric_limits<double>::epsilon();

bool on_real_axis(ComplexPoint t) {
  return std::abs(t.imag()) <= kCutTolerance * std::max(1.0, std::abs(t.real()));
}

// log(1 + z) without cancellation for small |z|.
ComplexPoint log1p(ComplexPoint z) {
  const ComplexPoint w = 1.0 + z;
  const ComplexPoint d = w - 1.0;
  if (d == 0.0) return z;
  return std::log(w) * (z / d);
}

constexpr unsigned kSeriesTerms = 48;

// (-1)^p N_p / p! for p = 0..kSeriesTerms, rounded once.
const std::array<double, kSeriesTerms + 1>& nu_moments() {
  static const auto table = [] {
    std::array<double, kSeriesTerms + 1> m{};
    for (unsigned p = 0; p <= kSeriesTerms; ++p) m[p] = to_double(normalized_moment(p));
    return m;
  }();
  return table;
}

}  // namespace

double density_mu(double t) {
  if (!(t > 0)) return 0;
  if (std::isinf(t)) return 0;
  const double l = std::log(t);
  return 1 / (t * (l * l + kPi * kPi));
}

double cdf_mu(double t) {
  if (!(t > 0)) return 0;
  if (std::isinf(t)) return 1;
  return 0.5 + std::atan(std::log(t) / kPi) / kPi;
}

double quantile_mu(double q) {
  if (!(q > 0 && q < 1)) throw DomainError("quantile_mu: q must lie in (0, 1)");
  return std::exp(kPi * std::tan(kPi * (q - 0.5)));
}

Rational moment_nu(unsigned p) { return normalized_moment(p); }

ComplexPoint stieltjes_nu(ComplexPoint t) {
  if (on_real_axis(t) && t.real() >= -kCutTolerance && t.real() <= 1 + kCutTolerance)
    throw DomainError("stieltjes_nu: t lies on the support [0, 1]");
  return 1.0 / (t * (t - 1.0) * log1p(-1.0 / t));
}

ComplexPoint stieltjes_mu(ComplexPoint t) {
  if (on_real_axis(t) && t.real() >= -kCutTolerance)
    throw DomainError("stieltjes_mu: t lies on the support [0, inf)");
  const ComplexPoint h = 1.0 + t;
  if (std::abs(h) < 0.25) {
    // -1/(1+t) + 1/(t log(-t)) = sum_{p>=0} m_{p+1} (1+t)^p
    const auto& m = nu_moments();
    ComplexPoint acc = 0;
    for (unsigned p = kSeriesTerms; p-- > 0;) acc = acc * h + m[p + 1];
    return acc;
  }
  return -1.0 / h + 1.0 / (t * std::log(-t));
}

double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol) {
  using boost::math::quadrature::gauss_kronrod;
  double error = 0;
  double l1 = 0;
  const double value = gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-12, &error, &l1);
  if (error > abs_tol)
    throw std::runtime_error(fmt::format("quadrature error estimate {:.3g} exceeds {:.3g}", error, abs_tol));
  return value;
}

double mu_mass_by_quadrature(double a, double b) {
  if (!(a >= 0 && a < b)) throw std::invalid_argument("mu_mass_by_quadrature: need 0 <= a < b");
  // Under s = log t the density becomes the Cauchy density 1/(s^2 + pi^2).
  const double lo = a == 0 ? -std::numeric_limits<double>::infinity() : std::log(a);
  const double hi = std::isinf(b) ? std::numeric_limits<double>::infinity() : std::log(b);
  return integrate([](double s) { return 1 / (s * s + kPi * kPi); }, lo, hi);
}

double inverse_stieltjes_mass(double a, double b, double eps) {
  if (!(a > 0 && a <= b)) throw std::invalid_argument("inverse_stieltjes_mass: need 0 < a <= b");
  if (!(eps > 0)) throw std::invalid_argument("inverse_stieltjes_mass: eps must be positive");
  if (a == b) return 0;
  auto im_s = [eps](double lambda) { return stieltjes_mu({lambda, eps}).imag() / kPi; };
  return integrate(im_s, a, b);
}

std::vector<double> log_grid(double t_min, double t_max, std::size_t points) {
  if (!(t_min > 0 && t_min < t_max) || points < 2)
    throw std::invalid_argument("log_grid: need 0 < t_min < t_max and at least two points");
  std::vector<double> grid(points);
  const double l0 = std::log10(t_min);
  const double span = std::log10(t_max) - l0;
  const double last = static_cast<double>(points - 1);
  for (std::size_t i = 0; i < points; ++i) grid[i] = std::pow(10.0, l0 + span * static_cast<double>(i) / last);
  grid.front() = t_min;
  grid.back() = t_max;
  return grid;
}

void write_law_csv(std::ostream& out, std::span<const double> grid) {
  out << "t,density,cdf\n";
  for (double t : grid) out << fmt::format("{:.17g},{:.17g},{:.17g}\n", t, density_mu(t), cdf_mu(t));
}

}  // namespace eulerpoly
