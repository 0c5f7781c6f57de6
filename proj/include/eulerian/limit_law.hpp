#pragma once

// The limit laws: nu on [0, 1] (the u-roots) and mu on [0, inf), the law
// of exp(pi Z) for a standard Cauchy Z (the negated x-roots).

#include "eulerian/rational.hpp"

#include <complex>
#include <functional>
#include <numbers>
#include <ostream>
#include <span>
#include <stdexcept>
#include <vector>

namespace eulerpoly {

using ComplexPoint = std::complex<double>;

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr double kPi = std::numbers::pi;

/// 1 / (t (log^2 t + pi^2)) for t > 0, else 0.
double density_mu(double t);

/// 1/2 + atan(log t / pi) / pi for t > 0, else 0; 1 at +inf.
double cdf_mu(double t);

/// exp(pi tan(pi (q - 1/2))), the inverse of cdf_mu on (0, 1).
double quantile_mu(double q);

/// (-1)^p N_p / p!, exact.
Rational moment_nu(unsigned p);

/// int_0^1 nu(du) / (u - t) = 1 / (t (t-1) log(1 - 1/t)), principal log.
/// Throws DomainError for t on the real segment [0, 1].
ComplexPoint stieltjes_nu(ComplexPoint t);

/// int_0^inf mu(ds) / (s - t) = -1/(1+t) + 1/(t log(-t)), principal log.
/// The removable singularity at t = -1 is evaluated by its moment series.
/// Throws DomainError for t on the real ray [0, inf).
ComplexPoint stieltjes_mu(ComplexPoint t);

/// (1/pi) int_a^b Im stieltjes_mu(lambda + i eps) d lambda. Requires
/// 0 < a <= b and eps > 0; returns 0 when a == b.
double inverse_stieltjes_mass(double a, double b, double eps);

/// Adaptive Gauss-Kronrod quadrature of f over [a, b]; either end may be
/// infinite. Throws std::runtime_error if the error estimate exceeds
/// abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b, double abs_tol = 1e-12);

/// mu([a, b]) by quadrature of density_mu after s = log t, 0 <= a < b <= inf.
double mu_mass_by_quadrature(double a, double b);

/// points log-spaced values from t_min to t_max inclusive.
std::vector<double> log_grid(double t_min, double t_max, std::size_t points);

/// CSV "t,density,cdf" with 17 significant digits.
void write_law_csv(std::ostream& out, std::span<const double> grid);

}  // namespace eulerpoly
