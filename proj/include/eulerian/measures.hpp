#pragma once

// Empirical root measures: exact power sums of the u-roots, numeric
// moments, empirical CDFs, and the KS distance to a reference CDF.

#include "eulerian/rational.hpp"

#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace eulerpoly {

/// Uniform atomic probability measure (1/n on each atom).
class EmpiricalMeasure {
 public:
  /// Sorts the atoms. Throws std::invalid_argument when empty or any atom is NaN.
  explicit EmpiricalMeasure(std::vector<double> atoms);

  std::size_t size() const { return atoms_.size(); }
  std::span<const double> atoms() const { return atoms_; }

 private:
  std::vector<double> atoms_;
};

struct MomentReport {
  unsigned p = 0;
  std::optional<Rational> exact_value;  // normalized exact moment, when known
  double numeric_value = 0;
  Rational reference_value;  // (-1)^p N_p / p!
  double abs_error = 0;      // |numeric_value - reference_value|
};

/// [m_1, ..., m_p_max] with m_p = sum_k u_{n,k}^p, from Newton's identities
/// applied to e_{n,p} = (n-p)!/n! S(n+1, n-p+1). Requires 1 <= p_max <= n.
std::vector<Rational> exact_power_sums(unsigned n, unsigned p_max);

/// (-1)^p N_p / p!, the limit moments.
Rational normalized_moment(unsigned p);

/// p-th report carries sum(atoms^p) / rescale against (-1)^p N_p / p!.
/// Requires p_max >= 1 and rescale > 0.
std::vector<MomentReport> numeric_moments(const EmpiricalMeasure& m, unsigned p_max, const Rational& rescale);

/// Fraction of atoms <= t.
double empirical_cdf(const EmpiricalMeasure& m, double t);

/// sup_i max(|F(a_i) - i/n|, |F(a_i) - (i-1)/n|) over sorted atoms a_i.
double ks_distance(const EmpiricalMeasure& m, const std::function<double(double)>& cdf);

/// CSV header "n,p,exact,numeric,reference,abs_error"; exact is empty when
/// the report carries none.
void write_moments_csv_header(std::ostream& out);
void write_moments_csv(std::ostream& out, unsigned n, const std::vector<MomentReport>& reports);

}  // namespace eulerpoly
