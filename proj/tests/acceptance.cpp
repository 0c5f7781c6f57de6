// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "commands.hpp"
#include "eulerian/combinatorics.hpp"
#include "eulerian/limit_law.hpp"
#include "eulerian/measures.hpp"
#include "eulerian/roots.hpp"
#include "eulerian/series.hpp"

#include "oracles.hpp"

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace eulerpoly;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!v.pass) ++failures;
  std::cout << fmt::format("[{}] {:>2}. {} ({:.2f} s): {}\n", v.pass ? "PASS" : "FAIL", id, name, secs, v.detail)
            << std::flush;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> to_doubles(const std::vector<RootInterval>& v, double sign = 1) {
  std::vector<double> out;
  for (const auto& r : v) out.push_back(sign * to_double(r.midpoint()));
  return out;
}

}  // namespace

int main() {
  criterion(1, "moment identity, exact, 1 <= p <= n <= 60", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 60; ++n) {
      const auto sums = exact_power_sums(n, n);
      for (unsigned p = 1; p <= n; ++p, ++checked)
        if (sums[p - 1] / Rational(n + 1) != normalized_moment(p))
          return Verdict{false, fmt::format("mismatch at n={} p={}", n, p)};
    }
    const double secs = elapsed_since(t0);
    return Verdict{secs < 60, fmt::format("{} instances exact, {:.2f} s (limit 60 s)", checked, secs)};
  });

  criterion(2, "first five normalized moments", [] {
    const std::vector<Rational> expected{make_rational(1, 2), make_rational(5, 12), make_rational(3, 8),
                                         make_rational(251, 720), make_rational(95, 288)};
    std::string got;
    bool ok = true;
    for (unsigned p = 1; p <= 5; ++p) {
      const Rational m = normalized_moment(p);
      ok = ok && m == expected[p - 1];
      got += (p > 1 ? ", " : "") + to_string(m);
    }
    return Verdict{ok, got};
  });

  criterion(3, "Stirling-Nörlund identity, exact, 1 <= p <= n <= 40", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::size_t checked = 0;
    for (unsigned n = 1; n <= 40; ++n)
      for (unsigned p = 1; p <= n; ++p, ++checked)
        if (!verify_stirling_norlund(n, p).holds) return Verdict{false, fmt::format("fails at n={} p={}", n, p)};
    const double secs = elapsed_since(t0);
    return Verdict{secs < 30, fmt::format("{} instances exact, {:.2f} s (limit 30 s)", checked, secs)};
  });

  criterion(4, "Nörlund numbers: integral, EGF (order 40) and moment routes agree for p <= 40", [] {
    const auto integral = norlund_numbers(40);
    const auto egf = norlund_from_egf(40);
    const auto sums = exact_power_sums(40, 40);
    for (unsigned p = 0; p <= 40; ++p) {
      if (integral[p] != egf[p]) return Verdict{false, fmt::format("EGF route differs at p={}", p)};
      if (p == 0) continue;
      Rational implied = sums[p - 1] / Rational(41) * Rational(factorial(p));
      if (p % 2 == 1) implied = -implied;
      if (integral[p] != implied) return Verdict{false, fmt::format("moment route differs at p={}", p)};
    }
    return Verdict{true, "41 values, three routes identical; N_40 = " + to_string(integral[40])};
  });

  criterion(5, "root pipeline at n = 100", [] {
    const auto t0 = std::chrono::steady_clock::now();
    const auto roots = eulerian_roots(100);
    const double secs = elapsed_since(t0);
    if (roots.u.size() != 100) return Verdict{false, fmt::format("{} roots isolated", roots.u.size())};
    const auto reports = numeric_moments(EmpiricalMeasure(to_doubles(roots.u)), 10, Rational(101));
    double worst = 0;
    for (const auto& r : reports) worst = std::max(worst, r.abs_error);
    Rational sum = 0;
    for (const auto& x : roots.x) sum += x.midpoint();
    const Rational expected = -(Rational(Integer(1) << 100)) + 101;
    const double rel = to_double(abs((sum - expected) / expected));
    const bool ok = worst <= 1e-9 && rel <= 1e-9;
    return Verdict{ok, fmt::format("100 roots; max moment error {:.3g} (<= 1e-9); x-sum relative error {:.3g} "
                                   "(<= 1e-9); {:.2f} s",
                                   worst, rel, secs)};
  });

  criterion(6, "u <-> 1-u reflection at n = 10, 50, 100 within 1e-12", [] {
    double worst = 0;
    for (unsigned n : {10u, 50u, 100u}) {
      const auto u = to_doubles(eulerian_roots(n).u);
      for (std::size_t i = 0; i + 1 < n; ++i) worst = std::max(worst, std::abs(u[i] + u[n - 2 - i] - 1));
    }
    return Verdict{worst <= 1e-12, fmt::format("max |u_i + u_(n-1-i) - 1| = {:.3g}", worst)};
  });

  criterion(7, "figure --n 10,100: KS(mu_100) < KS(mu_10), monotone CDF columns", [] {
    const char* argv[] = {"eulerian-roots", "figure", "--n", "10,100"};
    std::ostringstream out, err;
    const int code = cli::run(4, argv, out, err);
    if (code != 0) return Verdict{false, "figure exited with " + std::to_string(code)};
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    if (line != "t,cdf_limit,cdf_n10,cdf_n100") return Verdict{false, "unexpected header " + line};
    double prev[3] = {0, 0, 0}, grid_sup[2] = {0, 0};
    bool monotone = true, half_at_one = false;
    std::size_t rows = 0;
    while (std::getline(in, line)) {
      double v[4];
      std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]);
      for (int c = 0; c < 3; ++c) {
        monotone = monotone && v[c + 1] >= prev[c];
        prev[c] = v[c + 1];
      }
      grid_sup[0] = std::max(grid_sup[0], std::abs(v[2] - v[1]));
      grid_sup[1] = std::max(grid_sup[1], std::abs(v[3] - v[1]));
      if (v[0] == 1.0) half_at_one = v[1] == 0.5;
      ++rows;
    }
    const double ks10 = ks_distance(EmpiricalMeasure(to_doubles(eulerian_roots(10).x, -1)), cdf_mu);
    const double ks100 = ks_distance(EmpiricalMeasure(to_doubles(eulerian_roots(100).x, -1)), cdf_mu);
    const bool ok = rows == 601 && monotone && half_at_one && ks100 < ks10 && grid_sup[1] < grid_sup[0];
    return Verdict{ok, fmt::format("KS n=10 {:.6f}, n=100 {:.6f}; on-grid sup {:.6f} vs {:.6f}; {} rows, monotone={}",
                                   ks10, ks100, grid_sup[0], grid_sup[1], rows, monotone)};
  });

  criterion(8, "closed-form CDF vs quadrature of the density within 1e-10", [] {
    double worst = 0;
    for (double t : {0.5, 1.0, 2.0, 10.0}) {
      const double quad = mu_mass_by_quadrature(0, 1e-6) + mu_mass_by_quadrature(1e-6, t);
      worst = std::max(worst, std::abs(cdf_mu(t) - quad));
    }
    return Verdict{worst <= 1e-10 && cdf_mu(1) == 0.5,
                   fmt::format("max deviation {:.3g}; cdf_mu(1) = {:.17g}", worst, cdf_mu(1))};
  });

  criterion(9, "inverse Stieltjes mass of [0.5, 2] converges as eps -> 0", [] {
    const double target = cdf_mu(2) - cdf_mu(0.5);
    std::vector<double> errors;
    for (double eps : {1e-2, 1e-3, 1e-4}) errors.push_back(std::abs(inverse_stieltjes_mass(0.5, 2, eps) - target));
    const bool decreasing = errors[0] > errors[1] && errors[1] > errors[2];
    return Verdict{decreasing && errors[2] <= 1e-3,
                   fmt::format("errors {:.3g}, {:.3g}, {:.3g} (final <= 1e-3)", errors[0], errors[1], errors[2])};
  });

  criterion(10, "brute force: descents for n <= 8, set partitions for n <= 10", [] {
    for (unsigned n = 1; n <= 8; ++n) {
      const auto counts = oracle::descent_counts(n);
      for (unsigned k = 1; k <= n; ++k)
        if (eulerian(n, k) != Integer(static_cast<unsigned long>(counts[k - 1])))
          return Verdict{false, fmt::format("A({},{}) differs", n, k)};
    }
    for (unsigned n = 0; n <= 10; ++n) {
      const auto counts = oracle::partition_counts(n);
      for (unsigned k = 0; k <= n; ++k)
        if (stirling2(n, k) != Integer(static_cast<unsigned long>(counts[k])))
          return Verdict{false, fmt::format("S({},{}) differs", n, k)};
    }
    return Verdict{true, "all Eulerian and Stirling values match enumeration"};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASSED\n" : fmt::format("{} CRITERIA FAILED\n", failures));
  return failures == 0 ? 0 : 1;
}
