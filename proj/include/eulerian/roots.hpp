#pragma once

// Certified real-root isolation (Sturm sequences over the integers) and
// refinement by exact-sign bisection.

#include "eulerian/polynomial.hpp"
#include "eulerian/rational.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace eulerpoly {

/// A closed interval [lo, hi] holding exactly one root of some polynomial.
/// When exact is set, lo == hi == *exact and the polynomial vanishes there.
struct RootInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;

  static RootInterval exact_root(const Rational& r) { return {r, r, r}; }
  Rational width() const { return hi - lo; }
  Rational midpoint() const { return exact ? *exact : Rational((lo + hi) / 2); }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

struct RootCountMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sign-variation counter for a polynomial P: the Sturm chain
/// P, P', -rem(P, P'), ... kept as primitive integer polynomials.
class SturmSequence {
 public:
  /// Throws std::domain_error if p is zero or not squarefree.
  explicit SturmSequence(const DensePoly& p);

  std::size_t size() const { return chain_.size(); }
  /// Sign variations of the chain at x, zeros skipped.
  int variations(const Rational& x) const;
  /// Distinct roots in (a, b], a < b.
  int count(const Rational& a, const Rational& b) const { return variations(a) - variations(b); }
  /// Sign of P(x).
  int sign_at(const Rational& x) const;

 private:
  std::vector<std::vector<Integer>> chain_;
};

/// Sign of p(x), computed on a primitive integer multiple of p.
int sign_at(const DensePoly& p, const Rational& x);

/// Isolates every root of p in (lo, hi]. Roots sitting exactly on lo or hi
/// are deflated first; one at hi is reported as an exact interval, one at
/// lo is outside the half-open range and dropped. Output is sorted and
/// pairwise disjoint. When expected_count is given and the Sturm count
/// differs, throws RootCountMismatch.
std::vector<RootInterval> sturm_isolate(const DensePoly& p, const Rational& lo, const Rational& hi,
                                        std::optional<std::size_t> expected_count = std::nullopt);

/// Bisects iv (dyadic midpoints, exact signs) until width <= tol. Exact
/// intervals pass through; hitting a root exactly yields an exact interval.
RootInterval refine_root(const DensePoly& p, const RootInterval& iv, const Rational& tol);

/// Like refine_root, but stops only once width <= tol * min(lo, 1 - hi),
/// i.e. the bracket is relatively tight both as u and as 1 - u. Needs iv
/// inside [0, 1]; an exact root at 0 or 1 passes through.
RootInterval refine_root_unit_relative(const DensePoly& p, const RootInterval& iv, const Rational& tol);

/// x = 1 - 1/u on each interval. The map is increasing on (0, 1], so
/// order is preserved. Throws std::domain_error if some lo <= 0.
std::vector<RootInterval> roots_x_from_u(const std::vector<RootInterval>& u_roots);

/// -A(n, n-1): the exact sum of the roots of A_n.
Rational eulerian_root_sum(unsigned n);

/// All roots of A_n, isolated in u-coordinates and mapped back.
struct EulerianRoots {
  unsigned n = 0;
  std::vector<RootInterval> u;  // sorted increasing, last is exactly 1
  std::vector<RootInterval> x;  // sorted increasing, last is exactly 0
};

struct RootOptions {
  Rational tol = pow10(-30);
  /// Worker threads for refinement; 0 reads EULERIAN_ROOTS_THREADS, and
  /// falls back to the hardware concurrency.
  unsigned threads = 0;
};

/// Isolates the n roots of u_poly(n) on (0, 1], refines each with
/// refine_root_unit_relative, and maps them to x. The result does not
/// depend on the thread count.
EulerianRoots eulerian_roots(unsigned n, const RootOptions& options = {});

/// Threads to use for a requested count (0 = EULERIAN_ROOTS_THREADS or auto).
unsigned resolve_thread_count(unsigned requested);

/// CSV: n,k,u_lo,u_hi,u_mid_float,x_mid_float,exact_flag
void write_roots_csv_header(std::ostream& out);
void write_roots_csv(std::ostream& out, const EulerianRoots& roots);

}  // namespace eulerpoly
