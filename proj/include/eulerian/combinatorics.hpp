#pragma once

// Eulerian, Stirling and Nörlund numbers in exact arithmetic, and checkers
// for the identities that tie them together.

#include "eulerian/rational.hpp"

#include <cstddef>
#include <vector>

namespace eulerpoly {

/// A(n, k): permutations of {1..n} with exactly k-1 descents.
/// Zero outside 1 <= k <= n. Requires n >= 1.
Integer eulerian(unsigned n, long k);

/// Row [A(n,1), ..., A(n,n)].
std::vector<Integer> eulerian_row(unsigned n);

/// S(n, k), set partitions of an n-set into k blocks, with S(0,0) = 1 and
/// S(n,0) = 0 for n >= 1. Zero for k < 0 or k > n.
Integer stirling2(unsigned n, long k);

/// Unsigned Stirling numbers of the first kind, c(n, k): permutations of
/// n elements with k cycles.
Integer stirling1(unsigned n, long k);

/// Immutable lower-triangular table of S(i, j) for 0 <= j <= i <= rows.
/// Build once and share between threads when many lookups are needed.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned max_n);

  unsigned max_n() const { return max_n_; }
  /// S(n, k); zero outside the triangle. n must not exceed max_n().
  const Integer& operator()(unsigned n, long k) const;

 private:
  unsigned max_n_;
  std::vector<std::vector<Integer>> rows_;
  Integer zero_{0};
};

/// N_p = ∫_0^1 (x-1)(x-2)...(x-p) dx, by expanding the product and
/// integrating monomials. N_0 = 1.
Rational norlund_integral(unsigned p);

/// [N_0, ..., N_max_p] via norlund_integral.
std::vector<Rational> norlund_numbers(unsigned max_p);

/// Both sides of an exact identity instance.
struct IdentityCheck {
  bool holds = false;
  Rational lhs;
  Rational rhs;
};

/// sum_{i=0}^{n-p} C(p+i-1, i) S(n, p+i) N_i  ==  (p/n) S(n, p),
/// for 1 <= p <= n. Throws std::invalid_argument outside that range.
IdentityCheck verify_stirling_norlund(unsigned n, unsigned p);

/// Same check against caller-supplied tables; lets suites share one
/// StirlingTable and one Nörlund list. Needs stirling.max_n() >= n and
/// norlund.size() > n - p.
IdentityCheck verify_stirling_norlund(unsigned n, unsigned p, const StirlingTable& stirling,
                                      const std::vector<Rational>& norlund);

/// sum_{k=p}^{n} C(k, p) A(n, k)  ==  (n-p)! S(n+1, n-p+1), for 0 <= p <= n.
IdentityCheck verify_eulerian_stirling_sum(unsigned n, unsigned p);

}  // namespace eulerpoly
