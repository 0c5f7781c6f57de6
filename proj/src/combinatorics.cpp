#include "eulerian/combinatorics.hpp"

#include <stdexcept>
#include <string>

namespace eulerpoly {

namespace {

// A(m,k) = k A(m-1,k) + (m-k+1) A(m-1,k-1), with A(1,1) = 1.
std::vector<Integer> eulerian_row_checked(unsigned n) {
  if (n == 0) throw std::invalid_argument("eulerian: n must be >= 1");
  std::vector<Integer> row{1};
  for (unsigned m = 2; m <= n; ++m) {
    std::vector<Integer> next(m);
    for (unsigned k = 1; k <= m; ++k) {
      Integer v = 0;
      if (k <= m - 1) v += Integer(k) * row[k - 1];
      if (k >= 2) v += Integer(m - k + 1) * row[k - 2];
      next[k - 1] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

std::vector<Integer> stirling2_row(unsigned n) {
  std::vector<Integer> row{1};  // S(0, 0)
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, Integer(0));
    for (unsigned k = 1; k <= m; ++k) {
      if (k <= m - 1) next[k] += Integer(k) * row[k];
      next[k] += row[k - 1];
    }
    row = std::move(next);
  }
  return row;
}

}  // namespace

Integer eulerian(unsigned n, long k) {
  if (n == 0) throw std::invalid_argument("eulerian: n must be >= 1");
  if (k < 1 || k > static_cast<long>(n)) return 0;
  return eulerian_row_checked(n)[static_cast<std::size_t>(k - 1)];
}

std::vector<Integer> eulerian_row(unsigned n) { return eulerian_row_checked(n); }

Integer stirling2(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  return stirling2_row(n)[static_cast<std::size_t>(k)];
}

Integer stirling1(unsigned n, long k) {
  if (k < 0 || k > static_cast<long>(n)) return 0;
  // c(m,k) = (m-1) c(m-1,k) + c(m-1,k-1)
  std::vector<Integer> row{1};
  for (unsigned m = 1; m <= n; ++m) {
    std::vector<Integer> next(m + 1, Integer(0));
    for (unsigned j = 1; j <= m; ++j) {
      if (j <= m - 1) next[j] += Integer(m - 1) * row[j];
      next[j] += row[j - 1];
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

StirlingTable::StirlingTable(unsigned max_n) : max_n_(max_n) {
  rows_.reserve(max_n + 1);
  rows_.push_back({Integer(1)});
  for (unsigned m = 1; m <= max_n; ++m) {
    const auto& prev = rows_.back();
    std::vector<Integer> next(m + 1, Integer(0));
    for (unsigned k = 1; k <= m; ++k) {
      if (k <= m - 1) next[k] += Integer(k) * prev[k];
      next[k] += prev[k - 1];
    }
    rows_.push_back(std::move(next));
  }
}

const Integer& StirlingTable::operator()(unsigned n, long k) const {
  if (n > max_n_) throw std::out_of_range("StirlingTable: n=" + std::to_string(n) + " exceeds table");
  if (k < 0 || k > static_cast<long>(n)) return zero_;
  return rows_[n][static_cast<std::size_t>(k)];
}

Rational norlund_integral(unsigned p) {
  // coefficients of (x-1)(x-2)...(x-p), ascending degree
  std::vector<Integer> poly{1};
  for (unsigned j = 1; j <= p; ++j) {
    std::vector<Integer> next(poly.size() + 1, Integer(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] += poly[i];
      next[i] -= Integer(j) * poly[i];
    }
    poly = std::move(next);
  }
  Rational integral = 0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    integral += make_rational(poly[i], Integer(static_cast<unsigned long>(i + 1)));
  return integral;
}

std::vector<Rational> norlund_numbers(unsigned max_p) {
  std::vector<Rational> out;
  out.reserve(max_p + 1);
  for (unsigned p = 0; p <= max_p; ++p) out.push_back(norlund_integral(p));
  return out;
}

IdentityCheck verify_stirling_norlund(unsigned n, unsigned p, const StirlingTable& stirling,
                                      const std::vector<Rational>& norlund) {
  if (p < 1 || p > n) throw std::invalid_argument("verify_stirling_norlund: need 1 <= p <= n");
  if (stirling.max_n() < n || norlund.size() <= n - p)
    throw std::invalid_argument("verify_stirling_norlund: tables too small");
  IdentityCheck check;
  for (unsigned i = 0; i <= n - p; ++i) {
    Rational term(binomial(p + i - 1, i) * stirling(n, p + i));
    check.lhs += term * norlund[i];
  }
  check.rhs = make_rational(Integer(p) * stirling(n, p), Integer(n));
  check.holds = check.lhs == check.rhs;
  return check;
}

IdentityCheck verify_stirling_norlund(unsigned n, unsigned p) {
  if (p < 1 || p > n) throw std::invalid_argument("verify_stirling_norlund: need 1 <= p <= n");
  return verify_stirling_norlund(n, p, StirlingTable(n), norlund_numbers(n - p));
}

IdentityCheck verify_eulerian_stirling_sum(unsigned n, unsigned p) {
  if (n < 1 || p > n) throw std::invalid_argument("verify_eulerian_stirling_sum: need 0 <= p <= n");
  const auto row = eulerian_row(n);
  Integer lhs = 0;
  for (unsigned k = std::max(p, 1u); k <= n; ++k) lhs += binomial(k, p) * row[k - 1];
  IdentityCheck check;
  check.lhs = lhs;
  check.rhs = factorial(n - p) * stirling2(n + 1, n - p + 1);
  check.holds = check.lhs == check.rhs;
  return check;
}

}  // namespace eulerpoly
