#include "eulerian/combinatorics.hpp"
#include "eulerian/measures.hpp"
#include "eulerian/series.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace eulerpoly;

TEST_CASE("rational text form") {
  CHECK(to_string(make_rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(parse_rational("251/30") == make_rational(251, 30));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("0.125") == make_rational(1, 8));
  CHECK(parse_rational("1e-30") == pow10(-30));
  CHECK(parse_rational("2.5E2") == Rational(250));
  CHECK(parse_rational(to_string(make_rational(-475, 12))) == make_rational(-475, 12));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("to_double rounds to nearest") {
  CHECK(to_double(make_rational(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(make_rational(2, 3)) == 2.0 / 3.0);
  CHECK(to_double(pow10(-30)) == 1e-30);
}

TEST_CASE("eulerian examples") {
  CHECK(eulerian(1, 1) == 1);
  CHECK(eulerian(3, 2) == 4);
  CHECK(eulerian(5, 2) == eulerian(5, 4));
  CHECK(eulerian(4, 0) == 0);
  CHECK(eulerian(4, 5) == 0);
  Integer sum = 0;
  for (long k = 1; k <= 4; ++k) sum += eulerian(4, k);
  CHECK(sum == 24);
  CHECK_THROWS(eulerian(0, 1));
}

TEST_CASE("eulerian rows are symmetric and sum to n!") {
  for (unsigned n = 1; n <= 30; ++n) {
    const auto row = eulerian_row(n);
    Integer sum = 0;
    for (unsigned k = 1; k <= n; ++k) {
      CHECK(row[k - 1] == row[n - k]);
      sum += row[k - 1];
    }
    CHECK(sum == factorial(n));
  }
}

TEST_CASE("eulerian numbers match descent enumeration") {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto counts = oracle::descent_counts(n);
    for (unsigned k = 1; k <= n; ++k) CHECK(eulerian(n, k) == Integer(static_cast<unsigned long>(counts[k - 1])));
  }
}

TEST_CASE("stirling2 examples and conventions") {
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
  CHECK(stirling2(3, 2) == 3);
  CHECK(stirling2(3, 4) == 0);
  CHECK(stirling2(3, -1) == 0);
}

TEST_CASE("stirling2 matches set-partition enumeration") {
  const StirlingTable table(10);
  for (unsigned n = 0; n <= 10; ++n) {
    const auto counts = oracle::partition_counts(n);
    for (unsigned k = 0; k <= n; ++k) {
      CHECK(stirling2(n, k) == Integer(static_cast<unsigned long>(counts[k])));
      CHECK(table(n, k) == stirling2(n, k));
    }
  }
  CHECK_THROWS_AS(table(11, 1), std::out_of_range);
}

TEST_CASE("stirling1 sums to n!") {
  for (unsigned n = 0; n <= 12; ++n) {
    Integer sum = 0;
    for (unsigned k = 0; k <= n; ++k) sum += stirling1(n, k);
    CHECK(sum == factorial(n));
  }
  CHECK(stirling1(4, 2) == 11);
}

TEST_CASE("norlund integral examples") {
  CHECK(norlund_integral(0) == 1);
  CHECK(norlund_integral(1) == make_rational(-1, 2));
  CHECK(norlund_integral(2) == make_rational(5, 6));
  CHECK(norlund_integral(4) == make_rational(251, 30));
  CHECK(norlund_integral(5) == make_rational(-475, 12));
}

TEST_CASE("norlund integral agrees with the signed first-kind Stirling expansion") {
  // x(x-1)...(x-p) = sum_k s(p+1,k) x^k, so N_p = sum_{k>=1} s(p+1,k) / k
  for (unsigned p = 0; p <= 40; ++p) {
    Rational oracle = 0;
    for (unsigned k = 1; k <= p + 1; ++k) {
      Rational term = make_rational(stirling1(p + 1, k), Integer(k));
      oracle += (p + 1 - k) % 2 == 0 ? term : Rational(-term);
    }
    CHECK(norlund_integral(p) == oracle);
  }
}

TEST_CASE("norlund signs alternate") {
  const auto n = norlund_numbers(40);
  for (unsigned p = 1; p <= 40; ++p) CHECK(sign(n[p]) == (p % 2 == 0 ? 1 : -1));
}

TEST_CASE("norlund three routes agree") {
  const auto integral = norlund_numbers(40);
  const auto egf = norlund_from_egf(40);
  const auto sums = exact_power_sums(40, 40);
  for (unsigned p = 0; p <= 40; ++p) {
    CHECK(integral[p] == egf[p]);
    if (p >= 1) {
      // m_p / (n+1) = (-1)^p N_p / p!
      Rational implied = sums[p - 1] / Rational(41) * Rational(factorial(p));
      if (p % 2 == 1) implied = -implied;
      CHECK(integral[p] == implied);
    }
  }
}

TEST_CASE("stirling-norlund identity") {
  auto c = verify_stirling_norlund(1, 1);
  CHECK(c.holds);
  CHECK(c.lhs == 1);
  CHECK(c.rhs == 1);
  CHECK(verify_stirling_norlund(5, 2).holds);
  CHECK(verify_stirling_norlund(40, 7).holds);
  CHECK_THROWS_AS(verify_stirling_norlund(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_stirling_norlund(3, 4), std::invalid_argument);
}

TEST_CASE("stirling-norlund identity for all p <= n <= 40") {
  const StirlingTable table(40);
  const auto norlund = norlund_numbers(40);
  for (unsigned n = 1; n <= 40; ++n)
    for (unsigned p = 1; p <= n; ++p) CHECK(verify_stirling_norlund(n, p, table, norlund).holds);
}

TEST_CASE("stirling-norlund identity rejects a corrupted Nörlund list") {
  const StirlingTable table(6);
  auto norlund = norlund_numbers(6);
  norlund[2] += 1;
  CHECK_FALSE(verify_stirling_norlund(6, 2, table, norlund).holds);
}

TEST_CASE("eulerian-stirling sum") {
  auto c = verify_eulerian_stirling_sum(2, 1);
  CHECK(c.holds);
  CHECK(c.lhs == 3);
  CHECK(c.rhs == 3);
  c = verify_eulerian_stirling_sum(2, 0);
  CHECK(c.holds);
  CHECK(c.lhs == 2);
  c = verify_eulerian_stirling_sum(2, 2);
  CHECK(c.holds);
  CHECK(c.lhs == 1);
  for (unsigned n = 1; n <= 25; ++n)
    for (unsigned p = 0; p <= n; ++p) CHECK(verify_eulerian_stirling_sum(n, p).holds);
}

TEST_CASE("the 1/(n-p+1)! coefficient would not match") {
  const auto c = verify_eulerian_stirling_sum(2, 1);
  CHECK(c.lhs != make_rational(stirling2(3, 2), factorial(2)));
}
