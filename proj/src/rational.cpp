#include "eulerian/rational.hpp"

#include <mpfr.h>

#include <cctype>
#include <stdexcept>

namespace eulerpoly {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& z) { return z.get_str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: " + std::string(s));
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
    return make_rational(num, den);
  }

  std::string_view mantissa = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = text.substr(0, e);
    Integer ez = parse_integer(text.substr(e + 1));
    if (!ez.fits_slong_p() || abs(ez) > 100000)
      throw std::invalid_argument("exponent out of range: " + std::string(text));
    exponent = ez.get_si();
  }

  bool negative = false;
  if (!mantissa.empty() && (mantissa.front() == '-' || mantissa.front() == '+')) {
    negative = mantissa.front() == '-';
    mantissa.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    auto whole = mantissa.substr(0, dot);
    auto frac = mantissa.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed decimal: " + std::string(text));
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(mantissa)) throw std::invalid_argument("malformed number: " + std::string(text));
    digits = std::string(mantissa);
  }
  Rational q(Integer(digits, 10));
  q *= pow10(exponent);
  return negative ? Rational(-q) : q;
}

Rational pow10(long e) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? make_rational(Integer(1), p) : Rational(p);
}

double to_double(const Rational& q) {
  mpfr_t r;
  mpfr_init2(r, 53);
  mpfr_set_q(r, q.get_mpq_t(), MPFR_RNDN);
  double d = mpfr_get_d(r, MPFR_RNDN);
  mpfr_clear(r);
  return d;
}

Integer factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

Rational pow(const Rational& base, unsigned e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational q;
  mpq_set_num(q.get_mpq_t(), num.get_mpz_t());
  mpq_set_den(q.get_mpq_t(), den.get_mpz_t());
  return q;  // already canonical: gcd(num, den) = 1 is preserved by powers
}

}  // namespace eulerpoly
