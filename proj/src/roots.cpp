#include "eulerian/roots.hpp"

#include "eulerian/combinatorics.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace eulerpoly {

namespace {

using IntPoly = std::vector<Integer>;  // ascending, no trailing zeros

Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IntPoly& p) {
  const Integer g = content(p);
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Positive integer multiple of p with coprime coefficients.
IntPoly primitive_integer(const DensePoly& p) {
  Integer l = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  IntPoly out;
  out.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    Integer v;
    mpz_divexact(v.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    out.push_back(v * c.get_num());
  }
  make_primitive(out);
  return out;
}

IntPoly derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  return d;
}

void strip(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Pseudo-remainder: lc(b)^s a = q b + r with s the number of reduction
// steps taken. Returns r and whether lc(b)^s is negative.
std::pair<IntPoly, bool> pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  unsigned steps = 0;
  Integer t;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const Integer lead = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), b[j].get_mpz_t());
      a[shift + j] -= t;
    }
    strip(a);
    ++steps;
    // keep the size in check without changing the sign
    if (steps % 2 == 0) make_primitive(a);
  }
  const bool negative_factor = sgn(lb) < 0 && steps % 2 == 1;
  return {std::move(a), negative_factor};
}

// sign of sum c_i a^i b^{d-i}, which equals sign(p(a/b)) for b > 0
int sign_homogeneous(const IntPoly& p, const Integer& num, const Integer& den) {
  if (p.empty()) return 0;
  Integer acc = p.back();
  Integer den_pow = 1;
  Integer t;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    den_pow *= den;
    acc *= num;
    mpz_mul(t.get_mpz_t(), p[i].get_mpz_t(), den_pow.get_mpz_t());
    acc += t;
  }
  return sgn(acc);
}

int sign_at_int(const IntPoly& p, const Rational& x) { return sign_homogeneous(p, x.get_num(), x.get_den()); }

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  for (auto& th : pool) th.join();
}

// Interior points tried, in order, when the midpoint of an interval is a
// root: 7/16, 9/16, 6/16, ..., then 31/64, 33/64, ... One of them must
// miss the finitely many roots.
Rational split_fraction(long k) {
  long denom_log = 4;
  long span = 7;  // candidates per side at this denominator
  while (k > 2 * span) {
    k -= 2 * span;
    denom_log += 2;
    span = (1L << (denom_log - 1)) - 1;
  }
  const long half = 1L << (denom_log - 1);
  const long offset = (k + 1) / 2;
  return make_rational(k % 2 == 1 ? half - offset : half + offset, 1L << denom_log);
}

// A point strictly inside (a, b) where the chain's first polynomial is nonzero.
Rational split_point(const SturmSequence& sturm, const Rational& a, const Rational& b) {
  const Rational w = b - a;
  Rational mid = a + w / 2;
  for (long k = 1; sturm.sign_at(mid) == 0; ++k) mid = a + w * split_fraction(k);
  return mid;
}

std::string float17(double v) { return fmt::format("{:.17g}", v); }

}  // namespace

SturmSequence::SturmSequence(const DensePoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  chain_.push_back(primitive_integer(p));
  if (p.degree() == 0) return;
  IntPoly d = derivative(chain_[0]);
  make_primitive(d);
  chain_.push_back(std::move(d));
  while (chain_.back().size() > 1) {
    auto [r, negative_factor] = pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.empty()) throw std::domain_error("polynomial is not squarefree");
    make_primitive(r);
    // next = -rem = -r / lc^s, up to a positive factor
    if (!negative_factor)
      for (auto& c : r) c = -c;
    chain_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = sign_at_int(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::sign_at(const Rational& x) const { return sign_at_int(chain_.front(), x); }

int sign_at(const DensePoly& p, const Rational& x) {
  if (p.is_zero()) return 0;
  return sign_at_int(primitive_integer(p), x);
}

std::vector<RootInterval> sturm_isolate(const DensePoly& p, const Rational& lo, const Rational& hi,
                                        std::optional<std::size_t> expected_count) {
  if (!(lo < hi)) throw std::invalid_argument("sturm_isolate: need lo < hi");
  if (p.is_zero()) throw std::domain_error("sturm_isolate: zero polynomial");

  DensePoly q = p;
  std::optional<RootInterval> at_hi;
  if (q(hi) == 0) {
    q = deflate(q, hi).first;
    at_hi = RootInterval::exact_root(hi);
  }
  const bool dropped_lo = q(lo) == 0;
  if (dropped_lo) q = deflate(q, lo).first;

  std::vector<RootInterval> out;
  if (q.degree() >= 1) {
    const SturmSequence sturm(q);
    // interval with its variation counts at both ends
    struct Pending {
      Rational a, b;
      int va, vb;
    };
    std::vector<Pending> stack{{lo, hi, sturm.variations(lo), sturm.variations(hi)}};
    while (!stack.empty()) {
      Pending cur = std::move(stack.back());
      stack.pop_back();
      const int roots = cur.va - cur.vb;
      if (roots <= 0) continue;
      if (roots == 1) {
        // keep endpoints off roots of p that were deflated away
        while ((dropped_lo && cur.a == lo) || (at_hi && cur.b == hi)) {
          const Rational mid = split_point(sturm, cur.a, cur.b);
          const int vm = sturm.variations(mid);
          if (cur.va - vm == 1) {
            cur.b = mid;
            cur.vb = vm;
          } else {
            cur.a = mid;
            cur.va = vm;
          }
        }
        out.push_back({cur.a, cur.b, std::nullopt});
        continue;
      }
      // split away from a root of q so both halves keep nonzero endpoints
      Rational mid = split_point(sturm, cur.a, cur.b);
      const int vm = sturm.variations(mid);
      // right half first so the left half is processed first
      stack.push_back({mid, cur.b, vm, cur.vb});
      stack.push_back({std::move(cur.a), std::move(mid), cur.va, vm});
    }
  }
  if (at_hi) out.push_back(*at_hi);
  std::sort(out.begin(), out.end(), [](const RootInterval& l, const RootInterval& r) { return l.lo < r.lo; });

  if (expected_count && out.size() != *expected_count)
    throw RootCountMismatch("Sturm count " + std::to_string(out.size()) + " differs from expected " +
                            std::to_string(*expected_count));
  return out;
}

namespace {

// Smallest-denominator rational in [lo, hi], 0 <= lo < hi, by continued fractions.
Rational simplest_between(Rational lo, Rational hi) {
  Integer fl = lo.get_num() / lo.get_den();
  if (fl * lo.get_den() == lo.get_num()) return lo;
  if (fl + 1 <= hi) return Rational(fl + 1);
  const Rational inner = simplest_between(1 / (hi - fl), 1 / (lo - fl));
  return fl + 1 / inner;
}

template <class Done>
RootInterval bisect_until(const IntPoly& p, RootInterval iv, Done&& done) {
  if (iv.exact) return iv;
  if (sign_at_int(p, iv.lo) == 0) return RootInterval::exact_root(iv.lo);
  if (sign_at_int(p, iv.hi) == 0) return RootInterval::exact_root(iv.hi);
  const int s_lo = sign_at_int(p, iv.lo);
  while (!done(iv)) {
    Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign_at_int(p, mid);
    if (s == 0) return RootInterval::exact_root(mid);
    if (s == s_lo)
      iv.lo = std::move(mid);
    else
      iv.hi = std::move(mid);
  }
  // rational roots with small denominators are never dyadic midpoints
  if (iv.lo >= 0) {
    Rational r = simplest_between(iv.lo, iv.hi);
    if (sign_at_int(p, r) == 0) return RootInterval::exact_root(std::move(r));
  }
  return iv;
}

}  // namespace

RootInterval refine_root(const DensePoly& p, const RootInterval& iv, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("refine_root: tol must be positive");
  return bisect_until(primitive_integer(p), iv, [&](const RootInterval& r) { return r.width() <= tol; });
}

RootInterval refine_root_unit_relative(const DensePoly& p, const RootInterval& iv, const Rational& tol) {
  if (tol <= 0) throw std::invalid_argument("refine_root_unit_relative: tol must be positive");
  if (iv.lo < 0 || iv.hi > 1) throw std::invalid_argument("refine_root_unit_relative: interval outside [0, 1]");
  return bisect_until(primitive_integer(p), iv, [&](const RootInterval& r) {
    const Rational gap = std::min(r.lo, Rational(1 - r.hi));
    return gap > 0 && r.width() <= tol * gap;
  });
}

std::vector<RootInterval> roots_x_from_u(const std::vector<RootInterval>& u_roots) {
  std::vector<RootInterval> out;
  out.reserve(u_roots.size());
  for (const auto& u : u_roots) {
    if (u.lo <= 0) throw std::domain_error("roots_x_from_u: u interval must lie in (0, 1]");
    auto map = [](const Rational& v) { return Rational(1 - 1 / v); };
    if (u.exact)
      out.push_back(RootInterval::exact_root(map(*u.exact)));
    else
      out.push_back({map(u.lo), map(u.hi), std::nullopt});
  }
  return out;
}

Rational eulerian_root_sum(unsigned n) {
  const DensePoly a = eulerian_poly(n);
  if (n == 1) return 0;
  return -a.coefficient(n - 1) / a.leading();
}

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EULERIAN_ROOTS_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

EulerianRoots eulerian_roots(unsigned n, const RootOptions& options) {
  if (n == 0) throw std::invalid_argument("eulerian_roots: n must be >= 1");
  const DensePoly r = u_poly(n);
  const auto isolated = sturm_isolate(r, Rational(0), Rational(1), n);

  EulerianRoots roots;
  roots.n = n;
  roots.u.resize(isolated.size());
  parallel_for(isolated.size(), resolve_thread_count(options.threads), [&](std::size_t i) {
    roots.u[i] = refine_root_unit_relative(r, isolated[i], options.tol);
  });
  roots.x = roots_x_from_u(roots.u);
  return roots;
}

void write_roots_csv_header(std::ostream& out) { out << "n,k,u_lo,u_hi,u_mid_float,x_mid_float,exact_flag\n"; }

void write_roots_csv(std::ostream& out, const EulerianRoots& roots) {
  for (std::size_t k = 0; k < roots.u.size(); ++k) {
    const auto& u = roots.u[k];
    const auto& x = roots.x[k];
    out << roots.n << ',' << (k + 1) << ',' << to_string(u.lo) << ',' << to_string(u.hi) << ','
        << float17(to_double(u.midpoint())) << ',' << float17(to_double(x.midpoint())) << ','
        << (u.exact ? 1 : 0) << '\n';
  }
}

}  // namespace eulerpoly
