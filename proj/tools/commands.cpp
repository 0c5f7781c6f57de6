#include "commands.hpp"

#include "eulerian/combinatorics.hpp"
#include "eulerian/limit_law.hpp"
#include "eulerian/measures.hpp"
#include "eulerian/polynomial.hpp"
#include "eulerian/roots.hpp"
#include "eulerian/series.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <sstream>

namespace eulerpoly::cli {

namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

unsigned require_non_negative(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(fmt::format("missing required flag {}", flag));
  if (*v < 0) throw UsageError(fmt::format("{} must be non-negative", flag));
  if (*v > 100000) throw UsageError(fmt::format("{} is too large", flag));
  return static_cast<unsigned>(*v);
}

unsigned require_positive(const std::optional<long>& v, const char* flag) {
  const unsigned u = require_non_negative(v, flag);
  if (u == 0) throw UsageError(fmt::format("{} must be positive", flag));
  return u;
}

std::string join(const std::vector<Integer>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += to_string(values[i]);
  }
  return s;
}

std::string float17(double v) { return fmt::format("{:.17g}", v); }

// Writes to cfg.output_path when set, otherwise to out.
template <class Body>
int with_output(const std::string& path, std::ostream& out, std::ostream& err, Body&& body) {
  if (path.empty()) return body(out);
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot open " << path << " for writing\n";
    return kFailure;
  }
  const int code = body(file);
  file.close();
  if (!file) {
    err << "error: failed writing " << path << '\n';
    return kFailure;
  }
  return code;
}

std::vector<double> negated_x_atoms(const EulerianRoots& roots) {
  std::vector<double> atoms;
  atoms.reserve(roots.x.size());
  for (const auto& x : roots.x) atoms.push_back(-to_double(x.midpoint()));
  return atoms;
}

std::vector<double> u_atoms(const EulerianRoots& roots) {
  std::vector<double> atoms;
  atoms.reserve(roots.u.size());
  for (const auto& u : roots.u) atoms.push_back(to_double(u.midpoint()));
  return atoms;
}

// R_n(y) / (y - 1) is symmetric or antisymmetric under y -> 1 - y.
bool u_reflection_holds(unsigned n) {
  const DensePoly q = deflate(u_poly(n), Rational(1)).first;
  const DensePoly reflected = q.compose_affine(Rational(1), Rational(-1));
  return reflected == (n % 2 == 1 ? q : -q);
}

}  // namespace

std::vector<unsigned> parse_n_list(const std::string& text) {
  std::vector<unsigned> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("invalid n list: '" + text + "'");
    const unsigned long v = std::stoul(item);
    if (v == 0 || v > 10000) throw std::invalid_argument("n must lie in 1..10000, got " + item);
    out.push_back(static_cast<unsigned>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty n list");
  return out;
}

Rational parse_tolerance(const std::string& text) {
  const Rational tol = parse_rational(text);
  if (tol <= 0) throw std::invalid_argument("--tol must be positive");
  return tol;
}

int cmd_numbers(const NumbersArgs& args, Format format, std::ostream& out, std::ostream& err) {
  try {
    const bool pretty = format == Format::pretty;
    if (args.kind == "eulerian") {
      const unsigned n = require_positive(args.n, "--n");
      if (args.k) {
        const Integer v = eulerian(n, *args.k);
        out << (pretty ? fmt::format("A({},{}) = ", n, *args.k) : "") << to_string(v) << '\n';
      } else {
        out << (pretty ? fmt::format("A({},k), k=1..{}: ", n, n) : "") << join(eulerian_row(n)) << '\n';
      }
    } else if (args.kind == "stirling2") {
      const unsigned n = require_non_negative(args.n, "--n");
      if (args.k) {
        out << (pretty ? fmt::format("S({},{}) = ", n, *args.k) : "") << to_string(stirling2(n, *args.k)) << '\n';
      } else {
        const StirlingTable table(n);
        std::vector<Integer> row;
        for (unsigned k = 0; k <= n; ++k) row.push_back(table(n, k));
        out << (pretty ? fmt::format("S({},k), k=0..{}: ", n, n) : "") << join(row) << '\n';
      }
    } else if (args.kind == "norlund") {
      if (args.p) {
        const unsigned p = require_non_negative(args.p, "--p");
        out << (pretty ? fmt::format("N_{} = ", p) : "") << to_string(norlund_integral(p)) << '\n';
      } else {
        const unsigned p_max = require_non_negative(args.p_max, "--p or --p-max");
        const auto values = norlund_numbers(p_max);
        if (!pretty) out << "p,norlund\n";
        for (unsigned p = 0; p <= p_max; ++p)
          out << (pretty ? fmt::format("N_{} = ", p) : fmt::format("{},", p)) << to_string(values[p]) << '\n';
      }
    } else {
      throw UsageError("unknown kind '" + args.kind + "' (expected eulerian, stirling2 or norlund)");
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kSuccess;
}

int cmd_roots(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RootOptions options;
  options.tol = parse_tolerance(cfg.tol);
  std::vector<EulerianRoots> all;
  try {
    for (unsigned n : cfg.n_values) all.push_back(eulerian_roots(n, options));
  } catch (const RootCountMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return with_output(cfg.output_path, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::csv) {
      write_roots_csv_header(os);
      for (const auto& r : all) write_roots_csv(os, r);
    } else {
      for (const auto& r : all) {
        os << "n = " << r.n << '\n';
        for (std::size_t k = 0; k < r.u.size(); ++k)
          os << fmt::format("  k={:<4} u={:<24.17g} x={:.17g}{}\n", k + 1, to_double(r.u[k].midpoint()),
                            to_double(r.x[k].midpoint()), r.u[k].exact ? "  (exact)" : "");
      }
    }
    return int{kSuccess};
  });
}

int cmd_moments(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RootOptions options;
  options.tol = parse_tolerance(cfg.tol);
  std::vector<std::pair<unsigned, std::vector<MomentReport>>> tables;
  try {
    for (unsigned n : cfg.n_values) {
      const auto roots = eulerian_roots(n, options);
      auto reports = numeric_moments(EmpiricalMeasure(u_atoms(roots)), cfg.p_max, Rational(n + 1));
      const unsigned exact_upto = std::min(cfg.p_max, n);
      const auto sums = exact_power_sums(n, exact_upto);
      for (unsigned p = 1; p <= exact_upto; ++p) reports[p - 1].exact_value = sums[p - 1] / Rational(n + 1);
      tables.emplace_back(n, std::move(reports));
    }
  } catch (const RootCountMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return with_output(cfg.output_path, out, err, [&](std::ostream& os) {
    if (cfg.format == Format::csv) {
      write_moments_csv_header(os);
      for (const auto& [n, reports] : tables) write_moments_csv(os, n, reports);
    } else {
      for (const auto& [n, reports] : tables) {
        os << "n = " << n << " (normalized by n+1)\n";
        for (const auto& r : reports)
          os << fmt::format("  p={:<3} exact={:<22} numeric={:<24.17g} reference={:<22} error={:.3g}\n", r.p,
                            r.exact_value ? to_string(*r.exact_value) : "-", r.numeric_value,
                            to_string(r.reference_value), r.abs_error);
      }
    }
    return int{kSuccess};
  });
}

VerifyOutcome run_verify_suite(const VerifyArgs& args) {
  VerifyOutcome outcome;
  auto fail = [&](std::string what) {
    if (outcome.passed) outcome.first_failure = std::move(what);
    outcome.passed = false;
  };
  const unsigned n_max = args.n_max;

  if (args.suite == "theorem2") {
    for (unsigned n = 1; n <= n_max; ++n) {
      const auto sums = exact_power_sums(n, n);
      for (unsigned p = 1; p <= n; ++p) {
        ++outcome.instances;
        const Rational lhs = sums[p - 1] / Rational(n + 1);
        const Rational rhs = normalized_moment(p);
        if (lhs != rhs) fail(fmt::format("n={} p={}: m_p/(n+1)={} but (-1)^p N_p/p!={}", n, p, to_string(lhs), to_string(rhs)));
      }
    }
  } else if (args.suite == "lemma-st-n") {
    const StirlingTable stirling(n_max);
    const auto norlund = norlund_numbers(n_max);
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned p = 1; p <= n; ++p) {
        ++outcome.instances;
        const auto c = verify_stirling_norlund(n, p, stirling, norlund);
        if (!c.holds) fail(fmt::format("n={} p={}: lhs={} rhs={}", n, p, to_string(c.lhs), to_string(c.rhs)));
      }
  } else if (args.suite == "egf") {
    const auto from_egf = norlund_from_egf(args.order);
    for (unsigned p = 0; p <= args.order; ++p) {
      ++outcome.instances;
      const Rational direct = norlund_integral(p);
      if (from_egf[p] != direct)
        fail(fmt::format("N_{}: egf={} integral={}", p, to_string(from_egf[p]), to_string(direct)));
    }
    for (unsigned j = 1; j <= args.order; ++j) {
      ++outcome.instances;
      if (!verify_stirling_egf(j, args.order)) fail(fmt::format("Stirling column EGF j={} order={}", j, args.order));
    }
  } else if (args.suite == "eulerian-stirling") {
    for (unsigned n = 1; n <= n_max; ++n)
      for (unsigned p = 0; p <= n; ++p) {
        ++outcome.instances;
        const auto c = verify_eulerian_stirling_sum(n, p);
        if (!c.holds) fail(fmt::format("n={} p={}: lhs={} rhs={}", n, p, to_string(c.lhs), to_string(c.rhs)));
      }
  } else if (args.suite == "symmetry") {
    for (unsigned n = 1; n <= n_max; ++n) {
      ++outcome.instances;
      const auto row = eulerian_row(n);
      for (unsigned k = 1; k <= n; ++k)
        if (row[k - 1] != row[n - k]) fail(fmt::format("A({},{}) != A({},{})", n, k, n, n + 1 - k));
      ++outcome.instances;
      if (!u_reflection_holds(n)) fail(fmt::format("n={}: u-roots not symmetric under u -> 1-u", n));
    }
  } else {
    throw std::invalid_argument("unknown suite '" + args.suite +
                                "' (expected theorem2, lemma-st-n, egf, eulerian-stirling or symmetry)");
  }
  return outcome;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  VerifyOutcome outcome;
  try {
    outcome = run_verify_suite(args);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (outcome.passed) {
    out << "PASS " << args.suite << ": " << outcome.instances << " identity instances\n";
    return kSuccess;
  }
  out << "FAIL " << args.suite << ": first failure " << outcome.first_failure << '\n';
  return kFailure;
}

int cmd_dist(const Grid& grid, std::ostream& out, std::ostream&) {
  const auto ts = log_grid(grid.t_min, grid.t_max, grid.points);
  write_law_csv(out, ts);
  return kSuccess;
}

int cmd_figure(const RunConfig& cfg, const Grid& grid, std::ostream& out, std::ostream& err) {
  RootOptions options;
  options.tol = parse_tolerance(cfg.tol);
  std::vector<EmpiricalMeasure> measures;
  try {
    for (unsigned n : cfg.n_values) measures.emplace_back(negated_x_atoms(eulerian_roots(n, options)));
  } catch (const RootCountMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  const auto ts = log_grid(grid.t_min, grid.t_max, grid.points);
  const int code = with_output(cfg.output_path, out, err, [&](std::ostream& os) {
    os << "t,cdf_limit";
    for (unsigned n : cfg.n_values) os << ",cdf_n" << n;
    os << '\n';
    for (double t : ts) {
      os << float17(t) << ',' << float17(cdf_mu(t));
      for (const auto& m : measures) os << ',' << float17(empirical_cdf(m, t));
      os << '\n';
    }
    return int{kSuccess};
  });
  for (std::size_t i = 0; i < measures.size(); ++i)
    err << fmt::format("ks n={}: {:.17g}\n", cfg.n_values[i], ks_distance(measures[i], cdf_mu));
  return code;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Roots of Eulerian polynomials, exact moment identities, and the log-Cauchy limit law"};
  app.require_subcommand(1);

  std::string format_name = "csv";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_name, "csv or pretty")->check(CLI::IsMember({"csv", "pretty"}));
  };

  NumbersArgs numbers;
  auto* numbers_cmd = app.add_subcommand("numbers", "Exact Eulerian, Stirling (second kind) or Nörlund numbers");
  numbers_cmd->add_option("kind", numbers.kind, "eulerian, stirling2 or norlund")->required();
  numbers_cmd->add_option("--n", numbers.n, "row index n");
  numbers_cmd->add_option("--k", numbers.k, "column index k (omit for the whole row)");
  numbers_cmd->add_option("--p", numbers.p, "Nörlund index p");
  numbers_cmd->add_option("--p-max", numbers.p_max, "list N_0..N_pmax");
  add_format(numbers_cmd);

  RunConfig cfg;
  std::string n_text;
  auto add_root_flags = [&](CLI::App* sub, bool need_n) {
    auto* opt = sub->add_option("--n", n_text, "comma-separated degrees, e.g. 10,100");
    if (need_n) opt->required();
    sub->add_option("--tol", cfg.tol, "refinement tolerance (exact decimal)")->capture_default_str();
    sub->add_option("--out", cfg.output_path, "output file (default stdout)");
    add_format(sub);
  };
  auto* roots_cmd = app.add_subcommand("roots", "Certified roots of A_n in u and x coordinates");
  add_root_flags(roots_cmd, true);
  auto* moments_cmd = app.add_subcommand("moments", "Normalized moments of the u-roots against the limit values");
  add_root_flags(moments_cmd, true);
  moments_cmd->add_option("--p-max", cfg.p_max, "largest moment order")->capture_default_str();

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exact identity suites");
  verify_cmd->add_option("suite", verify.suite, "theorem2, lemma-st-n, egf, eulerian-stirling or symmetry")->required();
  verify_cmd->add_option("--n-max", verify.n_max, "largest n")->capture_default_str();
  verify_cmd->add_option("--order", verify.order, "series truncation order (egf)")->capture_default_str();

  Grid grid;
  auto add_grid = [&](CLI::App* sub) {
    sub->add_option("--t-min", grid.t_min)->capture_default_str();
    sub->add_option("--t-max", grid.t_max)->capture_default_str();
    sub->add_option("--points", grid.points)->capture_default_str();
  };
  auto* dist_cmd = app.add_subcommand("dist", "Density and CDF of the limit law on a log grid");
  add_grid(dist_cmd);
  dist_cmd->add_option("--out", cfg.output_path, "output file (default stdout)");
  auto* figure_cmd = app.add_subcommand("figure", "Empirical CDFs of the negated roots against the limit CDF");
  add_root_flags(figure_cmd, false);
  add_grid(figure_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  cfg.format = format_name == "pretty" ? Format::pretty : Format::csv;
  try {
    if (!n_text.empty()) cfg.n_values = parse_n_list(n_text);
    parse_tolerance(cfg.tol);
    if (figure_cmd->parsed() && cfg.n_values.empty()) cfg.n_values = {10, 100};
    if ((dist_cmd->parsed() || figure_cmd->parsed()) && (!(grid.t_min > 0 && grid.t_min < grid.t_max) || grid.points < 2))
      throw std::invalid_argument("grid needs 0 < t-min < t-max and at least two points");
    if (verify_cmd->parsed() && verify.n_max < 1) throw std::invalid_argument("--n-max must be >= 1");
    if (verify_cmd->parsed() && verify.order < 1) throw std::invalid_argument("--order must be >= 1");
    if (moments_cmd->parsed() && cfg.p_max < 1) throw std::invalid_argument("--p-max must be >= 1");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (numbers_cmd->parsed()) return cmd_numbers(numbers, cfg.format, out, err);
    if (roots_cmd->parsed()) return cmd_roots(cfg, out, err);
    if (moments_cmd->parsed()) return cmd_moments(cfg, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out, err);
    if (dist_cmd->parsed()) return with_output(cfg.output_path, out, err, [&](std::ostream& os) { return cmd_dist(grid, os, err); });
    if (figure_cmd->parsed()) return cmd_figure(cfg, grid, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace eulerpoly::cli
