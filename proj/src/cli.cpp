#include "paramod/cli.hpp"

#include <CLI11.hpp>

#include <complex>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>

#include "paramod/fourier_jacobi.hpp"
#include "paramod/siegel.hpp"
#include "paramod/symplectic.hpp"
#include "paramod/verifier.hpp"

namespace paramod {

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

std::pair<std::string, std::string> split_pair(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("expected 're,im' in '" + text + "'");
  return {text.substr(0, comma), text.substr(comma + 1)};
}

std::complex<double> parse_complex(const std::string& text) {
  auto [re, im] = split_pair(text);
  size_t used = 0;
  double r = std::stod(re, &used);
  if (used != re.size()) throw std::invalid_argument("bad number '" + re + "'");
  double i = std::stod(im, &used);
  if (used != im.size()) throw std::invalid_argument("bad number '" + im + "'");
  return {r, i};
}

GaussianRational parse_gaussian(const std::string& text) {
  auto [re, im] = split_pair(text);
  return {Rational::parse(re), Rational::parse(im)};
}

std::string format_complex(const std::complex<double>& z) {
  std::ostringstream os;
  os << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ")
     << std::abs(z.imag()) << "i";
  return os.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

struct CheckMatrixArgs {
  std::string file;
  long long t = 1;
  std::optional<long long> pattern_p;
};

struct ActArgs {
  std::string file;
  std::string tau1, tau2, tau3;
  bool exact = false;
};

struct OrderArgs {
  long long q = 2;
  bool brute_force = false;
};

struct DimArgs {
  long long p = 0;
};

struct FjArgs {
  int n = 0;
  int trunc = 0;
};

struct VerifyArgs {
  std::optional<long long> p;
  std::optional<long long> n;
  std::optional<long long> divisibility;
  bool alpha_mode = false;
  std::string geometry_file;
  std::string out_file;
  std::string recheck_file;
};

struct VerdictArgs {
  long long p = 0;
};

int do_check_matrix(const CheckMatrixArgs& args, std::ostream& out) {
  Mat4q m = parse_matrix_file(args.file);
  bool symplectic = is_symplectic(m);
  bool paramodular = in_paramodular(m, args.t);
  out << "symplectic: " << yes_no(symplectic) << "\n";
  out << "paramodular (t = " << args.t << "): " << yes_no(paramodular) << "\n";
  bool ok = symplectic && paramodular;
  if (args.pattern_p) {
    bool pattern = in_prime_pattern(m, *args.pattern_p);
    out << "integral level-" << *args.pattern_p
        << " pattern: " << yes_no(pattern) << "\n";
    ok = ok && pattern;
  }
  return ok ? kOk : kCheckFailed;
}

int do_act(const ActArgs& args, std::ostream& out, std::ostream& err) {
  Mat4q gamma = parse_matrix_file(args.file);
  if (!is_symplectic(gamma)) {
    err << "error: the matrix is not symplectic\n";
    return kCheckFailed;
  }
  try {
    if (args.exact) {
      SiegelPointQ z{parse_gaussian(args.tau1), parse_gaussian(args.tau2),
                     parse_gaussian(args.tau3)};
      if (!is_in_h2(z)) {
        err << "error: the point is not in the upper half-space\n";
        return kCheckFailed;
      }
      SiegelPointQ w = act(gamma, z);
      std::ostringstream t1, t2, t3;
      t1 << w.tau1;
      t2 << w.tau2;
      t3 << w.tau3;
      out << "tau1' = " << t1.str() << "\n";
      out << "tau2' = " << t2.str() << "\n";
      out << "tau3' = " << t3.str() << "\n";
      out << "image in upper half-space: " << yes_no(is_in_h2(w)) << "\n";
    } else {
      SiegelPointD z{parse_complex(args.tau1), parse_complex(args.tau2),
                     parse_complex(args.tau3)};
      if (!is_in_h2(z)) {
        err << "error: the point is not in the upper half-space\n";
        return kCheckFailed;
      }
      SiegelPointD w = act(gamma, z);
      out << "tau1' = " << format_complex(w.tau1) << "\n";
      out << "tau2' = " << format_complex(w.tau2) << "\n";
      out << "tau3' = " << format_complex(w.tau3) << "\n";
      out << "image in upper half-space: " << yes_no(is_in_h2(w)) << "\n";
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kOk;
}

int do_order(const OrderArgs& args, std::ostream& out, std::ostream& err) {
  BigInt closed = sp4_order_mod(args.q);
  out << "|Sp(4, F_" << args.q << ")| = " << closed.str() << "\n";
  if (args.brute_force) {
    BigInt counted = sp4_order_bruteforce(static_cast<int>(args.q));
    out << "brute force enumeration: " << counted.str() << "\n";
    if (counted != closed) {
      err << "error: enumeration disagrees with the closed form\n";
      return kCheckFailed;
    }
    out << "enumeration agrees with the closed form\n";
  }
  return kOk;
}

int do_dim(const DimArgs& args, std::ostream& out) {
  Rational leading = dimension_leading_term(args.p);
  long long degree = covering_degree(args.p);
  out << "p = " << args.p << "\n";
  out << "leading term of the weight-n dimension: " << leading.str() << "\n";
  out << "covering degree p^2(p^2+1): " << degree << "\n";
  out << "8640 * leading term = degree: "
      << yes_no(leading * Rational(8640) == Rational(degree)) << "\n";
  return kOk;
}

int do_fj_demo(const FjArgs& args, std::ostream& out) {
  ProductVanishingReport report = check_product_vanishing(args.n, args.trunc);
  out << "phi = fn * f2^" << args.n << " with generic fn (weight n) and "
      << "generic cusp form f2, truncated at u^" << args.trunc << "\n";
  for (const auto& [m, poly] : report.coefficients)
    out << "coefficient of u^" << m << ": " << poly.str() << "\n";
  out << "coefficients below u^" << args.n
      << " vanish: " << yes_no(report.low_coefficients_vanish) << "\n";
  out << "coefficient at u^" << args.n
      << " is exactly theta[fn,0]*theta[f2,1]^" << args.n << ": "
      << yes_no(report.coefficient_at_n_nonzero) << "\n";
  out << "vanishing order of phi: " << (report.passed() ? args.n : -1) << "\n";
  return report.passed() ? kOk : kCheckFailed;
}

void print_step_line(const StepCertificate& step, std::ostream& out) {
  out << "step " << to_string(step.surface) << " (i " << step.i_range << "): ";
  if (step.vanishes) {
    out << "vanishes, worst case " << step.worst_case.str() << " ["
        << step.criterion << ", " << to_string(step.provenance) << "]";
  } else if (step.witness) {
    out << "FAILS at n = " << step.witness->n << ", i = " << step.witness->i
        << " (pairing value " << step.witness->value.str() << ")";
  } else {
    out << "FAILS (" << step.criterion << ")";
  }
  out << "\n";
  for (const std::string& note : step.notes) out << "  note: " << note << "\n";
}

int do_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<GeometrySet> geometry;
  if (!args.geometry_file.empty()) {
    GeometrySet merged = shipped_geometry();
    GeometrySet loaded = load_geometry_file(args.geometry_file);
    for (auto& [surface, table] : loaded.tables)
      merged.tables[surface] = std::move(table);
    geometry = std::move(merged);
  }

  if (!args.recheck_file.empty()) {
    RecheckResult res = recheck_certificate(args.recheck_file, geometry);
    out << "recheck p = " << res.p << ": regenerated certificate is "
        << (res.byte_identical ? "byte-identical" : "DIFFERENT") << "\n";
    return res.byte_identical ? kOk : kCheckFailed;
  }

  if (!args.p) {
    err << "error: verify requires --p (or --recheck FILE)\n";
    return kUsage;
  }

  VerifyOptions opts;
  opts.divisibility = args.divisibility;
  opts.concrete_n = args.n;
  opts.alpha_mode = args.alpha_mode;
  opts.geometry = geometry;
  Certificate cert = build_certificate(*args.p, opts);

  out << "p = " << cert.p << ", admissible weights: positive multiples of "
      << cert.divisibility << "\n";
  out << "rearrangement identity: " << (cert.rearrangement ? "ok" : "FAILS")
      << "\n";
  for (const StepCertificate& step : cert.steps) print_step_line(step, out);
  out << "dimension leading term: " << cert.leading_term.str()
      << ", covering degree: " << cert.degree << "\n";
  if (cert.alpha_mode) {
    for (const StepCertificate& step : cert.steps)
      if (step.alpha_comparison)
        out << "alpha " << to_string(step.surface) << ": "
            << (step.alpha_comparison->vanishes ? "vanishes" : "FAILS")
            << ", worst case " << step.alpha_comparison->worst_case.str()
            << "\n";
  }
  out << "verdict: " << cert.verdict << "\n";

  if (!args.out_file.empty()) {
    std::ofstream f(args.out_file, std::ios::binary);
    if (!f)
      throw std::runtime_error("cannot write certificate to '" +
                               args.out_file + "'");
    f << certificate_to_string(cert);
    out << "certificate written to " << args.out_file << "\n";
  }
  return cert.verified() ? kOk : kCheckFailed;
}

int do_verdict(const VerdictArgs& args, std::ostream& out) {
  Certificate cert = build_certificate(args.p, {});
  out << cert.verdict << "; leading term " << cert.leading_term.str() << "\n";
  out << "covering degree: " << cert.degree << "\n";
  for (const std::string& note : cert.notes) out << "note: " << note << "\n";
  return cert.verified() ? kOk : kCheckFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for paramodular threefolds of level "
               "p^2: group membership, half-space action, formal "
               "Fourier-Jacobi products, and obstruction certificates"};
  app.require_subcommand(1);

  CheckMatrixArgs check_args;
  auto* check = app.add_subcommand(
      "check-matrix", "symplectic and paramodular membership of a matrix");
  check->add_option("file", check_args.file,
                    "text file with 16 whitespace-separated rationals")
      ->required();
  check->add_option("--t", check_args.t, "paramodular level (default 1)");
  check->add_option("--pattern", check_args.pattern_p,
                    "also check the integral level-p checkerboard pattern");

  ActArgs act_args;
  auto* act_cmd = app.add_subcommand(
      "act", "apply a symplectic matrix to a point of the upper half-space");
  act_cmd->add_option("file", act_args.file, "matrix file")->required();
  act_cmd->add_option("--tau1", act_args.tau1, "tau1 as re,im")->required();
  act_cmd->add_option("--tau2", act_args.tau2, "tau2 as re,im")->required();
  act_cmd->add_option("--tau3", act_args.tau3, "tau3 as re,im")->required();
  act_cmd->add_flag("--exact", act_args.exact,
                    "rational entries, exact arithmetic over Q(i)");

  OrderArgs order_args;
  auto* order = app.add_subcommand("order-sp4",
                                   "order of the symplectic group over F_q");
  order->add_option("--q", order_args.q, "prime modulus")->required();
  order->add_flag("--brute-force", order_args.brute_force,
                  "also enumerate the group (q = 2 or 3)");

  DimArgs dim_args;
  auto* dim = app.add_subcommand(
      "dim", "leading term of the weight-n dimension at level p^2");
  dim->add_option("--p", dim_args.p, "prime")->required();

  FjArgs fj_args;
  auto* fj = app.add_subcommand(
      "fj-demo",
      "formal Fourier-Jacobi product fn * f2^n and its vanishing order");
  fj->add_option("--n", fj_args.n, "weight / expected order")->required();
  fj->add_option("--trunc", fj_args.trunc, "truncation (must exceed n)")
      ->required();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "run the obstruction-vanishing steps and emit a certificate");
  verify->add_option("--p", verify_args.p, "prime");
  verify->add_option("--n", verify_args.n,
                     "weight for the concrete sign scan (admissible multiple)");
  verify->add_option("--divisibility", verify_args.divisibility,
                     "admissible-weight divisor (default 24p)");
  verify->add_flag("--alpha-mode", verify_args.alpha_mode,
                   "also run with the alternative weight-1 slope 3 - 10/p");
  verify->add_option("--geometry", verify_args.geometry_file,
                     "JSON restriction tables overriding the shipped ones");
  verify->add_option("--out", verify_args.out_file,
                     "write the JSON certificate here");
  verify->add_option("--recheck", verify_args.recheck_file,
                     "re-run a stored certificate and compare bytes");

  VerdictArgs verdict_args;
  auto* verdict = app.add_subcommand(
      "verdict", "one-line general-type verdict for a prime");
  verdict->add_option("--p", verdict_args.p, "prime")->required();

  std::vector<const char*> argv_copy(argv, argv + argc);
  try {
    app.parse(argc, argv_copy.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (app.got_subcommand(check)) return do_check_matrix(check_args, out);
    if (app.got_subcommand(act_cmd)) return do_act(act_args, out, err);
    if (app.got_subcommand(order)) return do_order(order_args, out, err);
    if (app.got_subcommand(dim)) return do_dim(dim_args, out);
    if (app.got_subcommand(fj)) return do_fj_demo(fj_args, out);
    if (app.got_subcommand(verify)) return do_verify(verify_args, out, err);
    if (app.got_subcommand(verdict)) return do_verdict(verdict_args, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << "error: no subcommand\n";
  return kUsage;
}

}  // namespace paramod
