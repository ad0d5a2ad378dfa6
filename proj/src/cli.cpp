#include "ctn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "ctn/cantor.hpp"
#include "ctn/iso.hpp"
#include "ctn/l1.hpp"
#include "ctn/lo_reduction.hpp"
#include "ctn/presentation_io.hpp"
#include "ctn/signature.hpp"

namespace ctn::cli {

namespace {

constexpr std::uint64_t kLazyEvalPieces = 16;
constexpr std::uint64_t kSurfacePieces = 32;
constexpr std::size_t kDefaultDepth = 8;
constexpr std::size_t kAxiomGrid = 21;

// Malformed user input other than presentation files.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

UnitRational unit_arg(const std::string& text) {
  Rational r;
  try {
    r = Rational::parse(text);
  } catch (const std::exception&) {
    throw InputError("bad rational '" + text + "'");
  }
  return UnitRational(r);  // domain_error outside [0,1]
}

LinearOrder order_arg(const std::string& text) {
  try {
    return LinearOrder::parse(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

CantorRule cantor_arg(const std::string& text) {
  try {
    return parse_cantor_rule(text);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

int cmd_eval(const std::string& file, const std::string& xs, const std::string& ys, std::optional<std::uint64_t> n,
             std::ostream& out) {
  const TNorm t = load_presentation(file);
  const UnitRational x = unit_arg(xs), y = unit_arg(ys);
  if (t.is_finite() && !n) {
    out << eval(t, x, y) << '\n';
    return kOk;
  }
  const Approximation a = eval_approx(t, x, y, n.value_or(kLazyEvalPieces));
  out << a.value << " error_bound=" << a.error_bound << '\n';
  return kOk;
}

int cmd_axioms(const std::string& file, std::ostream& out) {
  const TNorm t = load_presentation(file);
  if (!t.is_finite()) throw std::logic_error("axioms needs a finite presentation");
  const auto grid = unit_grid(kAxiomGrid);
  const AxiomReport r = check_axioms(t, grid);
  out << "checks=" << r.checks << " violations=" << r.violations.size() << '\n';
  for (const auto& v : r.violations) {
    out << v.axiom;
    for (const auto& a : v.args) out << ' ' << a;
    out << '\n';
  }
  out << (r.ok() ? "OK" : "FAIL") << '\n';
  return kOk;
}

int cmd_iso(const std::string& fa, const std::string& fb, std::size_t depth, std::ostream& out) {
  const TNorm a = load_presentation(fa);
  const TNorm b = load_presentation(fb);
  const IsoVerdict v = decide_iso_lazy(a, b, depth);
  out << v.format();
  return v.kind == IsoVerdict::Kind::Unknown ? kUnknown : kOk;
}

int cmd_surface(const std::string& file, std::size_t grid, std::ostream& out) {
  const TNorm t = load_presentation(file);
  const FinitePresentation p = t.is_finite() ? t.finite() : truncate(t.generator(), kSurfacePieces);
  const auto points = unit_grid(grid);
  out << "x\\y";
  for (const auto& y : points) out << ',' << y;
  out << '\n';
  for (const auto& x : points) {
    out << x;
    for (const auto& y : points) out << ',' << eval(p, x, y);
    out << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Continuous t-norms: evaluation, signatures, isomorphism and reductions", "ctn"};
  app.require_subcommand(1);

  std::string file, file_b, xs, ys, spec;
  std::optional<std::uint64_t> n_opt;
  std::uint64_t n = 0;
  std::size_t depth = kDefaultDepth;

  auto* eval_cmd = app.add_subcommand("eval", "x * y (with an error bound for lazy presentations)");
  eval_cmd->add_option("file", file)->required();
  eval_cmd->add_option("x", xs)->required();
  eval_cmd->add_option("y", ys)->required();
  eval_cmd->add_option("N", n_opt, "truncation depth");

  auto* axioms_cmd = app.add_subcommand("axioms", "check the t-norm axioms on the 21-point grid");
  axioms_cmd->add_option("file", file)->required();

  auto* sig_cmd = app.add_subcommand("signature", "dump the signature");
  sig_cmd->add_option("file", file)->required();
  sig_cmd->add_option("depth", depth);

  auto* iso_cmd = app.add_subcommand("iso", "decide isomorphism");
  iso_cmd->add_option("fileA", file)->required();
  iso_cmd->add_option("fileB", file_b)->required();
  iso_cmd->add_option("depth", depth);

  auto* theta_cmd = app.add_subcommand("theta", "dump the L1 structure on indices 0..N-1");
  theta_cmd->add_option("file", file)->required();
  theta_cmd->add_option("N", n)->required()->check(CLI::PositiveNumber);

  auto* from_lo_cmd = app.add_subcommand("from-lo", "intervals I_0..I_{N-1} of a linear order");
  from_lo_cmd->add_option("order", spec)->required();
  from_lo_cmd->add_option("N", n)->required()->check(CLI::PositiveNumber);

  auto* cantor_cmd = app.add_subcommand("cantor", "gaps of a Cantor system and their order");
  cantor_cmd->add_option("system", spec)->required();
  cantor_cmd->add_option("depth", depth)->required();

  auto* rt_cmd = app.add_subcommand("roundtrip", "recover a linear order from its t-norm");
  rt_cmd->add_option("order", spec)->required();
  rt_cmd->add_option("N", n)->required()->check(CLI::PositiveNumber);

  std::size_t grid = 0;
  auto* surface_cmd = app.add_subcommand("surface", "x * y over a grid x grid lattice as CSV");
  surface_cmd->add_option("file", file)->required();
  surface_cmd->add_option("grid", grid)->required()->check(CLI::Range(2, 1000));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(file, xs, ys, n_opt, out);
    if (axioms_cmd->parsed()) return cmd_axioms(file, out);
    if (sig_cmd->parsed()) {
      out << dump_signature(compute_signature(load_presentation(file), depth));
      return kOk;
    }
    if (iso_cmd->parsed()) return cmd_iso(file, file_b, depth, out);
    if (theta_cmd->parsed()) {
      out << dump_l1(theta(load_presentation(file), n));
      return kOk;
    }
    if (from_lo_cmd->parsed()) {
      for (const auto& p : build_intervals(order_arg(spec), n).pieces) out << interval_string(p.lo, p.hi) << '\n';
      return kOk;
    }
    if (cantor_cmd->parsed()) {
      out << dump_cantor(cantor_arg(spec), depth);
      return kOk;
    }
    if (rt_cmd->parsed()) {
      const RoundTrip r = roundtrip(order_arg(spec), n);
      out << r.report();
      return kOk;
    }
    if (surface_cmd->parsed()) return cmd_surface(file, grid, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InputError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
  return kUsage;
}

}  // namespace ctn::cli
