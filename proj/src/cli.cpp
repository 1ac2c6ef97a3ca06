#include "ridgecalc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "ridgecalc/errors.hpp"
#include "ridgecalc/json_io.hpp"
#include "ridgecalc/numharness.hpp"
#include "ridgecalc/ridge.hpp"
#include "ridgecalc/sampling.hpp"

namespace ridgecalc {

namespace {

struct RunConfig {
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  double tol = kDefaultTolerance;
  std::size_t target = 1;
  std::string steps;
  std::string at = "0";
  std::optional<std::string> float_csv;
  bool float_check = false;
  std::optional<std::string> radicals;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, sep)) out.push_back(part);
  return out;
}

std::optional<std::vector<long>> parse_radicals(const std::optional<std::string>& text) {
  if (!text) return std::nullopt;
  std::vector<long> out;
  if (*text == "none") return out;
  for (const auto& part : split(*text, ',')) {
    if (part.empty()) continue;
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size()) throw ParseError("bad radicand \"" + part + "\"");
    out.push_back(v);
  }
  return out;
}

void emit_json(const RunConfig& cfg, const Json& j, std::ostream& out) {
  if (cfg.output.empty()) {
    out << dump_json(j);
  } else {
    write_json_file(cfg.output, j);
  }
}

std::string field_name(const BasisPtr& basis) {
  if (basis->rank() == 0) return "Q";
  std::string s = "Q(";
  for (std::size_t i = 0; i < basis->rank(); ++i) {
    if (i) s += ", ";
    s += "sqrt" + std::to_string(basis->radicands()[i]);
  }
  return s + ")";
}

void print_certificate(std::ostream& out, const Certificate& c) {
  out << "certificate: rational_points=" << c.rational_points << " exact=" << (c.exact ? "true" : "false")
      << " irrational_points=" << c.irrational_points
      << " extends_beyond_Q=" << (c.extends_beyond_Q ? "true" : "false") << "\n";
}

int cmd_demo_cfe(const RunConfig& cfg, std::ostream& out) {
  const auto radicals = parse_radicals(cfg.radicals).value_or(std::vector<long>{2});
  const BasisPtr basis = RadicalBasis::make(radicals);
  const std::size_t samples = cfg.samples == 0 ? 20 : cfg.samples;

  const bool tame = basis->rank() == 0;
  const AdditiveMap a = tame ? AdditiveMap::scalar(KNumber(basis, 1)) : AdditiveMap::coordinate(basis, 1);
  out << "field: " << field_name(basis) << "\n";
  if (tame) {
    out << "A(1) = 1; over Q every additive map is x -> A(1) x, so this is the tame case\n";
  } else {
    const KNumber root = KNumber::basis_element(basis, 1);
    const KNumber one(basis, 1);
    const KNumber lhs = a(one) * root;
    const KNumber rhs = a(root) * one;
    out << "A(1) = " << a(one) << ", A(" << basis->key_label(1) << ") = " << a(root) << "\n";
    out << "wildness witness: A(1)*" << basis->key_label(1) << " = " << lhs << " != A(" << basis->key_label(1)
        << ")*1 = " << rhs << (lhs != rhs ? " (A is not linear)" : "") << "\n";
  }

  const RidgeSum s = cfe_example(a);
  Rng rng = make_rng(cfg.seed);
  bool all_zero = true;
  for (std::size_t i = 0; i < samples; ++i) {
    const KNumber x = random_knumber(basis, rng);
    const KNumber y = random_knumber(basis, rng);
    const KNumber v = s(std::vector{x, y});
    all_zero = all_zero && v.is_zero();
    out << "x = " << x << ", y = " << y << ": A(x) + A(y) - A(x + y) = " << v << "\n";
  }

  const SmoothDecomposition d = smooth_decomposition(s, {samples, samples, cfg.seed});
  for (std::size_t i = 0; i < d.g.size(); ++i) out << "g_" << (i + 1) << " = " << d.g[i].to_string() << "\n";
  out << "P = " << d.p.to_string() << "\n";
  print_certificate(out, d.certificate);
  if (!cfg.output.empty()) write_json_file(cfg.output, solution_to_json({d.g, d.p, d.certificate, s}));
  return all_zero && d.certificate.exact ? kExitOk : kExitVerification;
}

RidgeSum load_problem(const RunConfig& cfg) {
  if (cfg.input.empty()) throw ParseError("--input is required");
  return problem_from_json(read_json_file(cfg.input), parse_radicals(cfg.radicals));
}

int cmd_extract(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RidgeSum s = load_problem(cfg);
  if (cfg.target < 1 || cfg.target > s.k()) {
    throw UsageError("--target must be between 1 and " + std::to_string(s.k()));
  }
  std::vector<KNumber> steps;
  for (const auto& part : split(cfg.steps, ',')) steps.push_back(parse_knumber(s.basis(), part));
  if (steps.size() + 1 != s.k()) {
    throw UsageError("--steps needs " + std::to_string(s.k() - 1) + " comma-separated values");
  }
  const KNumber t = parse_knumber(s.basis(), cfg.at);
  const MultivariateFn f = [&s](std::span<const KNumber> x) { return s(x); };
  const auto dirs = s.directions();
  Json result = {{"value", to_json(extract_component_difference(f, dirs, cfg.target - 1, steps, t))}};

  int code = kExitOk;
  if (cfg.float_check) {
    const FloatReport report = float_extract_check(s, cfg.target - 1, steps, FloatGrid::default_line(), cfg.tol);
    result["float"] = {{"points", report.rows.size()},
                       {"max_abs_err", report.max_abs_err},
                       {"tol", report.tol},
                       {"pass", report.pass}};
    if (cfg.float_csv && !cfg.float_csv->empty()) {
      std::ofstream csv(*cfg.float_csv, std::ios::binary);
      if (!csv) throw ParseError("cannot write " + *cfg.float_csv);
      write_csv(csv, report);
    }
    if (!report.pass) {
      err << "float cross-check failed: max deviation " << format_double(report.max_abs_err) << " > tol "
          << format_double(cfg.tol) << "\n";
      code = kExitVerification;
    }
  }
  emit_json(cfg, result, out);
  return code;
}

int cmd_smooth(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const RidgeSum s = load_problem(cfg);
  const std::size_t samples = cfg.samples == 0 ? 50 : cfg.samples;
  const SmoothDecomposition d = smooth_decomposition(s, {samples, samples, cfg.seed});
  emit_json(cfg, solution_to_json({d.g, d.p, d.certificate, s}), out);
  if (!d.certificate.exact) {
    err << "reconstruction failed at a rational sample point\n";
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_decompose_poly(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw ParseError("--input is required");
  const Json j = read_json_file(cfg.input);
  if (!j.is_object() || !j.contains("P") || !j.contains("directions") || !j["directions"].is_array()) {
    throw ParseError("decompose-poly input needs \"P\" and \"directions\"");
  }
  const auto radicals = parse_radicals(cfg.radicals);
  const BasisPtr basis = j.contains("radicals") ? basis_from_json(j["radicals"])
                                                : RadicalBasis::make(radicals.value_or(std::vector<long>{}));
  const PolyMultivar p = polymultivar_from_json(j["P"], basis, 2);
  std::vector<Direction> dirs;
  for (const auto& d : j["directions"]) {
    if (!d.is_array()) throw ParseError("each direction must be an array");
    KVector v;
    for (const auto& c : d) v.push_back(knumber_from_json(c, basis));
    dirs.emplace_back(std::move(v));
  }
  Json ps = Json::array();
  for (const auto& pi : ridge_poly_decompose(p, dirs)) ps.push_back(to_json(pi));
  emit_json(cfg, {{"p", ps}}, out);
  return kExitOk;
}

double eval_float(const UniPoly& u, double t) {
  double v = 0;
  for (auto it = u.coeffs().rbegin(); it != u.coeffs().rend(); ++it) v = v * t + to_float(*it);
  return v;
}

double eval_float(const PolyMultivar& p, const std::vector<double>& x) {
  double v = 0;
  for (const auto& [e, c] : p.terms()) {
    double term = to_float(c);
    for (std::size_t i = 0; i < e.size(); ++i) term *= std::pow(x[i], static_cast<double>(e[i]));
    v += term;
  }
  return v;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw ParseError("--input is required");
  if (!(cfg.tol > 0)) throw UsageError("--tol must be positive");
  const SolutionFile sol = solution_from_json(read_json_file(cfg.input), parse_radicals(cfg.radicals));
  if (!sol.problem) throw ParseError("solution file has no embedded \"problem\"");
  const RidgeSum& s = *sol.problem;
  if (sol.g.size() != s.k()) throw ParseError("solution has " + std::to_string(sol.g.size()) + " profiles, expected " + std::to_string(s.k()));
  if (sol.p.nvars() != s.n()) throw ParseError("P has the wrong number of variables");

  const std::size_t samples = cfg.samples == 0 ? 50 : cfg.samples;
  Rng rng = make_rng(cfg.seed);
  std::size_t rational_fail = 0, irrational_fail = 0;
  double max_float_err = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    KVector y;
    for (std::size_t c = 0; c < s.n(); ++c) y.push_back(random_rational_knumber(s.basis(), rng));
    if (!reconstruction_holds(s, sol.g, sol.p, y)) ++rational_fail;

    std::vector<double> yf;
    for (const auto& c : y) yf.push_back(to_float(c));
    double approx = eval_float(sol.p, yf);
    for (std::size_t t = 0; t < s.k(); ++t) {
      approx += eval_float(sol.g[t], to_float(dot(s.terms()[t].direction.components(), y)));
    }
    max_float_err = std::max(max_float_err, std::abs(approx - to_float(s(y))));
  }
  for (std::size_t i = 0; i < samples; ++i) {
    KVector x;
    for (std::size_t c = 0; c < s.n(); ++c) x.push_back(random_irrational(s.basis(), rng));
    if (!reconstruction_holds(s, sol.g, sol.p, x)) ++irrational_fail;
  }

  const bool float_ok = max_float_err <= cfg.tol;
  const bool beyond_ok = !sol.certificate.extends_beyond_Q || irrational_fail == 0;
  out << "rational points: " << samples - rational_fail << "/" << samples << " exact\n";
  out << "irrational points: " << samples - irrational_fail << "/" << samples << " exact"
      << (sol.certificate.extends_beyond_Q ? " (claimed extends_beyond_Q)" : "") << "\n";
  out << "float reconstruction: max deviation " << format_double(max_float_err) << " (tol "
      << format_double(cfg.tol) << ")\n";
  const bool ok = rational_fail == 0 && beyond_ok && float_ok && sol.certificate.exact;
  out << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  return ok ? kExitOk : kExitVerification;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ridge-function decomposition over multiquadratic fields", "ridgecalc"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", cfg.samples, "number of sample points")->check(CLI::PositiveNumber);
    sub->add_option("--radicals", cfg.radicals, "comma-separated radicands, or \"none\"");
  };

  auto* demo = app.add_subcommand("demo", "built-in demonstrations");
  demo->require_subcommand(1);
  auto* cfe = demo->add_subcommand("cfe", "h(x) + h(y) - h(x + y) with a wild additive h");
  add_common(cfe);
  cfe->add_option("--output", cfg.output, "write the solution file here");

  auto* extract = app.add_subcommand("extract", "component difference from evaluations of f");
  add_common(extract);
  extract->add_option("--input", cfg.input, "problem file")->required();
  extract->add_option("--output", cfg.output, "result file (default stdout)");
  extract->add_option("--target", cfg.target, "1-based term index")->required();
  extract->add_option("--steps", cfg.steps, "comma-separated steps h_1..h_{k-1}");
  extract->add_option("--at", cfg.at, "evaluation point t")->capture_default_str();
  extract->add_option("--tol", cfg.tol, "float tolerance")->capture_default_str();
  extract->add_option("--float", cfg.float_csv, "run the float cross-check, optionally writing CSV here")
      ->expected(0, 1);

  auto* smooth = app.add_subcommand("smooth", "split off the polynomial part");
  add_common(smooth);
  smooth->add_option("--input", cfg.input, "problem file")->required();
  smooth->add_option("--output", cfg.output, "solution file (default stdout)");

  auto* decomp = app.add_subcommand("decompose-poly", "write a bivariate polynomial as a sum of ridge polynomials");
  decomp->add_option("--input", cfg.input, "polynomial and directions")->required();
  decomp->add_option("--output", cfg.output, "result file (default stdout)");
  decomp->add_option("--radicals", cfg.radicals, "comma-separated radicands, or \"none\"");

  auto* verify = app.add_subcommand("verify", "re-check a stored solution");
  add_common(verify);
  verify->add_option("--input", cfg.input, "solution file")->required();
  verify->add_option("--tol", cfg.tol, "float tolerance")->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
    cfg.float_check = extract->count("--float") > 0;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (cfe->parsed()) return cmd_demo_cfe(cfg, out);
    if (extract->parsed()) return cmd_extract(cfg, out, err);
    if (smooth->parsed()) return cmd_smooth(cfg, out, err);
    if (decomp->parsed()) return cmd_decompose_poly(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const GeometryError& e) {
    err << "error: " << e.what() << "\n";
    return kExitGeometry;
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace ridgecalc
