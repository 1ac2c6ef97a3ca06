#include "ridgecalc/numharness.hpp"

#include <charconv>
#include <cmath>

#include "ridgecalc/difference.hpp"
#include "ridgecalc/errors.hpp"
#include "ridgecalc/polyfunc.hpp"

namespace ridgecalc {

double to_float(const KNumber& a, unsigned precision_bits) {
  if (precision_bits < 53) throw UsageError("to_float needs at least 53 bits of precision");
  if (a.is_rational()) return a.rational_value().get_d();
  for (unsigned bits = precision_bits;; bits *= 2) {
    const Interval iv = enclose(a, bits);
    const Rational mid = (iv.lo + iv.hi) / 2;
    Rational width = iv.hi - iv.lo;
    Rational scale = abs(mid);
    mpq_div_2exp(scale.get_mpq_t(), scale.get_mpq_t(), precision_bits);
    if (width <= scale) return mid.get_d();
  }
}

FloatGrid::FloatGrid(std::vector<GridAxis> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw UsageError("grid needs at least one axis");
  for (const auto& ax : axes_) {
    if (ax.count < 2) throw UsageError("grid axis needs at least 2 points");
    if (!(ax.start < ax.stop)) throw UsageError("grid axis needs start < stop");
  }
}

FloatGrid FloatGrid::default_line() { return FloatGrid({{-2.0, 2.0, 101}}); }

std::vector<double> FloatGrid::axis_points(std::size_t axis) const {
  const GridAxis& ax = axes_.at(axis);
  std::vector<double> out(ax.count);
  const double span = ax.stop - ax.start;
  const double last = static_cast<double>(ax.count - 1);
  for (std::size_t i = 0; i < ax.count; ++i) out[i] = ax.start + span * (static_cast<double>(i) / last);
  out.back() = ax.stop;
  return out;
}

std::vector<std::vector<double>> FloatGrid::points() const {
  std::vector<std::vector<double>> out{{}};
  for (std::size_t a = 0; a < axes_.size(); ++a) {
    std::vector<std::vector<double>> next;
    for (const auto& prefix : out) {
      for (double v : axis_points(a)) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::function<double(double)> float_profile(const RidgeProfile& profile) {
  std::vector<double> c;
  auto accumulate = [&c](const UniPoly& u) {
    if (c.size() < u.coeffs().size()) c.resize(u.coeffs().size(), 0.0);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i) c[i] += to_float(u.coeffs()[i]);
  };
  accumulate(profile.smooth());
  if (profile.wild()) {
    const KNumber one(profile.basis(), 1);
    accumulate(restrict_to_Q(*profile.wild(), std::span<const KNumber>(&one, 1)).along_line(std::vector{one}));
  }
  return [c = std::move(c)](double t) {
    double v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
  };
}

namespace {

using DVec = std::vector<double>;

}  // namespace

FloatReport float_extract_check(const RidgeSum& s, std::size_t target, std::span<const KNumber> steps,
                                const FloatGrid& grid, double tol) {
  if (!(tol >= 0)) throw UsageError("tolerance must be non-negative");
  const auto dirs = s.directions();
  const std::size_t k = dirs.size();
  if (target >= k) throw UsageError("target index out of range");
  if (steps.size() + 1 != k) throw UsageError("extractor needs exactly k-1 steps");

  // Float replica in ridge coordinates. The difference operator is linear, so
  // each term is differenced along its own line: term j sits at slope_j * t and
  // step i moves it by shift[i][j] = a_j . lambda_i b_i. The geometry is exact
  // and rounded once; profiles are evaluated and combined in doubles.
  std::vector<std::function<double(double)>> fprofiles;
  for (const auto& term : s.terms()) fprofiles.push_back(float_profile(term.profile));

  const KVector& a = dirs[target].components();
  const KNumber norm2 = dot(a, a);
  DVec slope(k);
  for (std::size_t j = 0; j < k; ++j) slope[j] = to_float(dot(dirs[j].components(), a) / norm2);
  std::vector<DVec> shift(k, DVec(k - 1));
  std::size_t step = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (i == target) continue;
    const KVector b = orthogonal_witness(dirs[i], dirs[target]).components();
    const KNumber lambda = steps[step] / dot(a, b);
    for (std::size_t j = 0; j < k; ++j) shift[j][step] = to_float(lambda * dot(dirs[j].components(), b));
    ++step;
  }
  auto add = [](double p, double d) { return p + d; };
  auto approx_at = [&](double t) {
    double v = 0;
    for (std::size_t j = 0; j < k; ++j)
      v += iterated_difference(fprofiles[j], std::span<const double>(shift[j]), slope[j] * t, add);
    return v;
  };

  const MultivariateFn exact_f = [&s](std::span<const KNumber> x) { return s(x); };
  FloatReport report;
  report.tol = tol;
  for (double t : grid.axis_points(0)) {
    const double approx = approx_at(t);
    const KNumber exact_t(s.basis(), rational_from_double(t));
    const double exact = to_float(extract_component_difference(exact_f, dirs, target, steps, exact_t));
    const double err = std::abs(exact - approx);
    report.rows.push_back({t, exact, approx, err});
    report.max_abs_err = std::max(report.max_abs_err, err);
  }
  report.pass = report.max_abs_err <= tol;
  return report;
}

SmoothnessReport smoothness_probe(const std::function<double(double)>& f, unsigned j, const FloatGrid& grid,
                                  double h) {
  if (!(h > 0)) throw UsageError("probe step must be positive");
  const DVec steps(j + 1, h);
  const double norm = std::pow(h, static_cast<double>(j + 1));
  auto add = [](double p, double d) { return p + d; };
  SmoothnessReport report;
  for (double t : grid.axis_points(0)) {
    const double v = std::abs(iterated_difference(f, std::span<const double>(steps), t, add)) / norm;
    report.values.push_back(v);
    report.max_normalized = std::max(report.max_normalized, v);
  }
  return report;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const FloatReport& report) {
  os << "t,exact,float,abs_err\n";
  for (const auto& r : report.rows) {
    os << format_double(r.t) << ',' << format_double(r.exact) << ',' << format_double(r.approx) << ','
       << format_double(r.abs_err) << '\n';
  }
}

}  // namespace ridgecalc
