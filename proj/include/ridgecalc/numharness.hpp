#pragma once

#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "ridgecalc/knumber.hpp"
#include "ridgecalc/ridge.hpp"

namespace ridgecalc {

constexpr double kDefaultTolerance = 1e-8;

/// Double near a. Refines the interval enclosure until its width is below
/// 2^-precision_bits relative to the midpoint, then rounds the midpoint.
/// Throws UsageError when precision_bits < 53.
double to_float(const KNumber& a, unsigned precision_bits = 64);

struct GridAxis {
  double start;
  double stop;
  std::size_t count;
};

/// Tensor grid of evenly spaced points, one axis per dimension.
class FloatGrid {
 public:
  /// Throws UsageError unless count >= 2 and start < stop on every axis.
  explicit FloatGrid(std::vector<GridAxis> axes);

  /// 101 points in [-2, 2].
  static FloatGrid default_line();

  std::size_t dim() const { return axes_.size(); }
  const std::vector<GridAxis>& axes() const { return axes_; }
  std::vector<double> axis_points(std::size_t axis) const;
  /// Cartesian product, last axis fastest.
  std::vector<std::vector<double>> points() const;

 private:
  std::vector<GridAxis> axes_;
};

struct FloatRow {
  double t;
  double exact;
  double approx;
  double abs_err;
};

struct FloatReport {
  std::vector<FloatRow> rows;
  double max_abs_err = 0;
  double tol = 0;
  bool pass = false;
};

/// Profile of one ridge term in doubles: the smooth part plus the wild part's
/// polynomial restriction to Q, with coefficients rounded by to_float.
std::function<double(double)> float_profile(const RidgeProfile& profile);

/// Double-precision replica of the extractor over the first axis of `grid`
/// (t values), against to_float of the exact extractor at the exact rational
/// value of each t. Throws UsageError when tol < 0.
FloatReport float_extract_check(const RidgeSum& s, std::size_t target, std::span<const KNumber> steps,
                                const FloatGrid& grid, double tol = kDefaultTolerance);

struct SmoothnessReport {
  /// max over the grid of |Delta_h^{j+1} f(t)| / h^{j+1}
  double max_normalized = 0;
  std::vector<double> values;
};

/// Throws UsageError when h <= 0.
SmoothnessReport smoothness_probe(const std::function<double(double)>& f, unsigned j, const FloatGrid& grid,
                                  double h);

/// 17 significant digits, '.' decimal point regardless of locale.
std::string format_double(double v);

/// Header `t,exact,float,abs_err`, one line per row.
void write_csv(std::ostream& os, const FloatReport& report);

}  // namespace ridgecalc
