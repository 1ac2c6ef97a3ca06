#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ridgecalc/knumber.hpp"
#include "ridgecalc/polyfunc.hpp"
#include "ridgecalc/sampling.hpp"
#include "ridgecalc/unipoly.hpp"

namespace ridgecalc {

/// Deterministic evaluator K -> K.
using PointwiseFn = std::function<KNumber(const KNumber&)>;

PointwiseFn as_pointwise(PolyFunc f);
PointwiseFn as_pointwise(UniPoly u);
PointwiseFn as_pointwise(AdditiveMap a);
PointwiseFn constant_fn(KNumber c);
PointwiseFn product_fn(PointwiseFn a, PointwiseFn b);
PointwiseFn difference_fn(PointwiseFn a, PointwiseFn b);

/// Delta_{h_1..h_k} f(x) from f at the 2^k vertices x + sum_{i in S} h_i,
/// collapsed one step at a time as in Delta_{h_k}(Delta_{h_1..h_{k-1}} f).
/// Nesting matters for doubles: equal vertex values cancel exactly, where a
/// flat signed sum would leave rounding residue.
/// Generic in the point type so the same routine serves K, K^n and doubles.
template <class Point, class Eval, class AddPoint>
auto iterated_difference(Eval&& f, std::span<const Point> steps, const Point& x, AddPoint&& add_point) {
  const std::size_t k = steps.size();
  std::vector<Point> points(std::size_t{1} << k, x);
  for (std::size_t mask = 1; mask < points.size(); ++mask) {
    // Vertex for mask = vertex for (mask without its lowest bit) + that step.
    const std::size_t low = mask & (~mask + 1);
    points[mask] = add_point(points[mask ^ low], steps[static_cast<std::size_t>(std::countr_zero(low))]);
  }
  using Value = decltype(f(x));
  std::vector<Value> values;
  values.reserve(points.size());
  for (const auto& p : points) values.push_back(f(p));
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t bit = std::size_t{1} << i;
    for (std::size_t mask = 0; mask < values.size(); ++mask)
      if (!(mask & bit)) values[mask] = values[mask | bit] - values[mask];
  }
  return values.front();
}

KNumber diff(const PointwiseFn& f, const KNumber& h, const KNumber& x);
/// Empty `steps` gives f(x).
KNumber diff_multi(const PointwiseFn& f, std::span<const KNumber> steps, const KNumber& x);
KNumber diff_pow(const PointwiseFn& f, const KNumber& h, unsigned j, const KNumber& x);

/// Delta_h(g1 g2) == g1 Delta_h g2 + g2 Delta_h g1 + Delta_h g1 Delta_h g2 at x.
bool diff_product_check(const PointwiseFn& g1, const PointwiseFn& g2, const KNumber& h, const KNumber& x);

/// True iff Delta_{h_1..h_{k+1}} f(x) = 0 for `trials` random draws of pairwise
/// distinct steps and x (seeded; default seed 0).
bool poly_order_check(const PolyFunc& f, unsigned k, unsigned trials, std::uint64_t seed = 0);
bool poly_order_check(const PolyFunc& f, unsigned k, unsigned trials, Rng& rng);

/// x -> f(x - floor(x)).
PointwiseFn mod1_periodize(PointwiseFn f);

/// Inputs to the telescoping check for f = smooth + wild:
///   f is normalized so that f(0) = f(1) by subtracting (f(1) - f(0)) x,
///   H1 = Delta_1(wild) - Delta_1(wild)(0) (so H1(0) = 0), H2 = antidifference(H1),
///   g1 = Delta_1(f - H2), which is the ordinary polynomial Delta_1(smooth part).
struct TelescopeSetup {
  PointwiseFn f;
  PolyFunc h2;
  PointwiseFn g1;
};

TelescopeSetup make_telescope_setup(const UniPoly& smooth, const PolyFunc& wild);

/// With F2 = f - H2 and F = F2 - mod1_periodize(F2), checks at x that
///   F(x) = sum_{j=1..m} g1(x - j)        for x in [m, m+1), m >= 1,
///   F(x) = 0                             for x in [0, 1),
///   F(x) = -sum_{j=0..|m|-1} g1(x + j)   for x in [m, m+1), m <= -1.
/// Throws UsageError when f(0) != f(1) or H2(0) != 0 or H2(1) != 0.
bool bruijn_telescope_check(const PointwiseFn& f, const PolyFunc& h2, const PointwiseFn& g1, const KNumber& x);

}  // namespace ridgecalc
