#include "ridgecalc/difference.hpp"

#include <algorithm>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

PointwiseFn as_pointwise(PolyFunc f) {
  return [f = std::move(f)](const KNumber& x) { return f(x); };
}

PointwiseFn as_pointwise(UniPoly u) {
  return [u = std::move(u)](const KNumber& x) { return u(x); };
}

PointwiseFn as_pointwise(AdditiveMap a) {
  return [a = std::move(a)](const KNumber& x) { return a(x); };
}

PointwiseFn constant_fn(KNumber c) {
  return [c = std::move(c)](const KNumber&) { return c; };
}

PointwiseFn product_fn(PointwiseFn a, PointwiseFn b) {
  return [a = std::move(a), b = std::move(b)](const KNumber& x) { return a(x) * b(x); };
}

PointwiseFn difference_fn(PointwiseFn a, PointwiseFn b) {
  return [a = std::move(a), b = std::move(b)](const KNumber& x) { return a(x) - b(x); };
}

namespace {

KNumber add_points(const KNumber& a, const KNumber& b) { return a + b; }

}  // namespace

KNumber diff(const PointwiseFn& f, const KNumber& h, const KNumber& x) { return f(x + h) - f(x); }

KNumber diff_multi(const PointwiseFn& f, std::span<const KNumber> steps, const KNumber& x) {
  return iterated_difference(f, steps, x, add_points);
}

KNumber diff_pow(const PointwiseFn& f, const KNumber& h, unsigned j, const KNumber& x) {
  const std::vector<KNumber> steps(j, h);
  return diff_multi(f, steps, x);
}

bool diff_product_check(const PointwiseFn& g1, const PointwiseFn& g2, const KNumber& h, const KNumber& x) {
  const KNumber lhs = diff(product_fn(g1, g2), h, x);
  const KNumber d1 = diff(g1, h, x);
  const KNumber d2 = diff(g2, h, x);
  return lhs == g1(x) * d2 + g2(x) * d1 + d1 * d2;
}

bool poly_order_check(const PolyFunc& f, unsigned k, unsigned trials, Rng& rng) {
  if (trials == 0) throw UsageError("poly_order_check needs at least one trial");
  const auto fn = as_pointwise(f);
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<KNumber> steps;
    while (steps.size() < k + 1) {
      KNumber h = random_knumber(f.basis(), rng);
      if (h.is_zero() || std::find(steps.begin(), steps.end(), h) != steps.end()) continue;
      steps.push_back(std::move(h));
    }
    const KNumber x = random_knumber(f.basis(), rng);
    if (!diff_multi(fn, steps, x).is_zero()) return false;
  }
  return true;
}

bool poly_order_check(const PolyFunc& f, unsigned k, unsigned trials, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return poly_order_check(f, k, trials, rng);
}

PointwiseFn mod1_periodize(PointwiseFn f) {
  return [f = std::move(f)](const KNumber& x) {
    return f(x - KNumber(x.basis(), Rational(floor(x))));
  };
}

namespace {

// u(t+1) - u(t)
UniPoly forward_difference(const UniPoly& u) {
  const BasisPtr& basis = u.basis();
  UniPoly shifted(basis);
  const UniPoly t_plus_one(basis, {1, 1});
  UniPoly power(basis, {1});
  for (const auto& c : u.coeffs()) {
    shifted += power.scaled(c);
    power = power * t_plus_one;
  }
  return shifted - u;
}

}  // namespace

TelescopeSetup make_telescope_setup(const UniPoly& smooth, const PolyFunc& wild) {
  const BasisPtr& basis = wild.basis();
  const KNumber zero(basis);
  const KNumber one(basis, 1);
  const KNumber slope = (smooth(one) + wild(one)) - (smooth(zero) + wild(zero));

  PolyFunc h1 = shift_reduce(wild, one);
  const KNumber h1_at_zero = h1.constant_term();
  h1.set_constant(zero);
  PolyFunc h2 = antidifference(h1);

  const UniPoly linear = UniPoly::monomial(slope, 1);
  PointwiseFn f = [smooth, wild, linear](const KNumber& x) { return smooth(x) + wild(x) - linear(x); };
  UniPoly g1 = forward_difference(smooth) + UniPoly(basis, {h1_at_zero - slope});
  return {std::move(f), std::move(h2), as_pointwise(std::move(g1))};
}

bool bruijn_telescope_check(const PointwiseFn& f, const PolyFunc& h2, const PointwiseFn& g1, const KNumber& x) {
  const BasisPtr& basis = x.basis();
  const KNumber zero(basis);
  const KNumber one(basis, 1);
  if (f(zero) != f(one)) throw UsageError("telescope check requires f(0) = f(1)");
  if (!h2(zero).is_zero() || !h2(one).is_zero()) throw UsageError("telescope check requires H2(0) = H2(1) = 0");

  const PointwiseFn f2 = difference_fn(f, as_pointwise(h2));
  const PointwiseFn periodic = mod1_periodize(f2);
  const KNumber big_f = f2(x) - periodic(x);

  const Integer m = floor(x);
  KNumber expected(basis);
  if (m > 0) {
    for (Integer j = 1; j <= m; ++j) expected += g1(x - KNumber(basis, Rational(j)));
  } else if (m < 0) {
    for (Integer j = 0; j < -m; ++j) expected -= g1(x + KNumber(basis, Rational(j)));
  }
  return big_f == expected;
}

}  // namespace ridgecalc
