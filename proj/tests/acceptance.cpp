// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ridgecalc/difference.hpp"
#include "ridgecalc/numharness.hpp"
#include "ridgecalc/polymultivar.hpp"
#include "ridgecalc/ridge.hpp"
#include "support.hpp"

using namespace ridgecalc;
using namespace ridgecalc::testing_support;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

PolyFunc random_order_k(const BasisPtr& b, unsigned k, Rng& rng) {
  if (k == 0) return PolyFunc::constant(random_nonzero(b, rng));
  return random_polyfunc(b, k, rng);
}

// ---------------------------------------------------------------- 1

Outcome cfe_pathology() {
  const auto b = basis_of({2});
  const AdditiveMap a = AdditiveMap::coordinate(b, 1);
  const RidgeSum s = cfe_example(a);
  Rng rng = make_rng(1);
  std::size_t zeros = 0;
  for (int i = 0; i < 1000; ++i) {
    if (s(random_kvector(b, 2, rng)).is_zero()) ++zeros;
  }
  const KNumber one(b, 1), root = kn(b, "sqrt2");
  const bool wild = a(one) * root != a(root) * one;
  return {zeros == 1000 && wild, std::to_string(zeros) + "/1000 points exactly 0; A(1)*sqrt2 " +
                                     (wild ? "!=" : "==") + " A(sqrt2)*1"};
}

// ---------------------------------------------------------------- 2, 3

std::vector<std::pair<unsigned, PolyFunc>> closure_corpus() {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(2);
  std::vector<std::pair<unsigned, PolyFunc>> out;
  for (unsigned i = 0; i < 200; ++i) {
    const unsigned k = i % 5;
    out.emplace_back(k, random_order_k(b, k, rng));
  }
  return out;
}

Outcome order_closure(const std::vector<std::pair<unsigned, PolyFunc>>& corpus) {
  Rng rng = make_rng(3);
  std::size_t ok = 0;
  for (const auto& [k, f] : corpus) {
    const bool at_k = poly_order_check(f, k, 3, rng);
    const bool below = k == 0 || f.is_zero() || !poly_order_check(f, k - 1, 3, rng);
    if (at_k && below) ++ok;
  }
  return {ok == corpus.size(), std::to_string(ok) + "/" + std::to_string(corpus.size()) +
                                   " PolyFuncs pass at order k and fail at k-1"};
}

Outcome antidifference_check(const std::vector<std::pair<unsigned, PolyFunc>>& corpus) {
  Rng rng = make_rng(4);
  std::size_t ok = 0;
  for (const auto& [k, f] : corpus) {
    const auto& b = f.basis();
    const PolyFunc h = antidifference(f);
    bool good = h(KNumber(b)).is_zero();
    for (int i = 0; good && i < 50; ++i) {
      const KNumber x = random_knumber(b, rng);
      good = h(x + KNumber(b, 1)) - h(x) == f(x);
    }
    good = good && poly_order_check(h, k + 1, 2, rng);
    if (good) ++ok;
  }
  return {ok == corpus.size(), std::to_string(ok) + "/" + std::to_string(corpus.size()) +
                                   " antidifferences with H(0)=0, Delta_1 H = f at 50 points, order k+1"};
}

// ---------------------------------------------------------------- 4

Outcome restriction() {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(5);
  std::size_t ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const unsigned k = static_cast<unsigned>(trial % 5);
    const std::size_t p = static_cast<std::size_t>(trial % 3) + 1;
    const PolyFunc f = random_order_k(b, k, rng);
    const KVector xi = random_kvector(b, p, rng);
    const PolyMultivar g = restrict_to_Q(f, xi);
    bool good = g.total_degree() <= static_cast<int>(k);
    for (int i = 0; good && i < 50; ++i) {
      const KVector q = random_rational_vector(b, p, rng);
      good = g(q) == f(dot(xi, q));
    }
    if (good) ++ok;
  }
  return {ok == 100, std::to_string(ok) + "/100 restrictions match direct evaluation at 50 rational vectors"};
}

// ---------------------------------------------------------------- 5

Outcome extractor() {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(6);
  std::size_t ok = 0, degenerate = 0, degenerate_ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = static_cast<std::size_t>(trial % 4) + 1;
    const std::size_t n = k == 1 ? static_cast<std::size_t>(trial % 3) + 1 : static_cast<std::size_t>(trial % 2) + 2;
    const auto dirs = random_directions(b, n, k, rng);
    const std::size_t target = static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(k) - 1));
    // Every fourth sum with k >= 3 gets a purely wild additive target.
    const bool additive_target = k >= 3 && trial % 4 == 2;
    std::vector<RidgeTerm> terms;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == target && additive_target) {
        AdditiveMap a(b);
        for (BasisKey key = 0; key < 4; ++key) a.set_image(key, random_knumber(b, rng));
        terms.push_back({dirs[i], RidgeProfile(UniPoly(b), PolyFunc::from_additive(a))});
        continue;
      }
      std::optional<PolyFunc> wild;
      if (k > 1 && random_int(rng, 0, 2) > 0) wild = random_polyfunc(b, static_cast<unsigned>(random_int(rng, 1, static_cast<long>(k) - 1)), rng);
      terms.push_back({dirs[i], RidgeProfile(random_unipoly(b, static_cast<int>(random_int(rng, 0, 3)), rng), wild)});
    }
    const RidgeSum s(b, n, std::move(terms));
    const auto steps = random_nonzero_steps(b, k - 1, rng);
    const KNumber t = random_knumber(b, rng);
    const auto& profile = s.terms()[target].profile;
    const KNumber expected = naive_difference([&profile](const KNumber& u) { return profile(u); }, steps, t);
    const MultivariateFn f = [&s](std::span<const KNumber> x) { return s(x); };
    const KNumber got = extract_component_difference(f, dirs, target, steps, t);
    if (got == expected) ++ok;
    if (additive_target) {
      ++degenerate;
      if (got.is_zero()) ++degenerate_ok;
    }
  }
  return {ok == 100 && degenerate_ok == degenerate,
          std::to_string(ok) + "/100 extractions equal the direct difference; " + std::to_string(degenerate_ok) + "/" +
              std::to_string(degenerate) + " additive targets give 0"};
}

// ---------------------------------------------------------------- 6

// Random rational 2 x n matrix of rank 2; directions a in K^2 become M^t a.
KMatrix random_rank2(const BasisPtr& b, std::size_t n, Rng& rng) {
  for (;;) {
    KMatrix m(2, KVector{});
    for (auto& row : m) row = random_rational_vector(b, n, rng);
    const std::vector<Direction> rows_as_dirs = [&] {
      std::vector<Direction> d;
      if (!is_zero_vector(m[0]) && !is_zero_vector(m[1])) {
        d.emplace_back(m[0]);
        d.emplace_back(m[1]);
      }
      return d;
    }();
    if (rows_as_dirs.size() == 2 && pairwise_check(rows_as_dirs)) return m;
  }
}

RidgeSum cancelling_sum(const BasisPtr& b, int trial, Rng& rng) {
  const KNumber zero(b), one(b, 1), minus_one(b, -1), minus_two(b, -2);
  const std::size_t n = static_cast<std::size_t>(trial % 2) + 2;
  const KMatrix m = random_rank2(b, n, rng);
  const KMatrix mt = transpose(m);
  std::vector<std::pair<KVector, PolyFunc>> base;
  if (trial % 2 == 0) {
    AdditiveMap a(b);
    for (BasisKey key = 0; key < b->dimension(); ++key) a.set_image(key, random_knumber(b, rng));
    const PolyFunc h = PolyFunc::from_additive(a);
    base = {{{one, zero}, h}, {{zero, one}, h}, {{one, one}, h.scaled(minus_one)}};
  } else {
    const PolyFunc q = PolyFunc::from_form(random_polyfunc(b, 2, rng).term(2));
    base = {{{one, one}, q},
            {{one, minus_one}, q},
            {{one, zero}, q.scaled(minus_two)},
            {{zero, one}, q.scaled(minus_two)}};
  }
  const unsigned max_order = static_cast<unsigned>(base.size()) - 1;
  std::vector<RidgeTerm> terms;
  for (auto& [a, wild] : base) {
    // Rational rescaling c of a direction is absorbed by the profile:
    // H(t / c) for the order-m form is H(t) / c^m.
    const Rational c = random_nonzero_rational(rng, {3, 3});
    Rational factor = 1;
    for (unsigned i = 0; i < wild.effective_order(); ++i) factor /= c;
    PolyFunc lifted = wild.scaled(KNumber(b, factor));
    lifted += PolyFunc::from_unipoly(random_unipoly(b, static_cast<int>(max_order), rng));
    const KVector scaled = scale(a, KNumber(b, c));
    terms.push_back({Direction(mat_vec(mt, scaled)), RidgeProfile(random_unipoly(b, 3, rng), lifted)});
  }
  return RidgeSum(b, n, std::move(terms));
}

Outcome smoothing() {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(7);
  std::size_t ok = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const RidgeSum s = cancelling_sum(b, trial, rng);
    const auto d = smooth_decomposition(s, {200, 200, static_cast<std::uint64_t>(trial)});
    const bool degree_ok = d.p.total_degree() <= static_cast<int>(s.k()) - 1;
    if (degree_ok && d.certificate.exact && d.certificate.extends_beyond_Q && d.certificate.rational_points == 200 &&
        d.certificate.irrational_points == 200) {
      ++ok;
    }
  }
  return {ok == 100, std::to_string(ok) +
                         "/100 cancelling sums: deg P <= k-1, exact at 200 rational and 200 irrational points"};
}

// ---------------------------------------------------------------- 7

Outcome ridge_polynomials() {
  const auto b = basis_of({});
  Rng rng = make_rng(8);
  std::size_t ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int d = trial % 4;
    PolyMultivar p(b, 2);
    for (int e = 0; e <= d; ++e) {
      for (int s = 0; s <= e; ++s) {
        p.add_term({static_cast<unsigned>(e - s), static_cast<unsigned>(s)}, random_rational_knumber(b, rng));
      }
    }
    const auto dirs = random_directions(b, 2, static_cast<std::size_t>(d) + 1, rng, true);
    const auto parts = ridge_poly_decompose(p, dirs);
    PolyMultivar sum(b, 2);
    for (std::size_t i = 0; i < parts.size(); ++i) sum += compose_with_linear_form(parts[i], dirs[i].components());
    if (sum == p) ++ok;
  }
  PolyMultivar xy(b, 2);
  xy.add_term({1, 1}, KNumber(b, 1));
  const std::vector<Direction> dirs{dir(b, {"1", "0"}), dir(b, {"0", "1"}), dir(b, {"1", "1"})};
  const auto parts = ridge_poly_decompose(xy, dirs);
  const bool xy_ok = parts[0] == UniPoly(b, {0, 0, Rational(-1, 2)}) &&
                     parts[1] == UniPoly(b, {0, 0, Rational(-1, 2)}) && parts[2] == UniPoly(b, {0, 0, Rational(1, 2)});
  return {ok == 50 && xy_ok, std::to_string(ok) + "/50 polynomials reconstructed; xy = ((x+y)^2 - x^2 - y^2)/2 " +
                                 (xy_ok ? "recovered" : "NOT recovered")};
}

// ---------------------------------------------------------------- 8

Outcome rationalization() {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(9);
  std::size_t ok = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = static_cast<std::size_t>(trial % 2) + 2;
    const std::size_t k = static_cast<std::size_t>(trial % 3) + 2;
    KMatrix t;
    do {
      t.assign(n, KVector{});
      for (auto& row : t) row = random_kvector(b, n, rng);
    } while (determinant(t).is_zero());
    const KMatrix t_inv = inverse(t);
    const auto rational_dirs = random_directions(b, n, k, rng, true);
    std::vector<RidgeTerm> terms;
    for (const auto& bd : rational_dirs) {
      std::optional<PolyFunc> wild;
      if (random_int(rng, 0, 3) > 0) wild = random_polyfunc(b, static_cast<unsigned>(random_int(rng, 1, 3)), rng);
      terms.push_back({Direction(mat_vec(t_inv, bd.components())), RidgeProfile(random_unipoly(b, 2, rng), wild)});
    }
    const RidgeSum s(b, n, std::move(terms));
    const auto r = rationalize(s, t, {200, 0, static_cast<std::uint64_t>(trial)});

    bool good = r.certificate.exact;
    for (const auto& term : r.representation.terms()) good = good && !term.profile.wild().has_value();
    for (std::size_t i = 0; i < k; ++i) good = good && r.rational_sum.terms()[i].direction == rational_dirs[i];
    const KMatrix tt = transpose(t);
    for (int i = 0; good && i < 200; ++i) {
      const KVector y = random_rational_vector(b, n, rng);
      const KVector x = mat_vec(tt, y);
      good = r.representation(x) == s(x) && r.rational_sum(y) == s(x);
    }
    if (good) ++ok;
  }
  return {ok == 50, std::to_string(ok) + "/50 rationalizations residual-free and exact at 200 rational points"};
}

// ---------------------------------------------------------------- 9

Outcome float_harness() {
  const auto b = basis_of({2, 3});
  Rng rng = make_rng(10);
  const FloatGrid grid = FloatGrid::default_line();
  double worst = 0;
  std::size_t ok = 0, sums = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = static_cast<std::size_t>(trial % 4) + 1;
    const std::size_t n = k == 1 ? 1 : 2;
    const auto dirs = random_directions(b, n, k, rng, false, {2, 2});
    std::vector<RidgeTerm> terms;
    for (std::size_t i = 0; i < k; ++i) {
      // Each coordinate up to 150, so |coefficient| < 150 (1 + sqrt2 + sqrt3 + sqrt6) < 10^3.
      UniPoly smooth = random_unipoly(b, 3, rng, {150, 1});
      std::optional<PolyFunc> wild;
      if (k > 1 && trial % 3 == 0) wild = random_polyfunc(b, static_cast<unsigned>(k - 1), rng);
      terms.push_back({dirs[i], RidgeProfile(std::move(smooth), wild)});
    }
    const RidgeSum s(b, n, std::move(terms));
    std::vector<KNumber> steps;
    for (std::size_t i = 0; i + 1 < k; ++i) steps.emplace_back(b, random_nonzero_rational(rng, {4, 4}));
    for (std::size_t target = 0; target < k; ++target) {
      ++sums;
      const auto report = float_extract_check(s, target, steps, grid, kDefaultTolerance);
      worst = std::max(worst, report.max_abs_err);
      if (report.pass) ++ok;
    }
  }

  std::size_t tele_ok = 0, tele_total = 0;
  for (int rep = 0; rep < 4; ++rep) {
    const auto setup = make_telescope_setup(random_unipoly(b, 3, rng), random_polyfunc(b, 3, rng));
    for (int m = -1; m <= 3; ++m) {
      for (int i = 0; i < 50; ++i) {
        const KNumber r = random_knumber(b, rng);
        const KNumber x = r - KNumber(b, Rational(floor(r))) + KNumber(b, m);
        ++tele_total;
        if (bruijn_telescope_check(setup.f, setup.h2, setup.g1, x)) ++tele_ok;
      }
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", worst);
  return {ok == sums && tele_ok == tele_total,
          std::to_string(ok) + "/" + std::to_string(sums) + " float extractions within 1e-8 (max deviation " + buf +
              "); telescoping exact at " + std::to_string(tele_ok) + "/" + std::to_string(tele_total) + " points"};
}

}  // namespace

int main() {
  const auto corpus = closure_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"CFE pathology", cfe_pathology},
      {"polynomial-function closure", [&] { return order_closure(corpus); }},
      {"antidifference", [&] { return antidifference_check(corpus); }},
      {"restriction to Q", restriction},
      {"component extractor", extractor},
      {"smooth decomposition", smoothing},
      {"ridge-polynomial decomposition", ridge_polynomials},
      {"rationalization", rationalization},
      {"float harness and telescoping", float_harness},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("criterion %zu %s: %s: %s (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
