#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "ridgecalc/linalg.hpp"
#include "ridgecalc/multiadditive.hpp"
#include "ridgecalc/polyfunc.hpp"
#include "ridgecalc/polymultivar.hpp"
#include "ridgecalc/unipoly.hpp"

namespace ridgecalc {

/// Nonzero vector a in K^n; the ridge function is t -> profile(a . x).
class Direction {
 public:
  explicit Direction(KVector components);

  const KVector& components() const { return components_; }
  std::size_t dim() const { return components_.size(); }
  const KNumber& operator[](std::size_t i) const { return components_[i]; }
  const BasisPtr& basis() const { return components_.front().basis(); }

  friend bool operator==(const Direction& a, const Direction& b) { return a.components_ == b.components_; }

 private:
  KVector components_;
};

/// f_i = g_i + H_i: an ordinary polynomial plus an optional polynomial
/// function of order <= k-1. The wild part is normalized to H_i(0) = 0 by
/// dropping its constant term, which is moved into the smooth part so the
/// profile's values are unchanged.
class RidgeProfile {
 public:
  RidgeProfile(UniPoly smooth, std::optional<PolyFunc> wild = std::nullopt);

  const UniPoly& smooth() const { return smooth_; }
  const std::optional<PolyFunc>& wild() const { return wild_; }
  const BasisPtr& basis() const { return smooth_.basis(); }

  KNumber operator()(const KNumber& t) const;

 private:
  UniPoly smooth_;
  std::optional<PolyFunc> wild_;
};

struct RidgeTerm {
  Direction direction;
  RidgeProfile profile;
};

/// f(x) = sum_i f_i(a^i . x) on K^n with pairwise independent directions.
class RidgeSum {
 public:
  /// Throws UsageError on dimension/basis mismatch and GeometryError when
  /// two directions are linearly dependent.
  RidgeSum(BasisPtr basis, std::size_t n, std::vector<RidgeTerm> terms);

  const BasisPtr& basis() const { return basis_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return terms_.size(); }
  const std::vector<RidgeTerm>& terms() const { return terms_; }
  std::vector<Direction> directions() const;

  KNumber operator()(std::span<const KNumber> x) const;

 private:
  BasisPtr basis_;
  std::size_t n_;
  std::vector<RidgeTerm> terms_;
};

using MultivariateFn = std::function<KNumber(std::span<const KNumber>)>;

KNumber eval_ridge_sum(const RidgeSum& s, std::span<const KNumber> x);

/// True iff every pair of directions has a nonzero 2x2 minor.
bool pairwise_check(std::span<const Direction> directions);

/// b with b . a_j = 0 and b . a_k != 0: the first vector of the orthogonal
/// complement basis of a_j (see orthogonal_complement) that is not
/// orthogonal to a_k. Throws GeometryError when a_j, a_k are dependent.
Direction orthogonal_witness(const Direction& a_j, const Direction& a_k);

/// Delta_{h_1..h_{k-1}} f_target(t), computed only from evaluations of f.
///
/// For each non-target direction a^j (in index order) a witness b^j kills the
/// j-th ridge term; moving along lambda_j b^j with lambda_j = h_j / (a^T . b^j)
/// shifts the target argument by exactly h_j. Evaluating at
/// x = a^T t / |a^T|^2 makes that argument t. With k = 1 this is f(a^1 t / |a^1|^2).
KNumber extract_component_difference(const MultivariateFn& f, std::span<const Direction> directions,
                                     std::size_t target, std::span<const KNumber> steps, const KNumber& t);

struct CertificateOptions {
  std::size_t rational_points = 50;
  std::size_t irrational_points = 50;
  std::uint64_t seed = 0;
};

struct Certificate {
  std::size_t rational_points = 0;
  /// Identity held exactly at every rational sample.
  bool exact = false;
  std::size_t irrational_points = 0;
  /// Identity held at every irrational K sample. Sampled, not proven.
  bool extends_beyond_Q = false;
};

struct SmoothDecomposition {
  std::vector<UniPoly> g;
  PolyMultivar p;
  /// P_i = restriction of H_i(a^i . x) to Q^n (zero when H_i is absent).
  std::vector<PolyMultivar> parts;
  Certificate certificate;
};

/// f(x) = sum_i g_i(a^i . x) + P(x) with P = sum_i restrict_to_Q(H_i, a^i).
SmoothDecomposition smooth_decomposition(const RidgeSum& s, const CertificateOptions& opts = {});

/// Checks f(x) == sum_i g_i(a^i . x) + P(x) at one point.
bool reconstruction_holds(const RidgeSum& s, std::span<const UniPoly> g, const PolyMultivar& p,
                          std::span<const KNumber> x);

/// Univariate p_i with sum_i p_i(a_i x + b_i y) = P(x, y), solved degree by
/// degree; free unknowns (k > e + 1) are zero, so the leading directions carry
/// the solution. Throws InfeasibleError when some homogeneous part is not in
/// the span (always possible when k <= deg P), GeometryError on dependent
/// directions.
std::vector<UniPoly> ridge_poly_decompose(const PolyMultivar& p, std::span<const Direction> directions);

struct Rationalization {
  /// Directions b^i = T a^i (rational) with profiles g_i + L_i.
  RidgeSum rational_sum;
  /// The original directions a^i with profiles g_i + L_i; no wild parts and
  /// no residual polynomial.
  RidgeSum representation;
  std::vector<UniPoly> l;
  /// Rational samples are x = T^t y with y in Q^n, i.e. points where every
  /// a^i . x = b^i . y is rational.
  Certificate certificate;
};

/// Throws UsageError when T is singular or not n x n, PreconditionError when
/// some T a^i has an irrational component.
Rationalization rationalize(const RidgeSum& s, const KMatrix& t, const CertificateOptions& opts = {});

/// h(x) + h(y) - h(x + y) on directions (1,0), (0,1), (1,1); identically 0.
RidgeSum cfe_example(const AdditiveMap& a);

}  // namespace ridgecalc
