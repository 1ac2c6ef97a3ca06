#pragma once

#include <gmpxx.h>

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ridgecalc/knumber.hpp"
#include "ridgecalc/linalg.hpp"
#include "ridgecalc/multiadditive.hpp"
#include "ridgecalc/polyfunc.hpp"
#include "ridgecalc/ridge.hpp"
#include "ridgecalc/sampling.hpp"
#include "ridgecalc/unipoly.hpp"

namespace ridgecalc::testing_support {

inline BasisPtr basis_of(std::vector<long> radicals) { return RadicalBasis::make(std::move(radicals)); }

inline KNumber kn(const BasisPtr& b, const std::string& text) { return parse_knumber(b, text); }

inline KVector kvec(const BasisPtr& b, std::initializer_list<const char*> items) {
  KVector v;
  for (const char* s : items) v.push_back(kn(b, s));
  return v;
}

inline Direction dir(const BasisPtr& b, std::initializer_list<const char*> items) { return Direction(kvec(b, items)); }

/// Delta_{h_1..h_k} f(x) straight from the recursive definition
/// Delta_{h_1..h_k} f(x) = D(x + h_k) - D(x) with D = Delta_{h_1..h_{k-1}} f.
inline KNumber naive_difference(const std::function<KNumber(const KNumber&)>& f, std::span<const KNumber> steps,
                                const KNumber& x) {
  if (steps.empty()) return f(x);
  const auto head = steps.first(steps.size() - 1);
  return naive_difference(f, head, x + steps.back()) - naive_difference(f, head, x);
}

/// High-precision float value using GMP's mpf square roots; independent of the
/// interval enclosure code.
inline mpf_class mpf_value(const KNumber& a, unsigned bits = 1024) {
  mpf_class sum(0, bits);
  const auto& rad = a.basis()->radicands();
  for (const auto& [key, c] : a.coords()) {
    mpf_class term(c, bits);
    for (std::size_t i = 0; i < rad.size(); ++i) {
      if (key & (BasisKey{1} << i)) {
        mpf_class d(rad[i], bits);
        term *= sqrt(d);
      }
    }
    sum += term;
  }
  return sum;
}

inline int mpf_sign(const KNumber& a) { return sgn(mpf_value(a)); }

inline KNumber random_nonzero(const BasisPtr& b, Rng& rng) {
  for (;;) {
    KNumber v = random_knumber(b, rng);
    if (!v.is_zero()) return v;
  }
}

inline KVector random_kvector(const BasisPtr& b, std::size_t n, Rng& rng, const SampleBounds& bounds = {}) {
  KVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_knumber(b, rng, bounds));
  return v;
}

inline KVector random_rational_vector(const BasisPtr& b, std::size_t n, Rng& rng) {
  KVector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational_knumber(b, rng));
  return v;
}

inline UniPoly random_unipoly(const BasisPtr& b, int degree, Rng& rng, const SampleBounds& bounds = {5, 4}) {
  std::vector<KNumber> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_knumber(b, rng, bounds));
  return UniPoly(b, std::move(c));
}

/// k pairwise independent random directions in K^n (n >= 2, or n = 1 with k = 1).
inline std::vector<Direction> random_directions(const BasisPtr& b, std::size_t n, std::size_t k, Rng& rng,
                                                bool rational = false, const SampleBounds& bounds = {}) {
  for (;;) {
    std::vector<Direction> out;
    for (std::size_t i = 0; i < k; ++i) {
      KVector v = rational ? random_rational_vector(b, n, rng) : random_kvector(b, n, rng, bounds);
      if (is_zero_vector(v)) break;
      out.emplace_back(std::move(v));
    }
    if (out.size() == k && pairwise_check(out)) return out;
  }
}

inline std::vector<KNumber> random_nonzero_steps(const BasisPtr& b, std::size_t count, Rng& rng) {
  std::vector<KNumber> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_nonzero(b, rng));
  return out;
}

}  // namespace ridgecalc::testing_support
