#pragma once

#include <span>
#include <vector>

#include "ridgecalc/knumber.hpp"
#include "ridgecalc/multiadditive.hpp"
#include "ridgecalc/polymultivar.hpp"
#include "ridgecalc/sampling.hpp"
#include "ridgecalc/unipoly.hpp"

namespace ridgecalc {

/// Polynomial function of order k on K: f(x) = f0 + sum_{m=1..k} F_m(x, ..., x)
/// with F_m symmetric m-additive. Every such f satisfies Delta_h^{k+1} f = 0.
class PolyFunc {
 public:
  PolyFunc(BasisPtr basis, unsigned order);
  /// Order is the largest term order; a missing order is a zero form.
  PolyFunc(KNumber constant, std::vector<MultiAdditiveSym> terms);

  static PolyFunc constant(const KNumber& c);
  static PolyFunc from_additive(const AdditiveMap& a);
  static PolyFunc from_form(const MultiAdditiveSym& f);
  /// Lifts an ordinary polynomial: c_m t^m becomes the form c_m x_1 ... x_m.
  static PolyFunc from_unipoly(const UniPoly& u);

  const BasisPtr& basis() const { return basis_; }
  /// Declared order k (an upper bound; see effective_order()).
  unsigned order() const { return static_cast<unsigned>(terms_.size()); }
  /// Largest m with F_m != 0 (0 for constants).
  unsigned effective_order() const;
  bool is_zero() const;

  const KNumber& constant_term() const { return constant_; }
  void set_constant(const KNumber& c);
  /// Form of order m, 1 <= m <= order().
  const MultiAdditiveSym& term(unsigned m) const;
  void add_term(const MultiAdditiveSym& f);

  KNumber operator()(const KNumber& x) const;

  PolyFunc& operator+=(const PolyFunc& rhs);
  PolyFunc& operator-=(const PolyFunc& rhs);
  friend PolyFunc operator+(PolyFunc a, const PolyFunc& b) { return a += b; }
  friend PolyFunc operator-(PolyFunc a, const PolyFunc& b) { return a -= b; }
  PolyFunc scaled(const KNumber& s) const;
  /// x -> x * f(x), order + 1.
  PolyFunc times_x() const;
  /// x -> u(x) * f(x) for a rational-coefficient polynomial u.
  PolyFunc times_poly(std::span<const Rational> coeffs) const;

  friend bool operator==(const PolyFunc& a, const PolyFunc& b);

 private:
  void grow_to(unsigned order);

  BasisPtr basis_;
  KNumber constant_;
  std::vector<MultiAdditiveSym> terms_;  // terms_[m-1] has order m
};

KNumber eval_polyfunc(const PolyFunc& f, const KNumber& x);

/// The PolyFunc of order max(k-1, 0) equal pointwise to Delta_h f:
/// Delta_h F_m(x,..,x) = sum_{i=1..m} C(m,i) F_m(x^{(m-i)}, h^{(i)}).
PolyFunc shift_reduce(const PolyFunc& f, const KNumber& h);

/// H of order k+1 with H(0) = 0 and H(x+1) - H(x) = f(x):
/// H(x) = x f(x) + sum_{i=1..k} (-1)^i x(x+1)...(x+i)/(i+1)! Delta_1^i f(x).
PolyFunc antidifference(const PolyFunc& f);

/// g(q_1..q_p) = f(xi_1 q_1 + ... + xi_p q_p) on Q^p as an ordinary polynomial:
/// coefficient of q^s is m!/(s_1!..s_p!) F_m(xi_1^{(s_1)}, ..., xi_p^{(s_p)}).
PolyMultivar restrict_to_Q(const PolyFunc& f, std::span<const KNumber> xis);

struct PolyFuncSampling {
  SampleBounds values{5, 4};
  /// Probability that any given form entry is nonzero.
  double density = 0.6;
};

/// Random PolyFunc of declared order k whose top form is nonzero (k >= 1).
/// Form entries are independent, so the result is wild with probability ~1.
PolyFunc random_polyfunc(const BasisPtr& basis, unsigned order, Rng& rng, const PolyFuncSampling& opts = {});

}  // namespace ridgecalc
