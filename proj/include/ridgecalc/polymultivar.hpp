#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "ridgecalc/knumber.hpp"
#include "ridgecalc/unipoly.hpp"

namespace ridgecalc {

using Exponent = std::vector<unsigned>;

/// Multivariate polynomial over K in `nvars` indeterminates, stored as a
/// sparse map from exponent multi-index to nonzero coefficient.
class PolyMultivar {
 public:
  using Terms = std::map<Exponent, KNumber>;

  PolyMultivar(BasisPtr basis, std::size_t nvars);

  /// The monomial x_var.
  static PolyMultivar variable(BasisPtr basis, std::size_t nvars, std::size_t var);
  static PolyMultivar constant(const KNumber& c, std::size_t nvars);
  /// sum_i coeffs[i] * x_i
  static PolyMultivar linear_form(std::span<const KNumber> coeffs);

  const BasisPtr& basis() const { return basis_; }
  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  KNumber coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const KNumber& c);

  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;

  KNumber operator()(std::span<const KNumber> x) const;

  PolyMultivar& operator+=(const PolyMultivar& rhs);
  PolyMultivar& operator-=(const PolyMultivar& rhs);
  friend PolyMultivar operator+(PolyMultivar a, const PolyMultivar& b) { return a += b; }
  friend PolyMultivar operator-(PolyMultivar a, const PolyMultivar& b) { return a -= b; }
  PolyMultivar operator*(const PolyMultivar& rhs) const;
  PolyMultivar scaled(const KNumber& s) const;
  PolyMultivar pow(unsigned e) const;

  /// u(t) = P(c * t).
  UniPoly along_line(std::span<const KNumber> c) const;

  friend bool operator==(const PolyMultivar& a, const PolyMultivar& b);

  std::string to_string() const;

 private:
  void require_compatible(const PolyMultivar& rhs) const;

  BasisPtr basis_;
  std::size_t nvars_;
  Terms terms_;
};

/// u(a . x) expanded as a polynomial in x.
PolyMultivar compose_with_linear_form(const UniPoly& u, std::span<const KNumber> a);

}  // namespace ridgecalc
