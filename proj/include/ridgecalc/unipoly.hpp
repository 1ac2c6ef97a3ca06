#pragma once

#include <string>
#include <vector>

#include "ridgecalc/knumber.hpp"

namespace ridgecalc {

/// Univariate polynomial with K coefficients, ascending order, no trailing
/// zero coefficients.
class UniPoly {
 public:
  explicit UniPoly(BasisPtr basis);
  UniPoly(BasisPtr basis, std::vector<KNumber> coeffs);
  /// Rational coefficients, ascending.
  UniPoly(BasisPtr basis, std::initializer_list<Rational> coeffs);

  static UniPoly monomial(const KNumber& c, unsigned degree);

  const BasisPtr& basis() const { return basis_; }
  const std::vector<KNumber>& coeffs() const { return coeffs_; }
  KNumber coeff(unsigned i) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }

  KNumber operator()(const KNumber& t) const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  UniPoly operator*(const UniPoly& rhs) const;
  UniPoly scaled(const KNumber& s) const;
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();

  BasisPtr basis_;
  std::vector<KNumber> coeffs_;
};

}  // namespace ridgecalc
