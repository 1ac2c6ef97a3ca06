#pragma once

#include <map>
#include <ostream>
#include <string>

#include "ridgecalc/radical_basis.hpp"
#include "ridgecalc/rational.hpp"

namespace ridgecalc {

/// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  bool contains_zero() const { return lo <= 0 && hi >= 0; }
};

/// An element of K = Q(sqrt d_1, ..., sqrt d_r) in coordinates over the
/// radical product basis. Zero coordinates are never stored, so two values
/// are equal iff their coordinate maps are equal.
class KNumber {
 public:
  using Coords = std::map<BasisKey, Rational>;

  explicit KNumber(BasisPtr basis);
  KNumber(BasisPtr basis, const Rational& q);
  KNumber(BasisPtr basis, long q);

  /// c * sqrt(prod key)
  static KNumber basis_element(BasisPtr basis, BasisKey key, const Rational& c = 1);

  const BasisPtr& basis() const { return basis_; }
  const Coords& coords() const { return coords_; }
  Rational coord(BasisKey key) const;
  void set_coord(BasisKey key, const Rational& value);

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const;
  /// Rational part; only meaningful when is_rational().
  Rational rational_value() const { return coord(0); }

  KNumber& operator+=(const KNumber& rhs);
  KNumber& operator-=(const KNumber& rhs);
  KNumber& operator*=(const KNumber& rhs);
  KNumber& operator*=(const Rational& rhs);
  KNumber& operator/=(const KNumber& rhs);

  friend KNumber operator+(KNumber a, const KNumber& b) { return a += b; }
  friend KNumber operator-(KNumber a, const KNumber& b) { return a -= b; }
  friend KNumber operator*(KNumber a, const KNumber& b) { return a *= b; }
  friend KNumber operator*(KNumber a, const Rational& q) { return a *= q; }
  friend KNumber operator*(const Rational& q, KNumber a) { return a *= q; }
  friend KNumber operator/(KNumber a, const KNumber& b) { return a /= b; }
  KNumber operator-() const;

  /// a += q * b without a temporary.
  KNumber& add_scaled(const KNumber& b, const Rational& q);

  friend bool operator==(const KNumber& a, const KNumber& b);
  friend bool operator!=(const KNumber& a, const KNumber& b) { return !(a == b); }

  /// Human-readable form, e.g. "1/2 + 3*sqrt2 - sqrt6".
  std::string to_string() const;

 private:
  void require_same_basis(const KNumber& other) const;

  BasisPtr basis_;
  Coords coords_;
};

std::ostream& operator<<(std::ostream& os, const KNumber& a);

/// Exact inverse via the multiplication-by-a matrix. Throws DivisionByZero.
KNumber inv(const KNumber& a);

/// Outward-rounded enclosure using sqrt(d) bounds with `frac_bits` fractional bits.
Interval enclose(const KNumber& a, unsigned frac_bits);

/// Exact sign: 0 iff every coordinate is zero, otherwise refines the
/// enclosure (64, 128, 256, ... bits) until it excludes zero.
int sign(const KNumber& a);

int compare(const KNumber& a, const KNumber& b);

/// Greatest integer n with n <= a.
Integer floor(const KNumber& a);

/// Parses the text form used on the command line: a sum of terms such as
/// "3/2", "-sqrt2", "1/3*sqrt6", "2sqrt(3)". Throws ParseError.
KNumber parse_knumber(const BasisPtr& basis, std::string_view text);

}  // namespace ridgecalc
