#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ridgecalc/knumber.hpp"

namespace ridgecalc {

/// Nondecreasing tuple of basis keys; indexes one value of a symmetric form.
using KeyTuple = std::vector<BasisKey>;

/// A Q-additive map K -> K given by its images on the radical basis.
/// Anything other than c*x (c = A(1)) is a "wild" solution of Cauchy's
/// equation restricted to K.
class AdditiveMap {
 public:
  explicit AdditiveMap(BasisPtr basis);
  AdditiveMap(BasisPtr basis, std::map<BasisKey, KNumber> images);

  /// x -> c * x.
  static AdditiveMap scalar(const KNumber& c);
  /// x -> coordinate of x on `key`; with key = sqrt2 this is the classic
  /// wild map with A(1) = 0, A(sqrt2) = 1.
  static AdditiveMap coordinate(const BasisPtr& basis, BasisKey key);

  const BasisPtr& basis() const { return basis_; }
  const std::map<BasisKey, KNumber>& images() const { return images_; }
  KNumber image(BasisKey key) const;
  void set_image(BasisKey key, const KNumber& value);

  KNumber operator()(const KNumber& x) const;

  /// True iff some basis element e has A(e) != A(1) * e, i.e. A is not x -> c*x.
  bool is_wild() const;

  friend bool operator==(const AdditiveMap& a, const AdditiveMap& b);

 private:
  BasisPtr basis_;
  std::map<BasisKey, KNumber> images_;
};

/// Symmetric m-additive form K^m -> K, stored by its values on sorted basis
/// key tuples. Evaluation expands each argument in coordinates, so the form
/// is Q-multilinear by construction. Order 0 is a constant (key tuple []).
class MultiAdditiveSym {
 public:
  using Entries = std::map<KeyTuple, KNumber>;

  MultiAdditiveSym(BasisPtr basis, unsigned order);

  /// (x_1, ..., x_m) -> c * x_1 * ... * x_m, whose diagonal is c * x^m.
  static MultiAdditiveSym monomial(const KNumber& c, unsigned order);
  static MultiAdditiveSym from_additive(const AdditiveMap& a);

  unsigned order() const { return order_; }
  const BasisPtr& basis() const { return basis_; }
  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  /// Value on basis elements; `keys` need not be sorted.
  KNumber entry(KeyTuple keys) const;
  void set_entry(KeyTuple keys, const KNumber& value);

  KNumber operator()(std::span<const KNumber> args) const;

  /// F(x_1 repeated s_1 times, ..., x_p repeated s_p times); the counts must
  /// sum to order().
  KNumber eval_grouped(std::span<const std::pair<KNumber, unsigned>> groups) const;

  /// F(x, ..., x)
  KNumber diagonal(const KNumber& x) const;

  /// (x_1..x_{m-s}) -> F(x_1, ..., x_{m-s}, h, ..., h) with s copies of h.
  MultiAdditiveSym fix_slots(const KNumber& h, unsigned slots) const;

  /// The symmetric (m+1)-form whose diagonal is x * F(x, ..., x):
  /// (1/(m+1)) sum_j x_j F(x_1, .., x^_j, .., x_{m+1}).
  MultiAdditiveSym times_x() const;

  MultiAdditiveSym& operator+=(const MultiAdditiveSym& rhs);
  MultiAdditiveSym scaled(const KNumber& s) const;

  friend bool operator==(const MultiAdditiveSym& a, const MultiAdditiveSym& b);

 private:
  void require_compatible(const MultiAdditiveSym& rhs) const;

  BasisPtr basis_;
  unsigned order_;
  Entries entries_;
};

/// All nondecreasing tuples of length `size` over keys [0, dim).
std::vector<KeyTuple> sorted_key_tuples(BasisKey dim, unsigned size);

}  // namespace ridgecalc
