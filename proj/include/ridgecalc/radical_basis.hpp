#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ridgecalc/rational.hpp"

namespace ridgecalc {

/// Subset of radicand indices, bit i set <=> sqrt(d_i) is a factor.
/// Key 0 is the rational unit.
using BasisKey = std::uint32_t;

inline constexpr std::size_t kDefaultMaxRadicals = 4;

/// The Q-basis {prod_{i in S} sqrt(d_i) : S subset of radicands} of
/// K = Q(sqrt d_1, ..., sqrt d_r).
///
/// Radicands must be square-free, >= 2, strictly increasing, and no nonempty
/// subset may multiply to a perfect square. The last condition is what makes
/// the 2^r products linearly independent over Q (e.g. [2, 3, 6] is rejected
/// because sqrt2*sqrt3 = sqrt6).
class RadicalBasis {
 public:
  static std::shared_ptr<const RadicalBasis> make(std::vector<long> radicands,
                                                  std::size_t max_radicals = kDefaultMaxRadicals);

  const std::vector<long>& radicands() const { return radicands_; }
  std::size_t rank() const { return radicands_.size(); }
  std::size_t dimension() const { return std::size_t{1} << radicands_.size(); }

  /// Integer product of the radicands in `key` (1 for the empty subset).
  const Integer& product(BasisKey key) const { return products_[key]; }

  /// sqrt(prod a) * sqrt(prod b) = square_factor(a & b) * sqrt(prod (a ^ b)).
  static BasisKey product_key(BasisKey a, BasisKey b) { return a ^ b; }
  const Integer& square_factor(BasisKey common) const { return products_[common]; }

  /// Inverse of product(): decimal radicand product -> key.
  std::optional<BasisKey> key_for_product(const Integer& product) const;

  /// "1", "sqrt2", "sqrt6", ...
  std::string key_label(BasisKey key) const;

  bool operator==(const RadicalBasis& other) const { return radicands_ == other.radicands_; }

 private:
  explicit RadicalBasis(std::vector<long> radicands);

  std::vector<long> radicands_;
  std::vector<Integer> products_;
};

using BasisPtr = std::shared_ptr<const RadicalBasis>;

bool same_basis(const BasisPtr& a, const BasisPtr& b);

}  // namespace ridgecalc
