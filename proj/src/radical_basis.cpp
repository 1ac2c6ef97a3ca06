#include "ridgecalc/radical_basis.hpp"

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

namespace {

bool is_square_free(long d) {
  for (long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

}  // namespace

RadicalBasis::RadicalBasis(std::vector<long> radicands) : radicands_(std::move(radicands)) {
  const std::size_t dim = std::size_t{1} << radicands_.size();
  products_.assign(dim, Integer(1));
  for (std::size_t key = 1; key < dim; ++key) {
    Integer p = 1;
    for (std::size_t i = 0; i < radicands_.size(); ++i) {
      if (key & (std::size_t{1} << i)) p *= radicands_[i];
    }
    products_[key] = p;
  }
}

std::shared_ptr<const RadicalBasis> RadicalBasis::make(std::vector<long> radicands,
                                                       std::size_t max_radicals) {
  if (radicands.size() > max_radicals) {
    throw UsageError("too many radicands: " + std::to_string(radicands.size()) + " > " +
                     std::to_string(max_radicals));
  }
  for (std::size_t i = 0; i < radicands.size(); ++i) {
    const long d = radicands[i];
    if (d < 2) throw UsageError("radicand " + std::to_string(d) + " must be >= 2");
    if (!is_square_free(d)) throw UsageError("radicand " + std::to_string(d) + " is not square-free");
    if (i > 0 && radicands[i - 1] >= d) {
      throw UsageError("radicands must be pairwise distinct and strictly increasing");
    }
  }
  std::shared_ptr<const RadicalBasis> basis(new RadicalBasis(std::move(radicands)));
  // No square subset product <=> the 2^r products are Q-independent (and,
  // in particular, pairwise distinct, so decimal keys are unambiguous).
  for (BasisKey key = 1; key < basis->dimension(); ++key) {
    if (mpz_perfect_square_p(basis->product(key).get_mpz_t())) {
      throw UsageError("radicands are not multiplicatively independent (a subset multiplies to the square " +
                       basis->product(key).get_str() + ")");
    }
  }
  return basis;
}

std::optional<BasisKey> RadicalBasis::key_for_product(const Integer& product) const {
  for (BasisKey key = 0; key < dimension(); ++key) {
    if (products_[key] == product) return key;
  }
  return std::nullopt;
}

std::string RadicalBasis::key_label(BasisKey key) const {
  if (key == 0) return "1";
  return "sqrt" + products_[key].get_str();
}

bool same_basis(const BasisPtr& a, const BasisPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace ridgecalc
