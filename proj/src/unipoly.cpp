#include "ridgecalc/unipoly.hpp"

#include <sstream>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

UniPoly::UniPoly(BasisPtr basis) : basis_(std::move(basis)) {}

UniPoly::UniPoly(BasisPtr basis, std::vector<KNumber> coeffs)
    : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!same_basis(c.basis(), basis_)) throw UsageError("polynomial coefficient on a different basis");
  }
  trim();
}

UniPoly::UniPoly(BasisPtr basis, std::initializer_list<Rational> coeffs) : basis_(std::move(basis)) {
  for (const auto& q : coeffs) coeffs_.emplace_back(basis_, q);
  trim();
}

UniPoly UniPoly::monomial(const KNumber& c, unsigned degree) {
  std::vector<KNumber> coeffs(degree + 1, KNumber(c.basis()));
  coeffs[degree] = c;
  return UniPoly(c.basis(), std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

KNumber UniPoly::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : KNumber(basis_);
}

KNumber UniPoly::operator()(const KNumber& t) const {
  KNumber acc(basis_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (!same_basis(basis_, rhs.basis_)) throw UsageError("polynomials on different bases");
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), KNumber(basis_));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) { return *this += -rhs; }

UniPoly UniPoly::operator*(const UniPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return UniPoly(basis_);
  std::vector<KNumber> out(coeffs_.size() + rhs.coeffs_.size() - 1, KNumber(basis_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  return UniPoly(basis_, std::move(out));
}

UniPoly UniPoly::scaled(const KNumber& s) const {
  std::vector<KNumber> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c * s);
  return UniPoly(basis_, std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const UniPoly& a, const UniPoly& b) {
  return same_basis(a.basis_, b.basis_) && a.coeffs_ == b.coeffs_;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[i] << ")";
    if (i == 1) os << "*" << var;
    if (i > 1) os << "*" << var << "^" << i;
  }
  return os.str();
}

}  // namespace ridgecalc
