#include "ridgecalc/polymultivar.hpp"

#include <numeric>
#include <sstream>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

PolyMultivar::PolyMultivar(BasisPtr basis, std::size_t nvars) : basis_(std::move(basis)), nvars_(nvars) {
  if (!basis_) throw UsageError("PolyMultivar requires a radical basis");
}

PolyMultivar PolyMultivar::variable(BasisPtr basis, std::size_t nvars, std::size_t var) {
  if (var >= nvars) throw UsageError("variable index out of range");
  PolyMultivar p(basis, nvars);
  Exponent e(nvars, 0);
  e[var] = 1;
  p.add_term(e, KNumber(basis, 1));
  return p;
}

PolyMultivar PolyMultivar::constant(const KNumber& c, std::size_t nvars) {
  PolyMultivar p(c.basis(), nvars);
  p.add_term(Exponent(nvars, 0), c);
  return p;
}

PolyMultivar PolyMultivar::linear_form(std::span<const KNumber> coeffs) {
  if (coeffs.empty()) throw UsageError("linear form needs at least one coefficient");
  PolyMultivar p(coeffs.front().basis(), coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Exponent e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, coeffs[i]);
  }
  return p;
}

KNumber PolyMultivar::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? KNumber(basis_) : it->second;
}

void PolyMultivar::add_term(const Exponent& e, const KNumber& c) {
  if (e.size() != nvars_) throw UsageError("exponent arity does not match variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int PolyMultivar::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    deg = std::max(deg, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  }
  return deg;
}

KNumber PolyMultivar::operator()(std::span<const KNumber> x) const {
  if (x.size() != nvars_) throw UsageError("PolyMultivar evaluated at a point of the wrong dimension");
  KNumber sum(basis_);
  for (const auto& [e, c] : terms_) {
    KNumber term = c;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= x[i];
    }
    sum += term;
  }
  return sum;
}

void PolyMultivar::require_compatible(const PolyMultivar& rhs) const {
  if (nvars_ != rhs.nvars_) throw UsageError("polynomials have different variable counts");
  if (!same_basis(basis_, rhs.basis_)) throw UsageError("polynomials on different bases");
}

PolyMultivar& PolyMultivar::operator+=(const PolyMultivar& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

PolyMultivar& PolyMultivar::operator-=(const PolyMultivar& rhs) {
  require_compatible(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

PolyMultivar PolyMultivar::operator*(const PolyMultivar& rhs) const {
  require_compatible(rhs);
  PolyMultivar out(basis_, nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponent e(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

PolyMultivar PolyMultivar::scaled(const KNumber& s) const {
  PolyMultivar out(basis_, nvars_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * s);
  return out;
}

PolyMultivar PolyMultivar::pow(unsigned e) const {
  PolyMultivar out = constant(KNumber(basis_, 1), nvars_);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

UniPoly PolyMultivar::along_line(std::span<const KNumber> c) const {
  if (c.size() != nvars_) throw UsageError("line direction has the wrong dimension");
  std::vector<KNumber> coeffs(static_cast<std::size_t>(std::max(total_degree(), 0)) + 1, KNumber(basis_));
  for (const auto& [e, coef] : terms_) {
    KNumber term = coef;
    unsigned deg = 0;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) term *= c[i];
      deg += e[i];
    }
    coeffs[deg] += term;
  }
  return UniPoly(basis_, std::move(coeffs));
}

bool operator==(const PolyMultivar& a, const PolyMultivar& b) {
  return a.nvars_ == b.nvars_ && same_basis(a.basis_, b.basis_) && a.terms_ == b.terms_;
}

std::string PolyMultivar::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      os << "*x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

PolyMultivar compose_with_linear_form(const UniPoly& u, std::span<const KNumber> a) {
  PolyMultivar lin = PolyMultivar::linear_form(a);
  PolyMultivar out(u.basis(), a.size());
  PolyMultivar power = PolyMultivar::constant(KNumber(u.basis(), 1), a.size());
  for (std::size_t i = 0; i < u.coeffs().size(); ++i) {
    out += power.scaled(u.coeffs()[i]);
    power = power * lin;
  }
  return out;
}

}  // namespace ridgecalc
