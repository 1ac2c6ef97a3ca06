#include "ridgecalc/polyfunc.hpp"

#include <numeric>

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

PolyFunc::PolyFunc(BasisPtr basis, unsigned order) : basis_(std::move(basis)), constant_(basis_) {
  grow_to(order);
}

PolyFunc::PolyFunc(KNumber constant, std::vector<MultiAdditiveSym> terms)
    : basis_(constant.basis()), constant_(std::move(constant)) {
  for (const auto& t : terms) add_term(t);
}

PolyFunc PolyFunc::constant(const KNumber& c) { return PolyFunc(c, {}); }

PolyFunc PolyFunc::from_additive(const AdditiveMap& a) {
  return PolyFunc(KNumber(a.basis()), {MultiAdditiveSym::from_additive(a)});
}

PolyFunc PolyFunc::from_form(const MultiAdditiveSym& f) {
  if (f.order() == 0) return constant(f.entry({}));
  return PolyFunc(KNumber(f.basis()), {f});
}

PolyFunc PolyFunc::from_unipoly(const UniPoly& u) {
  PolyFunc f(u.basis(), static_cast<unsigned>(std::max(u.degree(), 0)));
  f.set_constant(u.coeff(0));
  for (int m = 1; m <= u.degree(); ++m) {
    f.add_term(MultiAdditiveSym::monomial(u.coeff(static_cast<unsigned>(m)), static_cast<unsigned>(m)));
  }
  return f;
}

void PolyFunc::grow_to(unsigned order) {
  while (terms_.size() < order) terms_.emplace_back(basis_, static_cast<unsigned>(terms_.size() + 1));
}

unsigned PolyFunc::effective_order() const {
  for (unsigned m = order(); m >= 1; --m) {
    if (!terms_[m - 1].is_zero()) return m;
  }
  return 0;
}

bool PolyFunc::is_zero() const { return constant_.is_zero() && effective_order() == 0; }

void PolyFunc::set_constant(const KNumber& c) {
  if (!same_basis(c.basis(), basis_)) throw UsageError("PolyFunc constant on a different basis");
  constant_ = c;
}

const MultiAdditiveSym& PolyFunc::term(unsigned m) const {
  if (m == 0 || m > order()) throw UsageError("PolyFunc term order out of range");
  return terms_[m - 1];
}

void PolyFunc::add_term(const MultiAdditiveSym& f) {
  if (!same_basis(f.basis(), basis_)) throw UsageError("PolyFunc term on a different basis");
  if (f.order() == 0) {
    constant_ += f.entry({});
    return;
  }
  grow_to(f.order());
  terms_[f.order() - 1] += f;
}

KNumber PolyFunc::operator()(const KNumber& x) const {
  if (!same_basis(x.basis(), basis_)) throw UsageError("PolyFunc evaluated on a different basis");
  KNumber sum = constant_;
  for (const auto& t : terms_) {
    if (!t.is_zero()) sum += t.diagonal(x);
  }
  return sum;
}

PolyFunc& PolyFunc::operator+=(const PolyFunc& rhs) {
  if (!same_basis(basis_, rhs.basis_)) throw UsageError("PolyFuncs on different bases");
  constant_ += rhs.constant_;
  grow_to(rhs.order());
  for (const auto& t : rhs.terms_) terms_[t.order() - 1] += t;
  return *this;
}

PolyFunc& PolyFunc::operator-=(const PolyFunc& rhs) { return *this += rhs.scaled(KNumber(basis_, -1)); }

PolyFunc PolyFunc::scaled(const KNumber& s) const {
  PolyFunc out(basis_, order());
  out.constant_ = constant_ * s;
  for (std::size_t i = 0; i < terms_.size(); ++i) out.terms_[i] = terms_[i].scaled(s);
  return out;
}

PolyFunc PolyFunc::times_x() const {
  PolyFunc out(basis_, order() + 1);
  if (!constant_.is_zero()) out.add_term(MultiAdditiveSym::monomial(constant_, 1));
  for (const auto& t : terms_) {
    if (!t.is_zero()) out.add_term(t.times_x());
  }
  return out;
}

PolyFunc PolyFunc::times_poly(std::span<const Rational> coeffs) const {
  const unsigned deg = coeffs.empty() ? 0 : static_cast<unsigned>(coeffs.size() - 1);
  PolyFunc out(basis_, order() + deg);
  PolyFunc power = *this;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j] != 0) out += power.scaled(KNumber(basis_, coeffs[j]));
    if (j + 1 < coeffs.size()) power = power.times_x();
  }
  return out;
}

bool operator==(const PolyFunc& a, const PolyFunc& b) {
  if (!same_basis(a.basis_, b.basis_) || a.constant_ != b.constant_) return false;
  const unsigned n = std::max(a.order(), b.order());
  for (unsigned m = 1; m <= n; ++m) {
    const bool za = m > a.order() || a.terms_[m - 1].is_zero();
    const bool zb = m > b.order() || b.terms_[m - 1].is_zero();
    if (za != zb) return false;
    if (!za && !(a.terms_[m - 1] == b.terms_[m - 1])) return false;
  }
  return true;
}

KNumber eval_polyfunc(const PolyFunc& f, const KNumber& x) { return f(x); }

PolyFunc shift_reduce(const PolyFunc& f, const KNumber& h) {
  const unsigned k = f.order();
  PolyFunc out(f.basis(), k == 0 ? 0 : k - 1);
  for (unsigned m = 1; m <= k; ++m) {
    const auto& form = f.term(m);
    if (form.is_zero()) continue;
    for (unsigned i = 1; i <= m; ++i) {
      const KNumber c(f.basis(), Rational(binomial(m, i)));
      out.add_term(form.fix_slots(h, i).scaled(c));
    }
  }
  return out;
}

namespace {

// x (x+1) ... (x+i) / (i+1)!, ascending coefficients.
std::vector<Rational> rising_factorial_poly(unsigned i) {
  std::vector<Rational> p{0, 1};
  for (unsigned j = 1; j <= i; ++j) {
    std::vector<Rational> next(p.size() + 1, 0);
    for (std::size_t d = 0; d < p.size(); ++d) {
      next[d] += p[d] * j;
      next[d + 1] += p[d];
    }
    p = std::move(next);
  }
  const Rational norm = Rational(1) / Rational(factorial(i + 1));
  for (auto& c : p) c *= norm;
  return p;
}

}  // namespace

PolyFunc antidifference(const PolyFunc& f) {
  const unsigned k = f.order();
  const KNumber one(f.basis(), 1);
  PolyFunc h = f.times_x();
  PolyFunc diff = f;
  for (unsigned i = 1; i <= k; ++i) {
    diff = shift_reduce(diff, one);
    if (diff.is_zero()) break;
    const auto coeffs = rising_factorial_poly(i);
    PolyFunc term = diff.times_poly(coeffs);
    if (i % 2 == 1) {
      h -= term;
    } else {
      h += term;
    }
  }
  PolyFunc out(f.basis(), k + 1);
  out += h;
  return out;
}

PolyMultivar restrict_to_Q(const PolyFunc& f, std::span<const KNumber> xis) {
  const std::size_t p = xis.size();
  if (p == 0) throw UsageError("restrict_to_Q needs at least one xi");
  for (const auto& xi : xis) {
    if (!same_basis(xi.basis(), f.basis())) throw UsageError("xi on a different basis");
  }
  PolyMultivar g(f.basis(), p);
  g.add_term(Exponent(p, 0), f.constant_term());

  for (unsigned m = 1; m <= f.order(); ++m) {
    const auto& form = f.term(m);
    if (form.is_zero()) continue;
    const Integer m_fact = factorial(m);
    Exponent s(p, 0);
    auto rec = [&](auto&& self, std::size_t var, unsigned left) -> void {
      if (var + 1 == p) {
        s[var] = left;
        std::vector<std::pair<KNumber, unsigned>> groups;
        Integer denom = 1;
        for (std::size_t j = 0; j < p; ++j) {
          if (s[j] == 0) continue;
          groups.emplace_back(xis[j], s[j]);
          denom *= factorial(s[j]);
        }
        const Rational multinomial = Rational(m_fact) / Rational(denom);
        g.add_term(s, form.eval_grouped(groups) * multinomial);
        return;
      }
      for (unsigned c = 0; c <= left; ++c) {
        s[var] = c;
        self(self, var + 1, left - c);
      }
    };
    rec(rec, 0, m);
  }
  return g;
}

PolyFunc random_polyfunc(const BasisPtr& basis, unsigned order, Rng& rng, const PolyFuncSampling& opts) {
  std::bernoulli_distribution keep(opts.density);
  PolyFunc f(basis, order);
  f.set_constant(random_knumber(basis, rng, opts.values));
  const auto dim = static_cast<BasisKey>(basis->dimension());
  for (unsigned m = 1; m <= order; ++m) {
    MultiAdditiveSym form(basis, m);
    const auto tuples = sorted_key_tuples(dim, m);
    for (const auto& keys : tuples) {
      if (keep(rng)) form.set_entry(keys, random_knumber(basis, rng, opts.values));
    }
    if (m == order) {
      while (form.is_zero()) {
        const auto& keys = tuples[static_cast<std::size_t>(random_int(rng, 0, static_cast<long>(tuples.size()) - 1))];
        form.set_entry(keys, random_knumber(basis, rng, opts.values));
      }
    }
    f.add_term(form);
  }
  return f;
}

}  // namespace ridgecalc
