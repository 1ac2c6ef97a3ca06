#include "ridgecalc/ridge.hpp"

#include "ridgecalc/difference.hpp"
#include "ridgecalc/errors.hpp"
#include "ridgecalc/sampling.hpp"

namespace ridgecalc {

// ------------------------------------------------------------------ types

Direction::Direction(KVector components) : components_(std::move(components)) {
  if (components_.empty()) throw UsageError("direction must have at least one component");
  for (const auto& c : components_) {
    if (!same_basis(c.basis(), components_.front().basis())) throw UsageError("direction components on different bases");
  }
  if (is_zero_vector(components_)) throw GeometryError("direction must not be the zero vector");
}

RidgeProfile::RidgeProfile(UniPoly smooth, std::optional<PolyFunc> wild)
    : smooth_(std::move(smooth)), wild_(std::move(wild)) {
  if (!wild_) return;
  if (!same_basis(wild_->basis(), smooth_.basis())) throw UsageError("profile parts on different bases");
  const KNumber c = wild_->constant_term();
  if (!c.is_zero()) {
    smooth_ += UniPoly(smooth_.basis(), {c});
    wild_->set_constant(KNumber(smooth_.basis()));
  }
}

KNumber RidgeProfile::operator()(const KNumber& t) const {
  KNumber v = smooth_(t);
  if (wild_) v += (*wild_)(t);
  return v;
}

RidgeSum::RidgeSum(BasisPtr basis, std::size_t n, std::vector<RidgeTerm> terms)
    : basis_(std::move(basis)), n_(n), terms_(std::move(terms)) {
  if (!basis_) throw UsageError("RidgeSum requires a radical basis");
  if (n_ == 0) throw UsageError("RidgeSum dimension must be positive");
  for (const auto& term : terms_) {
    if (term.direction.dim() != n_) throw UsageError("direction dimension does not match n");
    if (!same_basis(term.direction.basis(), basis_) || !same_basis(term.profile.basis(), basis_)) {
      throw UsageError("ridge term on a different basis");
    }
  }
  if (!pairwise_check(directions())) throw GeometryError("directions are not pairwise linearly independent");
}

std::vector<Direction> RidgeSum::directions() const {
  std::vector<Direction> out;
  out.reserve(terms_.size());
  for (const auto& term : terms_) out.push_back(term.direction);
  return out;
}

KNumber RidgeSum::operator()(std::span<const KNumber> x) const {
  if (x.size() != n_) throw UsageError("point dimension does not match the ridge sum");
  KNumber sum(basis_);
  for (const auto& term : terms_) sum += term.profile(dot(term.direction.components(), x));
  return sum;
}

KNumber eval_ridge_sum(const RidgeSum& s, std::span<const KNumber> x) { return s(x); }

// ------------------------------------------------------------- geometry

namespace {

bool independent(const Direction& a, const Direction& b) {
  if (a.dim() != b.dim()) throw UsageError("directions of different dimensions");
  for (std::size_t p = 0; p < a.dim(); ++p) {
    for (std::size_t q = p + 1; q < a.dim(); ++q) {
      if (a[p] * b[q] != a[q] * b[p]) return true;
    }
  }
  return false;
}

}  // namespace

bool pairwise_check(std::span<const Direction> directions) {
  for (std::size_t i = 0; i < directions.size(); ++i) {
    for (std::size_t j = i + 1; j < directions.size(); ++j) {
      if (!independent(directions[i], directions[j])) return false;
    }
  }
  return true;
}

Direction orthogonal_witness(const Direction& a_j, const Direction& a_k) {
  if (!independent(a_j, a_k)) throw GeometryError("orthogonal witness requested for dependent directions");
  for (auto& b : orthogonal_complement(a_j.components())) {
    if (!dot(b, a_k.components()).is_zero()) return Direction(std::move(b));
  }
  // Unreachable for independent inputs: a_k orthogonal to all of a_j's
  // complement would make it a multiple of a_j.
  throw GeometryError("no orthogonal witness found");
}

KNumber extract_component_difference(const MultivariateFn& f, std::span<const Direction> directions,
                                     std::size_t target, std::span<const KNumber> steps, const KNumber& t) {
  const std::size_t k = directions.size();
  if (target >= k) throw UsageError("target index out of range");
  if (steps.size() + 1 != k) throw UsageError("extractor needs exactly k-1 steps");
  if (!pairwise_check(directions)) throw GeometryError("directions are not pairwise linearly independent");

  const Direction& a = directions[target];
  const KNumber norm2 = dot(a.components(), a.components());
  const KVector x = scale(a.components(), t * inv(norm2));

  std::vector<KVector> displacements;
  displacements.reserve(k - 1);
  std::size_t step = 0;
  for (std::size_t j = 0; j < k; ++j) {
    if (j == target) continue;
    const Direction b = orthogonal_witness(directions[j], a);
    const KNumber lambda = steps[step++] / dot(a.components(), b.components());
    displacements.push_back(scale(b.components(), lambda));
  }
  auto add_points = [](const KVector& p, const KVector& d) { return add(p, d); };
  auto eval = [&f](const KVector& p) { return f(p); };
  return iterated_difference(eval, std::span<const KVector>(displacements), x, add_points);
}

// ------------------------------------------------------- decomposition

bool reconstruction_holds(const RidgeSum& s, std::span<const UniPoly> g, const PolyMultivar& p,
                          std::span<const KNumber> x) {
  if (g.size() != s.k()) throw UsageError("expected one smooth profile per ridge term");
  KNumber rhs = p(x);
  for (std::size_t i = 0; i < s.k(); ++i) rhs += g[i](dot(s.terms()[i].direction.components(), x));
  return s(x) == rhs;
}

namespace {

template <class Check>
Certificate run_certificate(const BasisPtr& basis, std::size_t n, const CertificateOptions& opts, Check&& holds) {
  Rng rng = make_rng(opts.seed);
  Certificate cert;
  cert.rational_points = opts.rational_points;
  cert.irrational_points = opts.irrational_points;
  cert.exact = true;
  for (std::size_t i = 0; i < opts.rational_points; ++i) {
    KVector y;
    for (std::size_t c = 0; c < n; ++c) y.push_back(random_rational_knumber(basis, rng));
    if (!holds(y)) {
      cert.exact = false;
      break;
    }
  }
  cert.extends_beyond_Q = true;
  for (std::size_t i = 0; i < opts.irrational_points; ++i) {
    KVector x;
    for (std::size_t c = 0; c < n; ++c) x.push_back(random_irrational(basis, rng));
    if (!holds(x)) {
      cert.extends_beyond_Q = false;
      break;
    }
  }
  return cert;
}

}  // namespace

SmoothDecomposition smooth_decomposition(const RidgeSum& s, const CertificateOptions& opts) {
  SmoothDecomposition out{{}, PolyMultivar(s.basis(), s.n()), {}, {}};
  for (const auto& term : s.terms()) {
    out.g.push_back(term.profile.smooth());
    if (term.profile.wild()) {
      out.parts.push_back(restrict_to_Q(*term.profile.wild(), term.direction.components()));
    } else {
      out.parts.emplace_back(s.basis(), s.n());
    }
    out.p += out.parts.back();
  }
  out.certificate = run_certificate(s.basis(), s.n(), opts, [&](const KVector& x) {
    return reconstruction_holds(s, out.g, out.p, x);
  });
  return out;
}

std::vector<UniPoly> ridge_poly_decompose(const PolyMultivar& p, std::span<const Direction> directions) {
  if (p.nvars() != 2) throw UsageError("ridge polynomial decomposition needs a bivariate polynomial");
  for (const auto& d : directions) {
    if (d.dim() != 2) throw UsageError("ridge polynomial decomposition needs directions in K^2");
  }
  if (!pairwise_check(directions)) throw GeometryError("directions are not pairwise linearly independent");
  const BasisPtr& basis = p.basis();
  const std::size_t k = directions.size();
  const int d = p.total_degree();
  std::vector<std::vector<KNumber>> coeffs(k, std::vector<KNumber>(static_cast<std::size_t>(std::max(d, 0)) + 1, KNumber(basis)));

  for (int e = 0; e <= d; ++e) {
    const auto ue = static_cast<unsigned>(e);
    KMatrix a(ue + 1, KVector(k, KNumber(basis)));
    KVector rhs;
    for (unsigned s = 0; s <= ue; ++s) {
      const KNumber binom(basis, Rational(binomial(ue, s)));
      for (std::size_t i = 0; i < k; ++i) {
        KNumber v = binom;
        for (unsigned j = 0; j < ue - s; ++j) v *= directions[i][0];
        for (unsigned j = 0; j < s; ++j) v *= directions[i][1];
        a[s][i] = v;
      }
      rhs.push_back(p.coeff({ue - s, s}));
    }
    auto sol = solve_prefer_leading(std::move(a), std::move(rhs));
    if (!sol) {
      throw InfeasibleError("degree-" + std::to_string(e) + " part is not a sum of ridge polynomials along " +
                            std::to_string(k) + " directions (need k >= deg P + 1 = " + std::to_string(d + 1) + ")");
    }
    for (std::size_t i = 0; i < k; ++i) coeffs[i][ue] = (*sol)[i];
  }
  std::vector<UniPoly> out;
  out.reserve(k);
  for (auto& c : coeffs) out.emplace_back(basis, std::move(c));
  return out;
}

// -------------------------------------------------------- rationalization

Rationalization rationalize(const RidgeSum& s, const KMatrix& t, const CertificateOptions& opts) {
  const std::size_t n = s.n();
  const BasisPtr& basis = s.basis();
  if (t.size() != n) throw UsageError("T must be n x n");
  for (const auto& row : t) {
    if (row.size() != n) throw UsageError("T must be n x n");
  }
  if (determinant(t).is_zero()) throw UsageError("T is singular");

  std::vector<RidgeTerm> rational_terms;
  std::vector<RidgeTerm> repr_terms;
  std::vector<UniPoly> ls;
  for (std::size_t i = 0; i < s.k(); ++i) {
    const auto& term = s.terms()[i];
    KVector b = mat_vec(t, term.direction.components());
    for (const auto& c : b) {
      if (!c.is_rational()) throw PreconditionError("T a^" + std::to_string(i + 1) + " has an irrational component");
    }
    UniPoly l(basis);
    if (term.profile.wild()) {
      const PolyMultivar p_i = restrict_to_Q(*term.profile.wild(), b);
      std::size_t lead = 0;
      while (b[lead].is_zero()) ++lead;
      KVector c(n, KNumber(basis));
      c[lead] = inv(b[lead]);
      l = p_i.along_line(c);
    }
    const UniPoly profile = term.profile.smooth() + l;
    rational_terms.push_back({Direction(b), RidgeProfile(profile)});
    repr_terms.push_back({term.direction, RidgeProfile(profile)});
    ls.push_back(std::move(l));
  }

  Rationalization out{RidgeSum(basis, n, std::move(rational_terms)), RidgeSum(basis, n, std::move(repr_terms)),
                      std::move(ls), {}};
  const KMatrix tt = transpose(t);
  Rng rng = make_rng(opts.seed);
  Certificate cert;
  cert.rational_points = opts.rational_points;
  cert.exact = true;
  for (std::size_t i = 0; i < opts.rational_points; ++i) {
    KVector y;
    for (std::size_t c = 0; c < n; ++c) y.push_back(random_rational_knumber(basis, rng));
    const KVector x = mat_vec(tt, y);
    if (s(x) != out.representation(x) || out.rational_sum(y) != out.representation(x)) {
      cert.exact = false;
      break;
    }
  }
  cert.irrational_points = opts.irrational_points;
  cert.extends_beyond_Q = true;
  for (std::size_t i = 0; i < opts.irrational_points; ++i) {
    KVector x;
    for (std::size_t c = 0; c < n; ++c) x.push_back(random_irrational(basis, rng));
    if (s(x) != out.representation(x)) {
      cert.extends_beyond_Q = false;
      break;
    }
  }
  out.certificate = cert;
  return out;
}

RidgeSum cfe_example(const AdditiveMap& a) {
  const BasisPtr& basis = a.basis();
  const KNumber zero(basis), one(basis, 1);
  const PolyFunc h = PolyFunc::from_additive(a);
  std::vector<RidgeTerm> terms;
  terms.push_back({Direction({one, zero}), RidgeProfile(UniPoly(basis), h)});
  terms.push_back({Direction({zero, one}), RidgeProfile(UniPoly(basis), h)});
  terms.push_back({Direction({one, one}), RidgeProfile(UniPoly(basis), h.scaled(KNumber(basis, -1)))});
  return RidgeSum(basis, 2, std::move(terms));
}

}  // namespace ridgecalc
