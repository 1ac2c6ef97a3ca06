#include "ridgecalc/sampling.hpp"

namespace ridgecalc {

long random_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational random_rational(Rng& rng, const SampleBounds& bounds) {
  long num = random_int(rng, -bounds.max_numerator, bounds.max_numerator);
  long den = random_int(rng, 1, bounds.max_denominator);
  return make_rational(Integer(num), Integer(den));
}

Rational random_nonzero_rational(Rng& rng, const SampleBounds& bounds) {
  for (;;) {
    Rational q = random_rational(rng, bounds);
    if (q != 0) return q;
  }
}

KNumber random_knumber(const BasisPtr& basis, Rng& rng, const SampleBounds& bounds) {
  KNumber r(basis);
  for (BasisKey key = 0; key < basis->dimension(); ++key) r.set_coord(key, random_rational(rng, bounds));
  return r;
}

KNumber random_irrational(const BasisPtr& basis, Rng& rng, const SampleBounds& bounds) {
  if (basis->dimension() == 1) return random_rational_knumber(basis, rng, bounds);
  for (;;) {
    KNumber r = random_knumber(basis, rng, bounds);
    if (!r.is_rational()) return r;
  }
}

KNumber random_rational_knumber(const BasisPtr& basis, Rng& rng, const SampleBounds& bounds) {
  return KNumber(basis, random_rational(rng, bounds));
}

}  // namespace ridgecalc
