#pragma once

#include <cstdint>
#include <random>

#include "ridgecalc/knumber.hpp"

namespace ridgecalc {

/// All randomness is drawn from an explicit generator seeded by the caller.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed = 0) { return Rng(seed); }

struct SampleBounds {
  long max_numerator = 9;
  long max_denominator = 6;
};

/// Uniform numerator in [-max_num, max_num], denominator in [1, max_den].
Rational random_rational(Rng& rng, const SampleBounds& bounds = {});
Rational random_nonzero_rational(Rng& rng, const SampleBounds& bounds = {});

/// Every coordinate drawn independently (so most samples are irrational).
KNumber random_knumber(const BasisPtr& basis, Rng& rng, const SampleBounds& bounds = {});

/// A random element with at least one nonzero irrational coordinate; for
/// Q itself (rank 0) this is just a random rational.
KNumber random_irrational(const BasisPtr& basis, Rng& rng, const SampleBounds& bounds = {});

KNumber random_rational_knumber(const BasisPtr& basis, Rng& rng, const SampleBounds& bounds = {});

long random_int(Rng& rng, long lo, long hi);

}  // namespace ridgecalc
