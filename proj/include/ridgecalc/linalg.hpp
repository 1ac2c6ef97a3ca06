#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ridgecalc/knumber.hpp"

namespace ridgecalc {

using KVector = std::vector<KNumber>;
using KMatrix = std::vector<KVector>;  // row-major

KNumber dot(std::span<const KNumber> a, std::span<const KNumber> b);
KVector add(std::span<const KNumber> a, std::span<const KNumber> b);
KVector scale(std::span<const KNumber> v, const KNumber& s);
KVector mat_vec(const KMatrix& m, std::span<const KNumber> v);
KMatrix transpose(const KMatrix& m);
KMatrix identity_matrix(const BasisPtr& basis, std::size_t n);
bool is_zero_vector(std::span<const KNumber> v);

/// Exact Gauss-Jordan elimination over K. Pivot columns are chosen left to
/// right and free unknowns are set to zero. Returns nullopt when the system
/// is inconsistent.
std::optional<KVector> solve_prefer_leading(KMatrix a, KVector b);

/// Exact determinant by Gaussian elimination over K.
KNumber determinant(KMatrix a);

/// Throws UsageError when singular.
KMatrix inverse(const KMatrix& a);

/// Basis of {x : a . x = 0} for nonzero a, as produced by reduced row echelon
/// form of the 1 x n matrix [a]: one vector per free column, in column order.
std::vector<KVector> orthogonal_complement(std::span<const KNumber> a);

}  // namespace ridgecalc
