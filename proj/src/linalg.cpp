#include "ridgecalc/linalg.hpp"

#include "ridgecalc/errors.hpp"

namespace ridgecalc {

namespace {

const BasisPtr& basis_of(std::span<const KNumber> v) {
  if (v.empty()) throw UsageError("empty vector has no basis");
  return v.front().basis();
}

void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) throw UsageError("dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

KNumber dot(std::span<const KNumber> a, std::span<const KNumber> b) {
  require_same_size(a.size(), b.size());
  KNumber sum(basis_of(a));
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

KVector add(std::span<const KNumber> a, std::span<const KNumber> b) {
  require_same_size(a.size(), b.size());
  KVector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

KVector scale(std::span<const KNumber> v, const KNumber& s) {
  KVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x * s);
  return r;
}

KVector mat_vec(const KMatrix& m, std::span<const KNumber> v) {
  KVector r;
  r.reserve(m.size());
  for (const auto& row : m) r.push_back(dot(row, v));
  return r;
}

KMatrix transpose(const KMatrix& m) {
  if (m.empty()) return {};
  KMatrix t(m.front().size());
  for (std::size_t j = 0; j < m.front().size(); ++j) {
    t[j].reserve(m.size());
    for (const auto& row : m) t[j].push_back(row.at(j));
  }
  return t;
}

KMatrix identity_matrix(const BasisPtr& basis, std::size_t n) {
  KMatrix m(n, KVector(n, KNumber(basis)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = KNumber(basis, 1);
  return m;
}

bool is_zero_vector(std::span<const KNumber> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<KVector> solve_prefer_leading(KMatrix a, KVector b) {
  require_same_size(a.size(), b.size());
  if (a.empty()) return KVector{};
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  const BasisPtr basis = b.front().basis();

  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    std::swap(b[r], b[p]);
    const KNumber pinv = inv(a[r][c]);
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= pinv;
    b[r] *= pinv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const KNumber f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  KVector x(cols, KNumber(basis));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

KNumber determinant(KMatrix a) {
  const std::size_t n = a.size();
  if (n == 0) throw UsageError("determinant of empty matrix");
  const BasisPtr basis = a.front().front().basis();
  KNumber det(basis, 1);
  for (std::size_t c = 0; c < n; ++c) {
    require_same_size(a[c].size(), n);
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return KNumber(basis);
    if (p != c) {
      std::swap(a[c], a[p]);
      det = -det;
    }
    det *= a[c][c];
    const KNumber pinv = inv(a[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      const KNumber f = a[i][c] * pinv;
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

KMatrix inverse(const KMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw UsageError("inverse of empty matrix");
  const BasisPtr basis = a.front().front().basis();
  if (determinant(a).is_zero()) throw UsageError("matrix is singular");
  KMatrix cols;
  for (std::size_t j = 0; j < n; ++j) {
    KVector e(n, KNumber(basis));
    e[j] = KNumber(basis, 1);
    auto x = solve_prefer_leading(a, e);
    if (!x) throw UsageError("matrix is singular");
    cols.push_back(std::move(*x));
  }
  return transpose(cols);
}

std::vector<KVector> orthogonal_complement(std::span<const KNumber> a) {
  const std::size_t n = a.size();
  std::size_t pivot = 0;
  while (pivot < n && a[pivot].is_zero()) ++pivot;
  if (pivot == n) throw UsageError("orthogonal complement of the zero vector");
  const BasisPtr& basis = a[pivot].basis();
  const KNumber pinv = inv(a[pivot]);
  std::vector<KVector> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (free == pivot) continue;
    KVector v(n, KNumber(basis));
    v[free] = KNumber(basis, 1);
    v[pivot] = -(a[free] * pinv);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ridgecalc
