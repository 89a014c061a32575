#include "ksbound/ratlin.hpp"

#include "ksbound/error.hpp"

namespace ksb {

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) fail(Errc::dimension_mismatch, "dot of vectors of unequal length");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int rank(RatMat m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<RatVec> solve_unique(RatMat a, RatVec b) {
  size_t rows = a.size();
  if (rows != b.size()) fail(Errc::dimension_mismatch, "solve: rhs length mismatch");
  size_t cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    std::swap(b[r], b[p]);
    Rational inv = a[r][c];
    for (size_t j = c; j < cols; ++j) a[r][j] /= inv;
    b[r] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() != cols) return std::nullopt;  // rank-deficient
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;  // inconsistent
  RatVec x(cols, Rational(0));
  for (size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = b[k];
  return x;
}

}  // namespace ksb
