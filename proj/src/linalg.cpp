#include "convexlab/linalg.hpp"

#include <utility>

#include "convexlab/errors.hpp"

namespace convexlab::linalg {

namespace {

// In-place row reduction. Returns the pivot column of each pivot row.
std::vector<std::size_t> echelon(Matrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.size() && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < m.size(); ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix rows) { return echelon(rows).size(); }

std::vector<std::size_t> independent_rows(const Matrix& rows) {
  std::vector<std::size_t> chosen;
  if (rows.empty()) return chosen;
  // Incremental basis kept in reduced form: basis[i] has a leading 1 at lead[i].
  Matrix basis;
  std::vector<std::size_t> lead;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    QVector v = rows[i];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(v[lead[b]]) == 0) continue;
      Rational factor = v[lead[b]];
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= factor * basis[b][c];
    }
    std::size_t col = 0;
    while (col < v.size() && sgn(v[col]) == 0) ++col;
    if (col == v.size()) continue;
    Rational inv = 1 / v[col];
    for (auto& x : v) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(basis[b][col]) == 0) continue;
      Rational factor = basis[b][col];
      for (std::size_t c = 0; c < v.size(); ++c) basis[b][c] -= factor * v[c];
    }
    basis.push_back(std::move(v));
    lead.push_back(col);
    chosen.push_back(i);
  }
  return chosen;
}

std::vector<std::size_t> pivot_columns(Matrix rows) { return echelon(rows); }

Rational determinant(Matrix m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (sgn(m[r][col]) == 0) continue;
      Rational factor = m[r][col] / m[col][col];
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

std::optional<Matrix> inverse(Matrix m) {
  const std::size_t n = m.size();
  Matrix inv(n, QVector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    Rational scale_by = 1 / m[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      m[col][c] *= scale_by;
      inv[col][c] *= scale_by;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(m[r][col]) == 0) continue;
      Rational factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        m[r][c] -= factor * m[col][c];
        inv[r][c] -= factor * inv[col][c];
      }
    }
  }
  return inv;
}

std::size_t affine_rank(const std::vector<QVector>& points) {
  if (points.size() <= 1) return 0;
  Matrix diffs;
  diffs.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector sub(const QVector& a, const QVector& b) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

QVector add(const QVector& a, const QVector& b) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

QVector scale(const QVector& a, const Rational& t) {
  QVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * t;
  return out;
}

}  // namespace convexlab::linalg
