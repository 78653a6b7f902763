#include "convexlab/lp.hpp"

#include "convexlab/errors.hpp"

namespace convexlab {

bool in_convex_hull(const std::vector<QVector>& points, const QVector& p) {
  require(!points.empty(), "convex hull of an empty set");
  const std::size_t m = points.size();
  const std::size_t n = p.size();
  const std::size_t rows = n + 1;
  const std::size_t cols = m + rows;  // lambdas, then one artificial per row
  const std::size_t rhs = cols;

  std::vector<QVector> t(rows + 1, QVector(cols + 1, Rational(0)));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) t[r][j] = r < n ? points[j][r] : Rational(1);
    t[r][rhs] = r < n ? p[r] : Rational(1);
    if (sgn(t[r][rhs]) < 0) {
      for (std::size_t j = 0; j < m; ++j) t[r][j] = -t[r][j];
      t[r][rhs] = -t[r][rhs];
    }
    t[r][m + r] = 1;
  }
  // Reduced costs of min sum(artificials), stored in the last row.
  QVector& z = t[rows];
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t j = 0; j < m; ++j) z[j] -= t[r][j];
    z[rhs] -= t[r][rhs];
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = m + r;

  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j) {
      if (sgn(z[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(t[r][enter]) <= 0) continue;
      Rational ratio = t[r][rhs] / t[r][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = r;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded direction; cannot happen for a bounded phase one
    Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t r = 0; r <= rows; ++r) {
      if (r == leave || sgn(t[r][enter]) == 0) continue;
      Rational factor = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }
  return sgn(z[rhs]) == 0;
}

}  // namespace convexlab
