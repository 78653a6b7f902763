#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "convexlab/rational.hpp"

// Small dense exact linear algebra over the rationals.
namespace convexlab::linalg {

using Matrix = std::vector<QVector>;

std::size_t rank(Matrix rows);

// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& rows);

// Pivot columns of the row echelon form.
std::vector<std::size_t> pivot_columns(Matrix rows);

Rational determinant(Matrix m);

std::optional<Matrix> inverse(Matrix m);

// Rank of the affine hull of the points.
std::size_t affine_rank(const std::vector<QVector>& points);

Rational dot(const QVector& a, const QVector& b);
QVector sub(const QVector& a, const QVector& b);
QVector add(const QVector& a, const QVector& b);
QVector scale(const QVector& a, const Rational& t);

}  // namespace convexlab::linalg
