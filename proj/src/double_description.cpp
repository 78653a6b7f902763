#include "convexlab/double_description.hpp"

#include <utility>

#include "convexlab/errors.hpp"
#include "convexlab/linalg.hpp"

namespace convexlab {

namespace {

Integer dot(const IntVector& a, const IntVector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1) {
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
}

}  // namespace

ConeRays extreme_rays(const std::vector<IntVector>& rows) {
  if (rows.empty()) throw InvalidInput("double description: no constraints");
  const std::size_t d = rows.front().size();
  const std::size_t m = rows.size();

  linalg::Matrix qrows;
  qrows.reserve(m);
  for (const auto& r : rows) {
    if (r.size() != d) throw InvalidInput("double description: ragged constraint matrix");
    QVector q;
    q.reserve(d);
    for (const auto& x : r) q.emplace_back(x);
    qrows.push_back(std::move(q));
  }
  std::vector<std::size_t> basis = linalg::independent_rows(qrows);
  if (basis.size() < d) throw InvalidInput("double description: cone is not pointed");

  // The initial simplicial cone {y : B y >= 0} is generated by the columns of B^-1.
  linalg::Matrix b;
  for (std::size_t i : basis) b.push_back(qrows[i]);
  auto inv = linalg::inverse(b);
  if (!inv) throw InvalidInput("double description: singular basis");

  ConeRays state;
  for (std::size_t j = 0; j < d; ++j) {
    QVector column(d);
    for (std::size_t i = 0; i < d; ++i) column[i] = (*inv)[i][j];
    IntVector ray = primitive_integer(column);
    Bitset zeros(m);
    for (std::size_t i = 0; i < d; ++i) {
      if (i != j) zeros.set(basis[i]);
    }
    state.rays.push_back(std::move(ray));
    state.zero_sets.push_back(std::move(zeros));
  }

  Bitset in_basis(m);
  for (std::size_t i : basis) in_basis.set(i);

  for (std::size_t row = 0; row < m; ++row) {
    if (in_basis.test(row)) continue;
    const IntVector& a = rows[row];
    const std::size_t count = state.rays.size();
    std::vector<Integer> value(count);
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < count; ++r) {
      value[r] = dot(a, state.rays[r]);
      int s = sgn(value[r]);
      if (s > 0) pos.push_back(r);
      else if (s < 0) neg.push_back(r);
    }
    if (neg.empty()) {
      for (std::size_t r = 0; r < count; ++r) {
        if (sgn(value[r]) == 0) state.zero_sets[r].set(row);
      }
      continue;
    }

    ConeRays next;
    for (std::size_t r = 0; r < count; ++r) {
      if (sgn(value[r]) < 0) continue;
      Bitset zeros = state.zero_sets[r];
      if (sgn(value[r]) == 0) zeros.set(row);
      next.rays.push_back(state.rays[r]);
      next.zero_sets.push_back(std::move(zeros));
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        Bitset common = state.zero_sets[p] & state.zero_sets[q];
        if (common.count() + 2 < d) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < count && adjacent; ++r) {
          if (r == p || r == q) continue;
          if (common.is_subset_of(state.zero_sets[r])) adjacent = false;
        }
        if (!adjacent) continue;
        // value[p] > 0 > value[q], so this is a positive combination tight at `row`.
        IntVector ray(d);
        for (std::size_t i = 0; i < d; ++i) ray[i] = value[p] * state.rays[q][i] - value[q] * state.rays[p][i];
        make_primitive(ray);
        common.set(row);
        next.rays.push_back(std::move(ray));
        next.zero_sets.push_back(std::move(common));
      }
    }
    state = std::move(next);
  }
  return state;
}

}  // namespace convexlab
