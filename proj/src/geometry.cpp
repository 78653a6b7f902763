#include "convexlab/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "convexlab/bigfloat.hpp"
#include "convexlab/double_description.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/lp.hpp"
#include "convexlab/measure.hpp"

namespace convexlab {

namespace {

std::vector<QVector> canonical_points(const std::vector<QVector>& points) {
  require(!points.empty(), "convex hull of an empty point set");
  const std::size_t n = points.front().size();
  require(n >= 1, "points need a positive dimension");
  for (const auto& p : points) require(p.size() == n, "points have mixed dimensions");
  std::vector<QVector> out = points;
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Indices of hull vertices among distinct points in general position (affine
// rank equals the ambient dimension).
std::vector<std::size_t> full_rank_hull(const std::vector<QVector>& pts) {
  const std::size_t n = pts.front().size();
  std::vector<std::size_t> keep;
  if (n > kFacetDimCap) {
    // p is a vertex iff it is not a convex combination of the other points.
    for (std::size_t i = 0; i < pts.size(); ++i) {
      std::vector<QVector> others;
      for (std::size_t j = 0; j < pts.size(); ++j) {
        if (j != i) others.push_back(pts[j]);
      }
      if (!in_convex_hull(others, pts[i])) keep.push_back(i);
    }
    return keep;
  }
  VPolytope cloud(n, pts);  // pts are already sorted and distinct, so indices line up
  const FacetData& facets = cloud.facet_data();
  // A point is a vertex iff the facets through it meet in that point alone.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Bitset meet(pts.size());
    meet.set();
    bool on_any = false;
    for (const auto& inc : facets.incidence) {
      if (inc.test(i)) {
        meet &= inc;
        on_any = true;
      }
    }
    if (on_any && meet.count() == 1) keep.push_back(i);
  }
  return keep;
}

std::vector<std::size_t> hull_indices(const std::vector<QVector>& pts) {
  if (pts.size() == 1) return {0};
  const std::size_t n = pts.front().size();
  linalg::Matrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(linalg::sub(pts[i], pts[0]));
  std::vector<std::size_t> pivots = linalg::pivot_columns(diffs);
  if (pivots.size() == n) return full_rank_hull(pts);
  // Projection onto the pivot coordinates is injective on the affine hull.
  std::vector<QVector> projected;
  for (const auto& p : pts) {
    QVector q;
    for (std::size_t c : pivots) q.push_back(p[c]);
    projected.push_back(std::move(q));
  }
  return full_rank_hull(projected);
}

}  // namespace

VPolytope convex_hull(const std::vector<QVector>& points) {
  std::vector<QVector> pts = canonical_points(points);
  std::vector<QVector> vertices;
  for (std::size_t i : hull_indices(pts)) vertices.push_back(pts[i]);
  return VPolytope(pts.front().size(), std::move(vertices));
}

VPolytope minkowski_sum(const VPolytope& p, const VPolytope& q) {
  require(p.dim() == q.dim(), "Minkowski sum of bodies in different dimensions");
  std::vector<QVector> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) sums.push_back(linalg::add(a, b));
  }
  return convex_hull(sums);
}

GridSet grid_minkowski(const GridSet& g1, const GridSet& g2) {
  if (g1.dim() != g2.dim()) throw ResolutionMismatch("grid dimensions differ");
  if (g1.cell() != g2.cell()) throw ResolutionMismatch("grid cell sizes differ");
  const std::size_t n = g1.dim();
  QVector origin = linalg::add(g1.origin(), g2.origin());
  if (g1.empty() || g2.empty()) return GridSet(n, g1.cell(), std::move(origin), {});

  // Dense byte map over the bounding box of the sum when it is small enough;
  // linearized indices then add, so the inner loop is a plain scatter.
  IndexTuple lo_a(n), lo_b(n), lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto by_axis = [k](const IndexTuple& x, const IndexTuple& y) { return x[k] < y[k]; };
    auto [a_lo, a_hi] = std::minmax_element(g1.cells().begin(), g1.cells().end(), by_axis);
    auto [b_lo, b_hi] = std::minmax_element(g2.cells().begin(), g2.cells().end(), by_axis);
    lo_a[k] = (*a_lo)[k];
    lo_b[k] = (*b_lo)[k];
    lo[k] = lo_a[k] + lo_b[k];
    hi[k] = (*a_hi)[k] + (*b_hi)[k];
  }
  double box = 1.0;
  for (std::size_t k = 0; k < n; ++k) box *= static_cast<double>(hi[k] - lo[k] + 1);
  if (box > 6.4e7) return GridSet(n, g1.cell(), std::move(origin), index_set::sumset(g1.cells(), g2.cells()));

  std::vector<std::int64_t> stride(n);
  std::int64_t total = 1;
  for (std::size_t k = n; k-- > 0;) {
    stride[k] = total;
    total *= hi[k] - lo[k] + 1;
  }
  auto linear = [&](const IndexTuple& c, const IndexTuple& base) {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < n; ++k) s += (c[k] - base[k]) * stride[k];
    return s;
  };
  std::vector<std::int64_t> la, lb;
  la.reserve(g1.size());
  lb.reserve(g2.size());
  for (const auto& c : g1.cells()) la.push_back(linear(c, lo_a));
  for (const auto& c : g2.cells()) lb.push_back(linear(c, lo_b));
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(total), 0);
  for (std::int64_t b : lb) {
    std::uint8_t* row = hit.data() + b;
    for (std::int64_t a : la) row[a] = 1;
  }
  std::vector<IndexTuple> cells;
  IndexTuple idx(n);
  for (std::int64_t s = 0; s < total; ++s) {
    if (!hit[static_cast<std::size_t>(s)]) continue;
    std::int64_t rem = s;
    for (std::size_t k = 0; k < n; ++k) {
      idx[k] = lo[k] + rem / stride[k];
      rem %= stride[k];
    }
    cells.push_back(idx);
  }
  return GridSet(n, g1.cell(), std::move(origin), std::move(cells));
}

VPolytope difference_body(const VPolytope& p) { return minkowski_sum(p, reflect(p)); }
GridSet difference_body(const GridSet& g) { return grid_minkowski(g, reflect(g)); }
LatticeSet difference_body(const LatticeSet& s) { return difference_set(s, s); }

FacetData compute_facet_data(const VPolytope& p) {
  const std::size_t n = p.dim();
  if (n > kFacetDimCap) {
    throw DimensionCapExceeded("exact facet enumeration is capped at dimension " + std::to_string(kFacetDimCap) +
                               "; use grid or Monte Carlo measures");
  }
  if (!p.full_dim()) throw InvalidInput("facet enumeration needs a full-dimensional polytope");
  // Valid inequality a.x <= b  <=>  (b, a) . (1, -v) >= 0 for every vertex v;
  // the extreme rays of that cone are exactly the facets.
  std::vector<IntVector> rows;
  for (const auto& v : p.vertices()) {
    QVector row(n + 1);
    row[0] = 1;
    for (std::size_t k = 0; k < n; ++k) row[k + 1] = -v[k];
    rows.push_back(primitive_integer(row));
  }
  ConeRays cone = extreme_rays(rows);
  std::vector<std::size_t> order(cone.rays.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return cone.rays[a] < cone.rays[b]; });
  FacetData out;
  for (std::size_t i : order) {
    const IntVector& y = cone.rays[i];
    Halfspace h;
    h.offset = Rational(y[0]);
    for (std::size_t k = 0; k < n; ++k) h.normal.emplace_back(y[k + 1]);
    out.halfspaces.push_back(std::move(h));
    out.incidence.push_back(cone.zero_sets[i]);
  }
  return out;
}

HPolytope facet_enum(const VPolytope& p) { return HPolytope(p.dim(), p.facet_data().halfspaces, true); }

std::optional<VPolytope> vertex_enum(const HPolytope& h) {
  const std::size_t n = h.dim();
  if (n > kFacetDimCap) throw DimensionCapExceeded("exact vertex enumeration is capped at dimension " + std::to_string(kFacetDimCap));
  if (h.halfspaces().empty()) throw InvalidInput("vertex enumeration of an unbounded region");
  // Homogenize: (t, x) with t b - a.x >= 0 and t >= 0.
  std::vector<IntVector> rows;
  for (const auto& hs : h.halfspaces()) {
    QVector row(n + 1);
    row[0] = hs.offset;
    for (std::size_t k = 0; k < n; ++k) row[k + 1] = -hs.normal[k];
    rows.push_back(primitive_integer(row));
  }
  IntVector t_row(n + 1, Integer(0));
  t_row[0] = 1;
  rows.push_back(t_row);
  ConeRays cone;
  try {
    cone = extreme_rays(rows);
  } catch (const InvalidInput&) {
    throw InvalidInput("vertex enumeration needs a bounded polytope");
  }
  std::vector<QVector> vertices;
  for (const auto& ray : cone.rays) {
    if (sgn(ray[0]) == 0) throw InvalidInput("vertex enumeration needs a bounded polytope");
    QVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = Rational(ray[k + 1], ray[0]);
    for (auto& x : v) x.canonicalize();
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) return std::nullopt;
  return VPolytope(n, std::move(vertices));
}

HPolytope slice_body(const HPolytope& a, const QVector& x) {
  require(x.size() == a.dim(), "translation has wrong dimension");
  std::vector<Halfspace> out = a.halfspaces();
  for (const auto& h : a.halfspaces()) out.push_back({h.normal, h.offset - linalg::dot(h.normal, x)});
  return HPolytope(a.dim(), std::move(out), a.bounded());
}

bool membership(const VPolytope& p, const QVector& point) {
  require(point.size() == p.dim(), "point has wrong dimension");
  return in_convex_hull(p.vertices(), point);
}

bool membership(const VPolytopeF& p, const DVector& point) {
  require(point.size() == p.dim(), "point has wrong dimension");
  VPolytope exact = to_exact(p);
  if (exact.full_dim() && exact.dim() <= kFacetDimCap) return HPolytopeF(facet_enum(exact)).contains(point);
  return in_convex_hull(exact.vertices(), to_rational(point));
}

// ---------------------------------------------------------------- oracles

namespace {

simd::HalfspaceBlock to_block(const HPolytope& h) {
  simd::HalfspaceBlock block;
  block.dim = h.dim();
  for (const auto& hs : h.halfspaces()) {
    for (const auto& a : hs.normal) block.normals.push_back(a.get_d());
    block.offsets.push_back(hs.offset.get_d());
  }
  return block;
}

MembershipOracle block_oracle(simd::HalfspaceBlock block, std::string description) {
  MembershipOracle oracle;
  oracle.dim = block.dim;
  oracle.description = std::move(description);
  oracle.test = [block](std::span<const double> point) {
    std::uint8_t inside = 0;
    simd::detail::classify_scalar(block, point.data(), 1, 1, &inside);
    return inside == 1;
  };
  oracle.halfspaces = std::move(block);
  return oracle;
}

}  // namespace

MembershipOracle make_oracle(const VPolytope& p, std::string description) {
  return block_oracle(to_block(facet_enum(p)), std::move(description) + " (facet halfspaces, double)");
}

MembershipOracle make_oracle(const HPolytope& h, std::string description) {
  return block_oracle(to_block(h), std::move(description) + " (halfspaces, double)");
}

MembershipOracle make_oracle(const GridSet& g, std::string description) {
  MembershipOracle oracle;
  oracle.dim = g.dim();
  oracle.description = std::move(description) + " (voxel lookup)";
  const double h = g.cell().get_d();
  DVector origin = to_double(g.origin());
  oracle.test = [g, h, origin](std::span<const double> point) {
    IndexTuple idx(point.size());
    for (std::size_t k = 0; k < point.size(); ++k) idx[k] = static_cast<std::int64_t>(std::floor((point[k] - origin[k]) / h + 0.5));
    return g.contains(idx);
  };
  return oracle;
}

// ---------------------------------------------------------------- subsets

SubsetSelection<VPolytope> select_subset_of_measure(const VPolytope& b, const Rational& target) {
  require(sgn(target) > 0, "subset target measure must be positive");
  Rational total = exact_volume(b);
  require(target <= total, "subset target exceeds the body's measure");
  if (target == total) return {b, total, Rational(0), Rational(1), true};
  Rational ratio = target / total;
  const auto n = static_cast<unsigned long>(b.dim());
  Rational t;
  if (auto r = exact_root(ratio, n)) {
    t = *r;
  } else {
    t = root_enclosure(ratio, n, 128).lo.to_rational();
  }
  VPolytope subset = scale_about(b, vertex_centroid(b), t);
  Rational measure = total;
  for (unsigned long k = 0; k < n; ++k) measure *= t;
  Rational residual = target - measure;
  bool exact = sgn(residual) == 0;
  return {std::move(subset), measure, residual, t, exact};
}

SubsetSelection<GridSet> select_subset_of_measure(const GridSet& b, const Rational& target) {
  require(sgn(target) > 0, "subset target measure must be positive");
  Rational total = b.measure();
  require(target <= total, "subset target exceeds the body's measure");
  Rational voxel = 1;
  for (std::size_t k = 0; k < b.dim(); ++k) voxel *= b.cell();
  Integer count = floor(target / voxel);
  if (count < 1) count = 1;
  const auto keep = static_cast<std::size_t>(count.get_ui());
  std::vector<IndexTuple> cells(b.cells().begin(), b.cells().begin() + static_cast<std::ptrdiff_t>(keep));
  GridSet subset(b.dim(), b.cell(), b.origin(), std::move(cells));
  Rational measure = subset.measure();
  Rational residual = target - measure;
  bool exact = sgn(residual) == 0;
  return {std::move(subset), measure, residual, std::nullopt, exact};
}

}  // namespace convexlab
