#include "convexlab/set_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/simd/halfspace.hpp"

namespace convexlab {

namespace {

std::size_t float_affine_rank(const std::vector<DVector>& points) {
  if (points.size() <= 1) return 0;
  std::vector<DVector> m;
  double scale = 0.0;
  for (std::size_t i = 1; i < points.size(); ++i) {
    DVector row(points[i].size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      row[k] = points[i][k] - points[0][k];
      scale = std::max(scale, std::abs(row[k]));
    }
    m.push_back(std::move(row));
  }
  const double tol = 1e-9 * (1.0 + scale);
  std::size_t rank = 0;
  const std::size_t cols = points[0].size();
  for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
    std::size_t best = rank;
    for (std::size_t r = rank; r < m.size(); ++r) {
      if (std::abs(m[r][col]) > std::abs(m[best][col])) best = r;
    }
    if (std::abs(m[best][col]) <= tol) continue;
    std::swap(m[rank], m[best]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      double f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

void check_dims(std::size_t dim, const std::vector<QVector>& points) {
  require(dim >= 1, "dimension must be positive");
  for (const auto& p : points) require(p.size() == dim, "coordinate count does not match dimension");
}

}  // namespace

// ---------------------------------------------------------------- VPolytope

VPolytope::VPolytope(std::size_t dim, std::vector<QVector> vertices)
    : dim_(dim), cache_(std::make_shared<FacetCache>()) {
  require(!vertices.empty(), "polytope needs at least one vertex");
  check_dims(dim, vertices);
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  vertices_ = std::move(vertices);
  full_dim_ = linalg::affine_rank(vertices_) == dim_;
}

const FacetData& VPolytope::facet_data() const {
  std::call_once(cache_->once, [this] { cache_->data = compute_facet_data(*this); });
  return *cache_->data;
}

bool operator==(const VPolytope& a, const VPolytope& b) {
  return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
}

double dedup_tolerance(const DVector& v) {
  double norm = 0.0;
  for (double x : v) norm = std::max(norm, std::abs(x));
  return 1e-9 * (1.0 + norm);
}

VPolytopeF::VPolytopeF(std::size_t dim, std::vector<DVector> vertices) : dim_(dim) {
  require(dim >= 1, "dimension must be positive");
  require(!vertices.empty(), "polytope needs at least one vertex");
  for (const auto& v : vertices) {
    require(v.size() == dim, "coordinate count does not match dimension");
    bool duplicate = false;
    for (const auto& kept : vertices_) {
      double tol = std::max(dedup_tolerance(v), dedup_tolerance(kept));
      double dist = 0.0;
      for (std::size_t k = 0; k < dim; ++k) dist = std::max(dist, std::abs(v[k] - kept[k]));
      if (dist <= tol) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) vertices_.push_back(v);
  }
  full_dim_ = float_affine_rank(vertices_) == dim_;
}

// ---------------------------------------------------------------- HPolytope

HPolytope::HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded)
    : dim_(dim), halfspaces_(std::move(halfspaces)), bounded_(bounded) {
  require(dim >= 1, "dimension must be positive");
  for (const auto& h : halfspaces_) {
    require(h.normal.size() == dim, "halfspace normal has wrong dimension");
    require(std::any_of(h.normal.begin(), h.normal.end(), [](const Rational& x) { return sgn(x) != 0; }),
            "halfspace normal is zero");
  }
}

bool HPolytope::contains(const QVector& point) const {
  require(point.size() == dim_, "point has wrong dimension");
  return std::all_of(halfspaces_.begin(), halfspaces_.end(),
                     [&](const Halfspace& h) { return linalg::dot(h.normal, point) <= h.offset; });
}

HPolytopeF::HPolytopeF(std::size_t dim, std::vector<HalfspaceF> halfspaces, bool bounded)
    : dim_(dim), halfspaces_(std::move(halfspaces)), bounded_(bounded) {
  for (const auto& h : halfspaces_) require(h.normal.size() == dim, "halfspace normal has wrong dimension");
}

HPolytopeF::HPolytopeF(const HPolytope& exact) : dim_(exact.dim()), bounded_(exact.bounded()) {
  for (const auto& h : exact.halfspaces()) halfspaces_.push_back({to_double(h.normal), h.offset.get_d()});
}

bool HPolytopeF::contains(std::span<const double> point) const {
  require(point.size() == dim_, "point has wrong dimension");
  for (const auto& h : halfspaces_) {
    double acc = 0.0;
    double scale = std::abs(h.offset);
    for (std::size_t k = 0; k < dim_; ++k) {
      acc += h.normal[k] * point[k];
      scale += std::abs(h.normal[k] * point[k]);
    }
    if (acc > h.offset + 1e-12 * scale) return false;
  }
  return true;
}

// ---------------------------------------------------------------- index sets

namespace index_set {

void normalize(std::vector<IndexTuple>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

std::vector<IndexTuple> sumset(std::span<const IndexTuple> a, std::span<const IndexTuple> b) {
  std::vector<IndexTuple> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(add(x, y));
  }
  normalize(out);
  return out;
}

std::vector<IndexTuple> difference(std::span<const IndexTuple> a, std::span<const IndexTuple> b) {
  std::vector<IndexTuple> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(sub(x, y));
  }
  normalize(out);
  return out;
}

std::vector<IndexTuple> intersect(std::span<const IndexTuple> a, std::span<const IndexTuple> b) {
  std::vector<IndexTuple> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<IndexTuple> unite(std::span<const IndexTuple> a, std::span<const IndexTuple> b) {
  std::vector<IndexTuple> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<IndexTuple> minus(std::span<const IndexTuple> a, std::span<const IndexTuple> b) {
  std::vector<IndexTuple> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<IndexTuple> translate(std::span<const IndexTuple> a, const IndexTuple& by) {
  std::vector<IndexTuple> out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(add(x, by));
  return out;  // translation preserves lexicographic order
}

std::vector<IndexTuple> negate(std::span<const IndexTuple> a) {
  std::vector<IndexTuple> out;
  out.reserve(a.size());
  for (const auto& x : a) {
    IndexTuple y(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) y[k] = -x[k];
    out.push_back(std::move(y));
  }
  normalize(out);
  return out;
}

}  // namespace index_set

IndexTuple add(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] + b[k];
  return out;
}

IndexTuple sub(const IndexTuple& a, const IndexTuple& b) {
  IndexTuple out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

// ---------------------------------------------------------------- GridSet

GridSet::GridSet(std::size_t dim, Rational cell, QVector origin, std::vector<IndexTuple> cells)
    : dim_(dim), cell_(std::move(cell)), origin_(std::move(origin)), cells_(std::move(cells)) {
  require(dim >= 1, "dimension must be positive");
  require(sgn(cell_) > 0, "grid cell size must be positive");
  require(origin_.size() == dim, "grid origin has wrong dimension");
  for (const auto& c : cells_) require(c.size() == dim, "grid cell index has wrong dimension");
  index_set::normalize(cells_);
}

bool GridSet::contains(const IndexTuple& index) const {
  return std::binary_search(cells_.begin(), cells_.end(), index);
}

Rational GridSet::measure() const {
  Rational volume = 1;
  for (std::size_t k = 0; k < dim_; ++k) volume *= cell_;
  return volume * static_cast<unsigned long>(cells_.size());
}

QVector GridSet::center(const IndexTuple& index) const {
  QVector c(dim_);
  for (std::size_t k = 0; k < dim_; ++k) c[k] = origin_[k] + cell_ * Rational(static_cast<long>(index[k]));
  return c;
}

IndexTuple GridSet::alignment_offset(const GridSet& other) const {
  if (other.dim_ != dim_) throw ResolutionMismatch("grid dimensions differ");
  if (other.cell_ != cell_) throw ResolutionMismatch("grid cell sizes differ");
  IndexTuple offset(dim_);
  for (std::size_t k = 0; k < dim_; ++k) {
    Rational steps = (other.origin_[k] - origin_[k]) / cell_;
    if (steps.get_den() != 1) throw ResolutionMismatch("grid origins are not lattice-aligned");
    offset[k] = steps.get_num().get_si();
  }
  return offset;
}

GridSet GridSet::rebased_to(const GridSet& frame) const {
  IndexTuple offset = frame.alignment_offset(*this);
  return GridSet(dim_, cell_, frame.origin_, index_set::translate(cells_, offset));
}

GridSet unite(const GridSet& a, const GridSet& b) {
  GridSet rb = b.rebased_to(a);
  return GridSet(a.dim(), a.cell(), a.origin(), index_set::unite(a.cells(), rb.cells()));
}

GridSet intersect(const GridSet& a, const GridSet& b) {
  GridSet rb = b.rebased_to(a);
  return GridSet(a.dim(), a.cell(), a.origin(), index_set::intersect(a.cells(), rb.cells()));
}

GridSet translate(const GridSet& g, const IndexTuple& by) {
  require(by.size() == g.dim(), "translation has wrong dimension");
  return GridSet(g.dim(), g.cell(), g.origin(), index_set::translate(g.cells(), by));
}

// ---------------------------------------------------------------- LatticeSet

LatticeSet::LatticeSet(std::size_t dim, std::vector<IndexTuple> points) : dim_(dim), points_(std::move(points)) {
  require(dim >= 1, "dimension must be positive");
  for (const auto& p : points_) require(p.size() == dim, "lattice point has wrong dimension");
  index_set::normalize(points_);
}

bool LatticeSet::contains(const IndexTuple& p) const { return std::binary_search(points_.begin(), points_.end(), p); }

LatticeSet sumset(const LatticeSet& a, const LatticeSet& b) {
  require(a.dim() == b.dim(), "lattice dimensions differ");
  return LatticeSet(a.dim(), index_set::sumset(a.points(), b.points()));
}

LatticeSet difference_set(const LatticeSet& a, const LatticeSet& b) {
  require(a.dim() == b.dim(), "lattice dimensions differ");
  return LatticeSet(a.dim(), index_set::difference(a.points(), b.points()));
}

LatticeSet intersect(const LatticeSet& a, const LatticeSet& b) {
  require(a.dim() == b.dim(), "lattice dimensions differ");
  return LatticeSet(a.dim(), index_set::intersect(a.points(), b.points()));
}

LatticeSet translate(const LatticeSet& a, const IndexTuple& by) {
  require(by.size() == a.dim(), "translation has wrong dimension");
  return LatticeSet(a.dim(), index_set::translate(a.points(), by));
}

// ---------------------------------------------------------------- constructors

VPolytope make_simplex(std::size_t n, const Rational& L) {
  require(n >= 1, "simplex dimension must be positive");
  require(sgn(L) > 0, "simplex size must be positive");
  std::vector<QVector> vertices;
  vertices.emplace_back(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    QVector v(n, Rational(0));
    v[j] = L;
    vertices.push_back(std::move(v));
  }
  return VPolytope(n, std::move(vertices));
}

VPolytope make_box(const QVector& lo, const QVector& hi) {
  require(lo.size() == hi.size() && !lo.empty(), "box corners must share a positive dimension");
  const std::size_t n = lo.size();
  require(n < 24, "box dimension too large for vertex form");
  std::vector<QVector> vertices;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    QVector v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = (mask >> k) & 1U ? hi[k] : lo[k];
    vertices.push_back(std::move(v));
  }
  return VPolytope(n, std::move(vertices));
}

VPolytope make_cube(std::size_t n, const Rational& side) {
  return make_box(QVector(n, Rational(0)), QVector(n, side));
}

VPolytope reflect(const VPolytope& p) {
  std::vector<QVector> vertices;
  for (const auto& v : p.vertices()) {
    QVector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = -v[k];
    vertices.push_back(std::move(w));
  }
  return VPolytope(p.dim(), std::move(vertices));
}

VPolytopeF reflect(const VPolytopeF& p) {
  std::vector<DVector> vertices;
  for (const auto& v : p.vertices()) {
    DVector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = -v[k];
    vertices.push_back(std::move(w));
  }
  return VPolytopeF(p.dim(), std::move(vertices));
}

GridSet reflect(const GridSet& g) {
  QVector origin(g.dim());
  for (std::size_t k = 0; k < g.dim(); ++k) origin[k] = -g.origin()[k];
  return GridSet(g.dim(), g.cell(), std::move(origin), index_set::negate(g.cells()));
}

LatticeSet reflect(const LatticeSet& s) { return LatticeSet(s.dim(), index_set::negate(s.points())); }

VPolytope translate(const VPolytope& p, const QVector& by) {
  require(by.size() == p.dim(), "translation has wrong dimension");
  std::vector<QVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(linalg::add(v, by));
  return VPolytope(p.dim(), std::move(vertices));
}

VPolytope scale_about(const VPolytope& p, const QVector& center, const Rational& t) {
  require(sgn(t) >= 0 && t <= 1, "scale factor must lie in [0, 1]");
  require(center.size() == p.dim(), "center has wrong dimension");
  std::vector<QVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(linalg::add(center, linalg::scale(linalg::sub(v, center), t)));
  return VPolytope(p.dim(), std::move(vertices));
}

VPolytopeF scale_about(const VPolytopeF& p, const DVector& center, double t) {
  require(t >= 0.0 && t <= 1.0, "scale factor must lie in [0, 1]");
  require(center.size() == p.dim(), "center has wrong dimension");
  std::vector<DVector> vertices;
  for (const auto& v : p.vertices()) {
    DVector w(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) w[k] = center[k] + t * (v[k] - center[k]);
    vertices.push_back(std::move(w));
  }
  return VPolytopeF(p.dim(), std::move(vertices));
}

QVector vertex_centroid(const VPolytope& p) {
  QVector c(p.dim(), Rational(0));
  for (const auto& v : p.vertices()) {
    for (std::size_t k = 0; k < p.dim(); ++k) c[k] += v[k];
  }
  Rational count(static_cast<long>(p.vertices().size()));
  for (auto& x : c) x /= count;
  return c;
}

VPolytopeF to_float(const VPolytope& p) {
  std::vector<DVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(to_double(v));
  return VPolytopeF(p.dim(), std::move(vertices));
}

VPolytope to_exact(const VPolytopeF& p) {
  std::vector<QVector> vertices;
  for (const auto& v : p.vertices()) vertices.push_back(to_rational(v));
  return VPolytope(p.dim(), std::move(vertices));
}

// ---------------------------------------------------------------- rasterize

namespace {

// Inclusive index range of cells whose centers (i + 1/2) h can meet [lo, hi].
std::pair<std::int64_t, std::int64_t> axis_range(const Rational& lo, const Rational& hi, const Rational& h) {
  Rational half(1, 2);
  std::int64_t first = ceil(lo / h - half).get_si();
  std::int64_t last = floor(hi / h - half).get_si();
  return {first, last};
}

// Walks the index box in lexicographic order, one contiguous run along the
// last axis at a time.
template <class Fn>
void for_each_row(const std::vector<std::pair<std::int64_t, std::int64_t>>& ranges, Fn&& fn) {
  const std::size_t n = ranges.size();
  for (const auto& [a, b] : ranges) {
    if (a > b) return;
  }
  IndexTuple prefix(n);
  for (std::size_t k = 0; k < n; ++k) prefix[k] = ranges[k].first;
  while (true) {
    fn(prefix);
    if (n == 1) return;
    std::size_t k = n - 1;
    while (k-- > 0) {
      if (prefix[k] < ranges[k].second) {
        ++prefix[k];
        for (std::size_t j = k + 1; j + 1 < n; ++j) prefix[j] = ranges[j].first;
        break;
      }
      if (k == 0) return;
    }
  }
}

}  // namespace

GridSet rasterize(const VPolytope& p, const Rational& h) {
  require(sgn(h) > 0, "grid cell size must be positive");
  const std::size_t n = p.dim();
  QVector origin(n, h / 2);
  std::vector<std::pair<std::int64_t, std::int64_t>> ranges(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational lo = p.vertices().front()[k], hi = lo;
    for (const auto& v : p.vertices()) {
      if (v[k] < lo) lo = v[k];
      if (v[k] > hi) hi = v[k];
    }
    ranges[k] = axis_range(lo, hi, h);
  }
  std::vector<IndexTuple> cells;

  if (!p.full_dim()) {
    // Only a measure-zero set of centers can be hit; test candidates exactly.
    for_each_row(ranges, [&](const IndexTuple& prefix) {
      IndexTuple idx = prefix;
      for (std::int64_t i = ranges[n - 1].first; i <= ranges[n - 1].second; ++i) {
        idx[n - 1] = i;
        QVector c(n);
        for (std::size_t k = 0; k < n; ++k) c[k] = h * (Rational(static_cast<long>(idx[k])) + Rational(1, 2));
        if (membership(p, c)) cells.push_back(idx);
      }
    });
    return GridSet(n, h, std::move(origin), std::move(cells));
  }

  // Center (i + 1/2) h lies in {a.x <= b} iff sum a_k (2 i_k + 1) <= floor(2 b / h)
  // for the primitive integer normal a. All terms are integers, so the double
  // kernel is exact while magnitudes stay below 2^53.
  const auto& facets = p.facet_data().halfspaces;
  simd::HalfspaceBlock block;
  block.dim = n;
  double max_normal = 0.0;
  double max_offset = 0.0;
  std::vector<std::vector<Integer>> int_normals;
  std::vector<Integer> int_offsets;
  for (const auto& f : facets) {
    Rational factor = primitive_factor(f.normal);
    int_normals.push_back(primitive_integer(f.normal));
    Integer beta = floor(2 * f.offset * factor / h);
    int_offsets.push_back(beta);
    for (const auto& a : int_normals.back()) {
      block.normals.push_back(a.get_d());
      max_normal = std::max(max_normal, std::abs(a.get_d()));
    }
    block.offsets.push_back(beta.get_d());
    max_offset = std::max(max_offset, std::abs(beta.get_d()));
  }
  double max_coord = 0.0;
  for (const auto& [a, b] : ranges) max_coord = std::max({max_coord, std::abs(2.0 * a + 1), std::abs(2.0 * b + 1)});
  const double bound = static_cast<double>(n) * max_normal * max_coord + max_offset;
  const bool exact_in_double = bound < 9.0e15;

  const std::int64_t first = ranges[n - 1].first;
  const std::int64_t last = ranges[n - 1].second;
  const std::size_t run = static_cast<std::size_t>(last - first + 1);
  std::vector<double> soa(n * run);
  std::vector<std::uint8_t> inside(run);
  for_each_row(ranges, [&](const IndexTuple& prefix) {
    if (exact_in_double) {
      for (std::size_t k = 0; k + 1 < n; ++k) std::fill_n(soa.begin() + k * run, run, 2.0 * prefix[k] + 1.0);
      for (std::size_t i = 0; i < run; ++i) soa[(n - 1) * run + i] = 2.0 * (first + static_cast<std::int64_t>(i)) + 1.0;
      simd::classify(block, soa, run, run, inside);
    } else {
      for (std::size_t i = 0; i < run; ++i) {
        bool ok = true;
        for (std::size_t f = 0; f < int_normals.size() && ok; ++f) {
          Integer acc = 0;
          for (std::size_t k = 0; k < n; ++k) {
            std::int64_t idx = k + 1 < n ? prefix[k] : first + static_cast<std::int64_t>(i);
            acc += int_normals[f][k] * (2 * idx + 1);
          }
          ok = acc <= int_offsets[f];
        }
        inside[i] = ok ? 1 : 0;
      }
    }
    for (std::size_t i = 0; i < run; ++i) {
      if (!inside[i]) continue;
      IndexTuple idx = prefix;
      idx[n - 1] = first + static_cast<std::int64_t>(i);
      cells.push_back(std::move(idx));
    }
  });
  return GridSet(n, h, std::move(origin), std::move(cells));
}

}  // namespace convexlab
