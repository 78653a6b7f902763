#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "convexlab/rational.hpp"

namespace convexlab {

// Exact facet enumeration (and everything built on it) is capped here.
inline constexpr std::size_t kFacetDimCap = 6;

using Bitset = boost::dynamic_bitset<>;
using IndexTuple = std::vector<std::int64_t>;

struct Halfspace {
  QVector normal;  // normal . p <= offset
  Rational offset;
};

struct HalfspaceF {
  DVector normal;
  double offset = 0.0;
};

// Facet inequalities of a full-dimensional V-polytope plus, for each facet,
// the set of vertex indices lying on it.
struct FacetData {
  std::vector<Halfspace> halfspaces;
  std::vector<Bitset> incidence;
};

// Convex polytope as a vertex list in exact rational coordinates.
//
// Copies share a lazily filled facet cache; the cache is written once under
// std::call_once, so concurrent readers never see a partial value.
class VPolytope {
 public:
  VPolytope(std::size_t dim, std::vector<QVector> vertices);

  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& vertices() const { return vertices_; }
  bool full_dim() const { return full_dim_; }

  // Throws DimensionCapExceeded above kFacetDimCap and InvalidInput when the
  // polytope is not full-dimensional.
  const FacetData& facet_data() const;

  friend bool operator==(const VPolytope& a, const VPolytope& b);

 private:
  struct FacetCache {
    std::once_flag once;
    std::optional<FacetData> data;
  };

  std::size_t dim_;
  std::vector<QVector> vertices_;
  bool full_dim_ = false;
  std::shared_ptr<FacetCache> cache_;
};

// Floating-point counterpart; vertices are deduplicated with the scale-aware
// tolerance 1e-9 * (1 + |v|_inf).
class VPolytopeF {
 public:
  VPolytopeF(std::size_t dim, std::vector<DVector> vertices);

  std::size_t dim() const { return dim_; }
  const std::vector<DVector>& vertices() const { return vertices_; }
  bool full_dim() const { return full_dim_; }

 private:
  std::size_t dim_;
  std::vector<DVector> vertices_;
  bool full_dim_ = false;
};

double dedup_tolerance(const DVector& v);

class HPolytope {
 public:
  HPolytope(std::size_t dim, std::vector<Halfspace> halfspaces, bool bounded);

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  bool bounded() const { return bounded_; }
  bool contains(const QVector& point) const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> halfspaces_;
  bool bounded_;
};

class HPolytopeF {
 public:
  HPolytopeF(std::size_t dim, std::vector<HalfspaceF> halfspaces, bool bounded);
  explicit HPolytopeF(const HPolytope& exact);

  std::size_t dim() const { return dim_; }
  const std::vector<HalfspaceF>& halfspaces() const { return halfspaces_; }
  bool bounded() const { return bounded_; }
  // Boundary is included up to a relative slack of 1e-12 per halfspace.
  bool contains(std::span<const double> point) const;

 private:
  std::size_t dim_;
  std::vector<HalfspaceF> halfspaces_;
  bool bounded_;
};

// Axis-aligned voxel union. Cell i has center origin + i*h and covers the
// closed box of side h around it, so measure = |cells| * h^dim exactly.
class GridSet {
 public:
  GridSet(std::size_t dim, Rational cell, QVector origin, std::vector<IndexTuple> cells);

  std::size_t dim() const { return dim_; }
  const Rational& cell() const { return cell_; }
  const QVector& origin() const { return origin_; }
  const std::vector<IndexTuple>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }
  bool contains(const IndexTuple& index) const;
  Rational measure() const;
  QVector center(const IndexTuple& index) const;

  // Index offset d with other.origin = origin + d*h. Throws ResolutionMismatch
  // when the cell sizes differ or the origins are not lattice-compatible.
  IndexTuple alignment_offset(const GridSet& other) const;

  // Same set of cells expressed relative to `frame`'s origin.
  GridSet rebased_to(const GridSet& frame) const;

 private:
  std::size_t dim_;
  Rational cell_;
  QVector origin_;
  std::vector<IndexTuple> cells_;
};

// Finite subset of Z^d.
class LatticeSet {
 public:
  LatticeSet(std::size_t dim, std::vector<IndexTuple> points);

  std::size_t dim() const { return dim_; }
  const std::vector<IndexTuple>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  bool contains(const IndexTuple& p) const;

  friend bool operator==(const LatticeSet&, const LatticeSet&) = default;

 private:
  std::size_t dim_;
  std::vector<IndexTuple> points_;
};

// Sorted-unique index tuple helpers shared by GridSet and LatticeSet.
namespace index_set {

void normalize(std::vector<IndexTuple>& items);
std::vector<IndexTuple> sumset(std::span<const IndexTuple> a, std::span<const IndexTuple> b);
std::vector<IndexTuple> difference(std::span<const IndexTuple> a, std::span<const IndexTuple> b);
std::vector<IndexTuple> intersect(std::span<const IndexTuple> a, std::span<const IndexTuple> b);
std::vector<IndexTuple> unite(std::span<const IndexTuple> a, std::span<const IndexTuple> b);
std::vector<IndexTuple> translate(std::span<const IndexTuple> a, const IndexTuple& by);
std::vector<IndexTuple> negate(std::span<const IndexTuple> a);
// Elements of a that are not in b.
std::vector<IndexTuple> minus(std::span<const IndexTuple> a, std::span<const IndexTuple> b);

}  // namespace index_set

IndexTuple add(const IndexTuple& a, const IndexTuple& b);
IndexTuple sub(const IndexTuple& a, const IndexTuple& b);

GridSet unite(const GridSet& a, const GridSet& b);
GridSet intersect(const GridSet& a, const GridSet& b);
GridSet translate(const GridSet& g, const IndexTuple& by);

LatticeSet sumset(const LatticeSet& a, const LatticeSet& b);
LatticeSet difference_set(const LatticeSet& a, const LatticeSet& b);
LatticeSet intersect(const LatticeSet& a, const LatticeSet& b);
LatticeSet translate(const LatticeSet& a, const IndexTuple& by);

// conv{0, L e_1, ..., L e_n}.
VPolytope make_simplex(std::size_t n, const Rational& L);
// [lo, hi] box given by two corners.
VPolytope make_box(const QVector& lo, const QVector& hi);
VPolytope make_cube(std::size_t n, const Rational& side = 1);

VPolytope reflect(const VPolytope& p);
VPolytopeF reflect(const VPolytopeF& p);
GridSet reflect(const GridSet& g);
LatticeSet reflect(const LatticeSet& s);

VPolytope translate(const VPolytope& p, const QVector& by);

// {center + t (p - center)} for t in [0, 1].
VPolytope scale_about(const VPolytope& p, const QVector& center, const Rational& t);
VPolytopeF scale_about(const VPolytopeF& p, const DVector& center, double t);

QVector vertex_centroid(const VPolytope& p);

VPolytopeF to_float(const VPolytope& p);
VPolytope to_exact(const VPolytopeF& p);

// Cells whose centers lie in P, on the grid with origin (h/2, ..., h/2).
GridSet rasterize(const VPolytope& p, const Rational& h);

}  // namespace convexlab
