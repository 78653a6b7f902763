#include "convexlab/measure.hpp"

#include <cmath>
#include <map>
#include <thread>

#include "convexlab/errors.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/random.hpp"

namespace convexlab {

std::string_view to_string(VolumeKind kind) {
  switch (kind) {
    case VolumeKind::exact: return "exact";
    case VolumeKind::grid: return "grid";
    case VolumeKind::montecarlo: return "montecarlo";
  }
  return "exact";
}

double Box::volume() const {
  double v = 1.0;
  for (std::size_t k = 0; k < lo.size(); ++k) v *= hi[k] - lo[k];
  return v;
}

Box bounding_box(const VPolytope& p) {
  Box box{to_double(p.vertices().front()), to_double(p.vertices().front())};
  for (const auto& v : p.vertices()) {
    for (std::size_t k = 0; k < p.dim(); ++k) {
      box.lo[k] = std::min(box.lo[k], v[k].get_d());
      box.hi[k] = std::max(box.hi[k], v[k].get_d());
    }
  }
  return box;
}

Box bounding_box(const GridSet& g) {
  require(!g.empty(), "bounding box of an empty grid");
  const double h = g.cell().get_d();
  Box box{DVector(g.dim(), INFINITY), DVector(g.dim(), -INFINITY)};
  for (const auto& c : g.cells()) {
    for (std::size_t k = 0; k < g.dim(); ++k) {
      double center = g.origin()[k].get_d() + h * static_cast<double>(c[k]);
      box.lo[k] = std::min(box.lo[k], center - h / 2);
      box.hi[k] = std::max(box.hi[k], center + h / 2);
    }
  }
  return box;
}

namespace {

using Simplex = std::vector<std::size_t>;

// Pulling triangulation driven purely by the facet/vertex incidence: the
// facets of a face S are the inclusion-maximal proper sets S ∩ F_j.
class PullingTriangulator {
 public:
  explicit PullingTriangulator(const std::vector<Bitset>& facets) : facets_(facets) {}

  const std::vector<Simplex>& run(const Bitset& face, std::size_t face_dim) {
    if (auto it = memo_.find(face); it != memo_.end()) return it->second;
    std::vector<Simplex> out;
    if (face.count() == face_dim + 1) {
      Simplex s;
      for (auto i = face.find_first(); i != Bitset::npos; i = face.find_next(i)) s.push_back(i);
      out.push_back(std::move(s));
    } else {
      const std::size_t apex = face.find_first();
      std::vector<Bitset> candidates;
      for (const auto& f : facets_) {
        Bitset t = face & f;
        if (t == face || t.none()) continue;
        candidates.push_back(std::move(t));
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
      for (std::size_t i = 0; i < candidates.size(); ++i) {
        const Bitset& sub = candidates[i];
        if (sub.test(apex)) continue;
        bool maximal = true;
        for (std::size_t j = 0; j < candidates.size() && maximal; ++j) {
          if (j != i && sub.is_proper_subset_of(candidates[j])) maximal = false;
        }
        if (!maximal) continue;
        for (const auto& s : run(sub, face_dim - 1)) {
          Simplex t = s;
          t.push_back(apex);
          out.push_back(std::move(t));
        }
      }
    }
    return memo_.emplace(face, std::move(out)).first->second;
  }

 private:
  const std::vector<Bitset>& facets_;
  std::map<Bitset, std::vector<Simplex>> memo_;
};

void check_exact_cap(const VPolytope& p) {
  if (p.dim() > kFacetDimCap) {
    throw DimensionCapExceeded("exact volume is capped at dimension " + std::to_string(kFacetDimCap) +
                               "; use volume_grid or volume_mc");
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> facet_triangulation(const VPolytope& p) {
  check_exact_cap(p);
  const FacetData& facets = p.facet_data();
  PullingTriangulator tri(facets.incidence);
  std::vector<Simplex> out;
  for (const auto& f : facets.incidence) {
    const auto& simplices = tri.run(f, p.dim() - 1);
    out.insert(out.end(), simplices.begin(), simplices.end());
  }
  return out;
}

VolumeEstimate volume_exact(const VPolytope& p, const std::optional<QVector>& apex) {
  check_exact_cap(p);
  VolumeEstimate est;
  est.kind = VolumeKind::exact;
  if (!p.full_dim()) {
    est.exact = Rational(0);
    return est;
  }
  const std::size_t n = p.dim();
  QVector c = apex ? *apex : vertex_centroid(p);
  require(c.size() == n, "apex has wrong dimension");
  if (apex) require(facet_enum(p).contains(c), "triangulation apex must lie in the polytope");

  const FacetData& facets = p.facet_data();
  PullingTriangulator tri(facets.incidence);
  const auto& verts = p.vertices();
  Rational total = 0;
  for (const auto& f : facets.incidence) {
    for (const auto& s : tri.run(f, n - 1)) {
      linalg::Matrix m;
      m.reserve(n);
      for (std::size_t i : s) m.push_back(linalg::sub(verts[i], c));
      total += abs(linalg::determinant(std::move(m)));
    }
  }
  total /= Rational(factorial(n));
  est.exact = total;
  est.value = total.get_d();
  return est;
}

Rational exact_volume(const VPolytope& p) { return *volume_exact(p).exact; }

VolumeEstimate volume_grid(const GridSet& g) {
  VolumeEstimate est;
  est.kind = VolumeKind::grid;
  est.exact = g.measure();
  est.value = est.exact->get_d();
  return est;
}

std::uint64_t count_hits(const MembershipOracle& oracle, const Box& box, std::uint64_t first, std::uint64_t count,
                         std::uint64_t seed, bool use_kernel) {
  const std::size_t n = oracle.dim;
  constexpr std::size_t kBatch = 1024;
  std::vector<double> soa(n * kBatch);
  DVector point(n);
  std::uint64_t hits = 0;
  for (std::uint64_t start = 0; start < count; start += kBatch) {
    const std::size_t batch = static_cast<std::size_t>(std::min<std::uint64_t>(kBatch, count - start));
    for (std::size_t i = 0; i < batch; ++i) {
      const std::uint64_t sample = first + start + i;
      for (std::size_t k = 0; k < n; ++k) {
        double u = counter_unit(seed, sample * n + k);
        soa[k * kBatch + i] = box.lo[k] + u * (box.hi[k] - box.lo[k]);
      }
    }
    if (use_kernel && oracle.halfspaces) {
      hits += simd::count_inside(*oracle.halfspaces, soa, kBatch, batch);
    } else {
      for (std::size_t i = 0; i < batch; ++i) {
        for (std::size_t k = 0; k < n; ++k) point[k] = soa[k * kBatch + i];
        hits += oracle.test(point) ? 1 : 0;
      }
    }
  }
  return hits;
}

VolumeEstimate volume_mc(const MembershipOracle& oracle, const Box& box, std::uint64_t samples, std::uint64_t seed,
                         unsigned workers) {
  require(samples >= 1, "Monte Carlo needs at least one sample");
  require(box.dim() == oracle.dim && box.hi.size() == oracle.dim, "box and oracle dimensions differ");
  const double box_volume = box.volume();
  require(box_volume > 0.0, "Monte Carlo box has zero volume");

  workers = std::max(1U, workers);
  std::vector<std::uint64_t> shard_hits(workers, 0);
  const std::uint64_t per = samples / workers;
  auto shard = [&](unsigned w) {
    const std::uint64_t first = per * w;
    const std::uint64_t count = w + 1 == workers ? samples - first : per;
    shard_hits[w] = count_hits(oracle, box, first, count, seed);
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(shard, w);
    for (auto& t : threads) t.join();
  }
  std::uint64_t hits = 0;
  for (auto h : shard_hits) hits += h;

  const double p = static_cast<double>(hits) / static_cast<double>(samples);
  VolumeEstimate est;
  est.kind = VolumeKind::montecarlo;
  est.value = box_volume * p;
  est.std_error = box_volume * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.samples = samples;
  est.seed = seed;
  return est;
}

Rational default_grid_step(const VPolytope& p) {
  Rational smallest;
  bool first = true;
  for (std::size_t k = 0; k < p.dim(); ++k) {
    Rational lo = p.vertices().front()[k], hi = lo;
    for (const auto& v : p.vertices()) {
      if (v[k] < lo) lo = v[k];
      if (v[k] > hi) hi = v[k];
    }
    Rational extent = hi - lo;
    if (sgn(extent) > 0 && (first || extent < smallest)) {
      smallest = extent;
      first = false;
    }
  }
  if (first) return Rational(1, 100);
  return smallest / 100;
}

}  // namespace convexlab
