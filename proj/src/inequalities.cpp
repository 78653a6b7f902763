#include "convexlab/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "convexlab/bigfloat.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/linalg.hpp"
#include "convexlab/measure.hpp"
#include "convexlab/random.hpp"

namespace convexlab {

namespace {

constexpr mpfr_prec_t kPrecision = 256;

std::string tuple_string(const IndexTuple& x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < x.size(); ++k) os << (k ? "," : "") << x[k];
  os << ')';
  return os.str();
}

std::string vector_string(const QVector& x) {
  std::string s = "(";
  for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + to_string(x[k]);
  return s + ")";
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

Rational power(const Rational& base, std::size_t e) {
  Rational out = 1;
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

BigFloat nth_root(const Rational& v, std::size_t n) {
  return root(BigFloat(v, kPrecision, Round::nearest), static_cast<unsigned long>(n), Round::nearest);
}

struct KkCounts {
  std::size_t sum_of_slice = 0;
  std::size_t slice_of_sum = 0;
  std::size_t missing = 0;
  bool x_in_difference = false;
};

KkCounts koester_katz_counts(std::span<const IndexTuple> a, std::span<const IndexTuple> b,
                             std::span<const IndexTuple> sum, const IndexTuple& x) {
  IndexTuple minus_x(x.size());
  for (std::size_t k = 0; k < x.size(); ++k) minus_x[k] = -x[k];
  auto a_x = index_set::intersect(a, index_set::translate(a, minus_x));
  auto sum_x = index_set::intersect(sum, index_set::translate(sum, minus_x));
  auto lhs = index_set::sumset(a_x, b);
  KkCounts c;
  c.x_in_difference = !a_x.empty();
  c.sum_of_slice = lhs.size();
  c.slice_of_sum = sum_x.size();
  c.missing = index_set::minus(lhs, sum_x).size();
  return c;
}

CheckReport koester_katz_report(std::string name, const KkCounts& c, const IndexTuple& x) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = Rational(static_cast<long>(c.missing));
  r.rhs = Rational(0);
  r.parameters["x"] = tuple_string(x);
  r.metrics["sumOfSlice"] = as_int(c.sum_of_slice);
  r.metrics["sliceOfSum"] = as_int(c.slice_of_sum);
  r.metrics["holds.containment"] = c.missing == 0;
  if (!c.x_in_difference) r.notes.push_back("x is outside A-A, so A_x is empty and the containment is trivial");
  return r;
}

void require_same_cell(const GridSet& a, const GridSet& b) {
  if (a.dim() != b.dim()) throw ResolutionMismatch("grid dimensions differ");
  if (a.cell() != b.cell()) throw ResolutionMismatch("grid cell sizes differ");
}

const char* kGridNote =
    "B is a voxel union: every B-dependent measure is resolution-limited at the stated cell size";
const char* kLemma1Scope = "lemma1 is checked only for polytopes and voxel unions, where the integrand is measurable";

}  // namespace

std::string_view to_string(TheoremForm form) {
  switch (form) {
    case TheoremForm::full: return "full";
    case TheoremForm::a_ge_b: return "a_ge_b";
    case TheoremForm::b_ge_a: return "b_ge_a";
  }
  return "full";
}

TheoremForm parse_theorem_form(std::string_view text) {
  if (text == "full" || text == "FULL") return TheoremForm::full;
  if (text == "a_ge_b" || text == "A_GE_B") return TheoremForm::a_ge_b;
  if (text == "b_ge_a" || text == "B_GE_A") return TheoremForm::b_ge_a;
  throw InvalidInput("unknown theorem form '" + std::string(text) + "'");
}

std::string describe(const VPolytope& p) {
  return "vpolytope dim=" + std::to_string(p.dim()) + " vertices=" + std::to_string(p.vertices().size()) +
         (p.full_dim() ? "" : " (lower-dimensional)");
}

std::string describe(const GridSet& g) {
  return "grid dim=" + std::to_string(g.dim()) + " h=" + to_string(g.cell()) + " cells=" + std::to_string(g.size());
}

std::string describe(const LatticeSet& s) {
  return "lattice dim=" + std::to_string(s.dim()) + " points=" + std::to_string(s.size());
}

// ---------------------------------------------------------------- Ruzsa

CheckReport check_ruzsa_triangle(const LatticeSet& a, const LatticeSet& b, const LatticeSet& c) {
  require(a.dim() == b.dim() && b.dim() == c.dim(), "Ruzsa triangle: sets live in different dimensions");
  require(!c.empty(), "Ruzsa triangle: C must be nonempty");
  const std::size_t a_minus_b = difference_set(a, b).size();
  const std::size_t a_plus_c = sumset(a, c).size();
  const std::size_t c_plus_b = sumset(c, b).size();
  CheckReport r;
  r.name = "ruzsa_triangle";
  r.inputs = {"A: " + describe(a), "B: " + describe(b), "C: " + describe(c)};
  r.lhs = Rational(static_cast<long>(a_minus_b)) * static_cast<long>(c.size());
  r.rhs = Rational(static_cast<long>(a_plus_c)) * static_cast<long>(c_plus_b);
  r.metrics["|A-B|"] = as_int(a_minus_b);
  r.metrics["|A+C|"] = as_int(a_plus_c);
  r.metrics["|C+B|"] = as_int(c_plus_b);
  r.metrics["|C|"] = as_int(c.size());
  r.finalize();
  return r;
}

// ---------------------------------------------------------------- Koester-Katz

CheckReport check_koester_katz(const LatticeSet& a, const LatticeSet& b, const IndexTuple& x) {
  require(a.dim() == b.dim() && x.size() == a.dim(), "Koester-Katz: dimension mismatch");
  auto sum = index_set::sumset(a.points(), b.points());
  CheckReport r = koester_katz_report("koester_katz", koester_katz_counts(a.points(), b.points(), sum, x), x);
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.finalize();
  return r;
}

CheckReport check_koester_katz(const GridSet& a, const GridSet& b, const IndexTuple& x) {
  require_same_cell(a, b);
  require(x.size() == a.dim(), "Koester-Katz: dimension mismatch");
  // Sums of cell indices live in the frame with origin a.origin + b.origin on both sides.
  auto sum = index_set::sumset(a.cells(), b.cells());
  CheckReport r = koester_katz_report("koester_katz_grid", koester_katz_counts(a.cells(), b.cells(), sum, x), x);
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.parameters["h"] = to_string(a.cell());
  r.notes.push_back(kGridNote);
  r.finalize();
  return r;
}

namespace {

CheckReport koester_katz_all(std::string name, std::span<const IndexTuple> a, std::span<const IndexTuple> b) {
  auto sum = index_set::sumset(a, b);
  auto differences = index_set::difference(a, a);
  std::size_t missing = 0;
  std::size_t equalities = 0;
  for (const auto& x : differences) {
    KkCounts c = koester_katz_counts(a, b, sum, x);
    missing += c.missing;
    if (c.sum_of_slice == c.slice_of_sum) ++equalities;
  }
  CheckReport r;
  r.name = std::move(name);
  r.lhs = Rational(static_cast<long>(missing));
  r.rhs = Rational(0);
  r.metrics["differencesChecked"] = as_int(differences.size());
  r.metrics["equalityCases"] = as_int(equalities);
  r.metrics["holds.containment"] = missing == 0;
  return r;
}

}  // namespace

CheckReport check_koester_katz_all(const LatticeSet& a, const LatticeSet& b) {
  require(a.dim() == b.dim(), "Koester-Katz: dimension mismatch");
  CheckReport r = koester_katz_all("koester_katz_exhaustive", a.points(), b.points());
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.finalize();
  return r;
}

CheckReport check_koester_katz_all(const GridSet& a, const GridSet& b) {
  require_same_cell(a, b);
  CheckReport r = koester_katz_all("koester_katz_grid_exhaustive", a.cells(), b.cells());
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.parameters["h"] = to_string(a.cell());
  r.notes.push_back(kGridNote);
  r.finalize();
  return r;
}

// ---------------------------------------------------------------- Lemma 2

CheckReport check_lemma2_at(const VPolytope& a, const Rational& r, const std::vector<QVector>& xs) {
  require(sgn(r) >= 0 && r <= 1, "lemma2: r must lie in [0, 1]");
  require(a.full_dim(), "lemma2: A must be full-dimensional");
  if (a.dim() > kFacetDimCap) throw DimensionCapExceeded("lemma2 needs exact slice volumes (dim <= 6)");
  require(!xs.empty(), "lemma2: no difference vectors");
  const std::size_t n = a.dim();
  const Rational vol_a = exact_volume(a);
  const Rational bound = power(Rational(1) - r, n) * vol_a;
  const HPolytope h = facet_enum(a);

  std::optional<Rational> min_slice;
  QVector argmin;
  for (const auto& x : xs) {
    require(x.size() == n, "lemma2: difference vector has wrong dimension");
    auto slice = vertex_enum(slice_body(h, x));
    Rational vol = slice ? exact_volume(*slice) : Rational(0);
    if (!min_slice || vol < *min_slice) {
      min_slice = vol;
      argmin = x;
    }
  }
  CheckReport rep;
  rep.name = "lemma2_slice_bound";
  rep.inputs = {"A: " + describe(a)};
  rep.parameters["r"] = to_string(r);
  rep.parameters["trials"] = std::to_string(xs.size());
  rep.parameters["tolRel"] = "1e-9";
  rep.lhs = bound;
  rep.rhs = *min_slice;
  rep.error_budget = kLemma2Tolerance * bound.get_d();
  rep.metrics["mu(A)"] = vol_a;
  rep.metrics["argminX"] = vector_string(argmin);
  if (sgn(bound) > 0) {
    Rational min_ratio = *min_slice / bound;
    rep.metrics["minRatio"] = min_ratio;
    rep.metrics["holds.minRatio>=1-tol"] = min_ratio.get_d() >= 1.0 - kLemma2Tolerance;
  } else {
    rep.notes.push_back("bound (1-r)^n mu(A) is zero; the inequality is trivial");
  }
  rep.finalize();
  return rep;
}

CheckReport check_lemma2(const VPolytope& a, const Rational& r, std::size_t trials, std::uint64_t seed) {
  require(sgn(r) >= 0 && r <= 1, "lemma2: r must lie in [0, 1]");
  require(trials >= 1, "lemma2: need at least one trial");
  require(a.full_dim(), "lemma2: A must be full-dimensional");
  const std::size_t n = a.dim();
  const HPolytope h = facet_enum(a);
  const HPolytopeF hf(h);
  const Box box = bounding_box(a);
  CounterRng rng(seed);
  std::size_t rejected = 0;
  auto draw = [&]() {
    DVector p(n);
    for (std::size_t attempt = 0; attempt < 1'000'000; ++attempt) {
      for (std::size_t k = 0; k < n; ++k) p[k] = box.lo[k] + rng.uniform() * (box.hi[k] - box.lo[k]);
      if (hf.contains(p)) {
        QVector q = to_rational(p);
        if (h.contains(q)) return q;  // exact confirmation: x must lie in r(A - A)
      }
      ++rejected;
    }
    throw InvalidInput("lemma2: rejection sampling failed; A is too thin inside its bounding box");
  };
  std::vector<QVector> xs;
  xs.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    QVector a1 = draw();
    QVector a2 = draw();
    xs.push_back(linalg::scale(linalg::sub(a1, a2), r));
  }
  CheckReport rep = check_lemma2_at(a, r, xs);
  rep.parameters["seed"] = std::to_string(seed);
  rep.metrics["rejectedSamples"] = as_int(rejected);
  rep.finalize();
  return rep;
}

// ---------------------------------------------------------------- Lemma 1

CheckReport check_lemma1(const VPolytope& a, const VPolytope& b, const Rational& hx) {
  const std::size_t n = a.dim();
  require(b.dim() == n, "lemma1: A and B live in different dimensions");
  if (n > 3) throw DimensionCapExceeded("lemma1 quadrature is limited to dimension <= 3");
  require(a.full_dim(), "lemma1: A must be full-dimensional");
  require(sgn(hx) > 0, "lemma1: quadrature step must be positive");

  const HPolytope h = facet_enum(a);
  const GridSet nodes = rasterize(difference_body(a), hx);
  require(!nodes.empty(), "lemma1: quadrature grid misses A-A; refine hx");
  std::vector<Rational> values;
  values.reserve(nodes.size());
  Rational total = 0;
  for (const auto& cell : nodes.cells()) {
    auto slice = vertex_enum(slice_body(h, nodes.center(cell)));
    Rational f = slice ? exact_volume(minkowski_sum(*slice, b)) : Rational(0);
    total += f;
    values.push_back(std::move(f));
  }
  const Rational cell_volume = power(hx, n);
  const Rational lhs = total * cell_volume;
  const Rational sum_volume = exact_volume(minkowski_sum(a, b));

  // Lipschitz estimate from finite differences between axis neighbours.
  double lip = 0.0;
  const double step = hx.get_d();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      IndexTuple next = nodes.cells()[i];
      ++next[k];
      auto it = std::lower_bound(nodes.cells().begin(), nodes.cells().end(), next);
      if (it == nodes.cells().end() || *it != next) continue;
      const auto j = static_cast<std::size_t>(it - nodes.cells().begin());
      lip = std::max(lip, std::abs(Rational(values[j] - values[i]).get_d()) / step);
    }
  }
  const double budget = 4.0 * static_cast<double>(n) * step * lip * nodes.measure().get_d();

  CheckReport r;
  r.name = "lemma1_integral";
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.parameters["hx"] = to_string(hx);
  r.parameters["rule"] = "midpoint over cells of A-A";
  r.lhs = lhs;
  r.rhs = sum_volume * sum_volume;
  r.error_budget = budget;
  r.metrics["quadratureNodes"] = as_int(nodes.size());
  r.metrics["lipschitzEstimate"] = lip;
  r.metrics["mu(A+B)"] = sum_volume;
  r.notes.push_back(kLemma1Scope);
  r.finalize();
  return r;
}

CheckReport check_lemma1(const VPolytope& a, const GridSet& b, const Rational& hx) {
  const std::size_t n = a.dim();
  require(b.dim() == n, "lemma1: A and B live in different dimensions");
  if (n > 3) throw DimensionCapExceeded("lemma1 quadrature is limited to dimension <= 3");
  if (hx != b.cell()) throw ResolutionMismatch("lemma1 with a grid B needs hx equal to B's cell size");
  require(!b.empty(), "lemma1: B is empty");

  const GridSet ag = rasterize(a, hx);
  require(!ag.empty(), "lemma1: A vanishes at this resolution");
  const auto differences = index_set::difference(ag.cells(), ag.cells());
  Integer total = 0;
  for (const auto& x : differences) {
    IndexTuple minus_x(n);
    for (std::size_t k = 0; k < n; ++k) minus_x[k] = -x[k];
    GridSet slice(n, hx, ag.origin(), index_set::intersect(ag.cells(), index_set::translate(ag.cells(), minus_x)));
    total += static_cast<unsigned long>(grid_minkowski(slice, b).size());
  }
  const std::size_t sum_cells = grid_minkowski(ag, b).size();
  const Rational cell_volume = power(hx, n);

  CheckReport r;
  r.name = "lemma1_integral_grid";
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.parameters["hx"] = to_string(hx);
  r.parameters["rule"] = "discrete sum over the voxel lattice of A-A";
  r.lhs = Rational(total) * cell_volume * cell_volume;
  const Rational sum_measure = cell_volume * static_cast<unsigned long>(sum_cells);
  r.rhs = sum_measure * sum_measure;
  r.metrics["differencesChecked"] = as_int(differences.size());
  r.metrics["mu(A+B)"] = sum_measure;
  r.metrics["mu(A) rasterized"] = ag.measure();
  r.notes.push_back(kGridNote);
  r.notes.push_back(kLemma1Scope);
  r.notes.push_back("A is replaced by its rasterization; the discrete inequality is exact on the lattice");
  r.finalize();
  return r;
}

// ---------------------------------------------------------------- Brunn-Minkowski

CheckReport check_brunn_minkowski(const VPolytope& a, const VPolytope& b) {
  require(a.dim() == b.dim(), "Brunn-Minkowski: dimension mismatch");
  require(a.full_dim() && b.full_dim(), "Brunn-Minkowski: both bodies must be full-dimensional");
  const auto n = static_cast<unsigned long>(a.dim());
  const Rational va = exact_volume(a), vb = exact_volume(b);
  const Rational vs = exact_volume(minkowski_sum(a, b));

  Interval ra = root_enclosure(va, n, kPrecision);
  Interval rb = root_enclosure(vb, n, kPrecision);
  Interval rs = root_enclosure(vs, n, kPrecision);
  BigFloat lhs_hi = add(ra.hi, rb.hi, Round::up);
  BigFloat lhs_lo = add(ra.lo, rb.lo, Round::down);

  CheckReport r;
  r.name = "brunn_minkowski";
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.parameters["precisionBits"] = std::to_string(kPrecision);
  r.metrics["mu(A)"] = va;
  r.metrics["mu(B)"] = vb;
  r.metrics["mu(A+B)"] = vs;
  // lhs: mu(A)^(1/n) + mu(B)^(1/n) rounded up; rhs: mu(A+B)^(1/n) rounded down.
  r.lhs = lhs_hi.to_double(Round::up);
  r.rhs = rs.lo.to_double(Round::down);
  if (lhs_hi <= rs.lo) {
    r.metrics["decidedBy"] = std::string("directed rounding");
  } else if (lhs_lo > rs.hi) {
    r.metrics["decidedBy"] = std::string("directed rounding");
  } else {
    // Enclosures overlap. When mu(B)/mu(A) = s^n with s rational the inequality
    // is mu(A+B) >= mu(A) (1+s)^n, an exact rational comparison.
    if (auto s = exact_root(vb / va, n)) {
      r.lhs = va * power(Rational(1) + *s, n);
      r.rhs = vs;
      r.metrics["decidedBy"] = std::string("exact rational comparison");
      r.notes.push_back("mu(B)/mu(A) = s^n with s = " + to_string(*s) + "; compared as mu(A)(1+s)^n <= mu(A+B)");
    } else {
      r.metrics["decidedBy"] = std::string("undecided at working precision");
    }
  }
  r.finalize();
  return r;
}

// ---------------------------------------------------------------- Theorem

namespace {

struct TheoremMeasures {
  Rational va, vb, vd, vs;
  std::optional<Rational> vs_subset;  // mu(A + B') for the b_ge_a route
  bool subset_contained = true;
  std::optional<Rational> subset_measure;
  std::optional<Rational> subset_residual;
};

CheckReport theorem_report(std::size_t dim, const TheoremMeasures& m, TheoremForm form, double c_budget) {
  const auto n = static_cast<unsigned long>(dim);
  const BigFloat root_a = nth_root(m.va, n);
  const BigFloat root_b = nth_root(m.vb, n);
  const BigFloat vb = BigFloat(m.vb, kPrecision, Round::nearest);
  const BigFloat va = BigFloat(m.va, kPrecision, Round::nearest);
  const BigFloat vd = BigFloat(m.vd, kPrecision, Round::nearest);
  const BigFloat sqrt_n = sqrt(BigFloat(static_cast<double>(n), kPrecision), Round::nearest);
  const BigFloat omega = div(root_a, root_b, Round::nearest);
  const unsigned long m_sqrt = integer_sqrt(n);

  CheckReport r;
  r.name = std::string("theorem_") + std::string(to_string(form));
  BigFloat lhs(kPrecision);
  switch (form) {
    case TheoremForm::full: {
      BigFloat geometric(1.0, kPrecision);
      BigFloat term(1.0, kPrecision);
      for (unsigned long k = 1; k <= m_sqrt; ++k) {
        term = mul(term, omega, Round::nearest);
        geometric = add(geometric, term, Round::nearest);
      }
      BigFloat proof_sum(0.0, kPrecision);
      term = BigFloat(1.0, kPrecision);
      for (unsigned long k = 1; k <= m_sqrt + 1; ++k) {
        term = mul(term, omega, Round::nearest);
        proof_sum = add(proof_sum, term, Round::nearest);
      }
      BigFloat vb_power = div(vb, root_b, Round::nearest);  // mu(B)^(1 - 1/n)
      lhs = mul(mul(mul(geometric, vb_power, Round::nearest), root_a, Round::nearest), vd, Round::nearest);
      r.metrics["geometricSum_k0..floor(sqrt n)"] = geometric.to_double();
      r.metrics["proofSum_k1..Delta"] = proof_sum.to_double();
      break;
    }
    case TheoremForm::a_ge_b: {
      BigFloat vb_power = div(vb, root_b, Round::nearest);
      lhs = mul(mul(mul(sqrt_n, root_a, Round::nearest), vb_power, Round::nearest), vd, Round::nearest);
      break;
    }
    case TheoremForm::b_ge_a: {
      lhs = mul(mul(sqrt_n, va, Round::nearest), vd, Round::nearest);
      break;
    }
  }
  const BigFloat vs = BigFloat(m.vs, kPrecision, Round::nearest);
  const BigFloat vs2 = mul(vs, vs, Round::nearest);
  const BigFloat c_emp = div(lhs, vs2, Round::nearest);

  r.lhs = lhs.to_double();
  r.rhs = mul(BigFloat(c_budget, kPrecision), vs2, Round::nearest).to_double();
  r.parameters["cBudget"] = std::to_string(c_budget);
  r.metrics["cEmp"] = c_emp.to_double();
  r.metrics["omega"] = omega.to_double();
  r.metrics["mu(A)"] = m.va;
  r.metrics["mu(B)"] = m.vb;
  r.metrics["mu(A-A)"] = m.vd;
  r.metrics["mu(A+B)"] = m.vs;
  if (m.vs_subset) {
    const BigFloat vss = BigFloat(*m.vs_subset, kPrecision, Round::nearest);
    r.metrics["mu(A+B')"] = *m.vs_subset;
    r.metrics["mu(B')"] = *m.subset_measure;
    r.metrics["mu(B') residual"] = *m.subset_residual;
    r.metrics["cEmpSubset"] = div(lhs, mul(vss, vss, Round::nearest), Round::nearest).to_double();
    r.metrics["holds.mu(A+B')<=mu(A+B)"] = *m.vs_subset <= m.vs;
    r.metrics["holds.B'⊆B"] = m.subset_contained;
  }
  return r;
}

void check_form_preconditions(const Rational& va, const Rational& vb, TheoremForm form) {
  require(sgn(va) > 0, "theorem: A must have positive measure");
  require(sgn(vb) > 0, "theorem: B must have positive measure");
  if (form == TheoremForm::a_ge_b) require(va >= vb, "theorem a_ge_b needs mu(A) >= mu(B)");
  if (form == TheoremForm::b_ge_a) require(vb >= va, "theorem b_ge_a needs mu(B) >= mu(A)");
}

}  // namespace

CheckReport check_theorem(const VPolytope& a, const VPolytope& b, TheoremForm form, double c_budget) {
  require(a.dim() == b.dim(), "theorem: dimension mismatch");
  require(a.full_dim(), "theorem: A must be full-dimensional");
  if (a.dim() > kFacetDimCap) throw DimensionCapExceeded("theorem check needs exact volumes (dim <= 6)");
  TheoremMeasures m;
  m.va = exact_volume(a);
  m.vb = exact_volume(b);
  check_form_preconditions(m.va, m.vb, form);
  m.vd = exact_volume(difference_body(a));
  m.vs = exact_volume(minkowski_sum(a, b));
  if (form == TheoremForm::b_ge_a) {
    auto sel = select_subset_of_measure(b, m.va);
    const HPolytope hb = facet_enum(b);
    m.subset_contained = std::all_of(sel.subset.vertices().begin(), sel.subset.vertices().end(),
                                     [&](const QVector& v) { return hb.contains(v); });
    m.vs_subset = exact_volume(minkowski_sum(a, sel.subset));
    m.subset_measure = sel.measure;
    m.subset_residual = sel.residual;
  }
  CheckReport r = theorem_report(a.dim(), m, form, c_budget);
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.finalize();
  return r;
}

CheckReport check_theorem(const VPolytope& a, const GridSet& b, TheoremForm form, double c_budget) {
  require(a.dim() == b.dim(), "theorem: dimension mismatch");
  require(a.full_dim(), "theorem: A must be full-dimensional");
  if (a.dim() > kFacetDimCap) throw DimensionCapExceeded("theorem check needs exact volumes (dim <= 6)");
  TheoremMeasures m;
  m.va = exact_volume(a);
  m.vb = b.measure();
  check_form_preconditions(m.va, m.vb, form);
  m.vd = exact_volume(difference_body(a));
  const GridSet ag = rasterize(a, b.cell());
  m.vs = grid_minkowski(ag, b).measure();
  if (form == TheoremForm::b_ge_a) {
    auto sel = select_subset_of_measure(b, m.va);
    m.subset_contained = index_set::minus(sel.subset.cells(), b.cells()).empty();
    m.vs_subset = grid_minkowski(ag, sel.subset).measure();
    m.subset_measure = sel.measure;
    m.subset_residual = sel.residual;
  }
  CheckReport r = theorem_report(a.dim(), m, form, c_budget);
  r.inputs = {"A: " + describe(a), "B: " + describe(b)};
  r.parameters["h"] = to_string(b.cell());
  r.notes.push_back(kGridNote);
  r.notes.push_back("mu(A+B) is the voxel dilation of A's rasterization with B");
  r.finalize();
  return r;
}

}  // namespace convexlab
