#include <doctest.h>

#include <cmath>

#include "convexlab/bundled.hpp"
#include "convexlab/errors.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/inequalities.hpp"
#include "convexlab/measure.hpp"
#include "oracles.hpp"

using namespace convexlab;

namespace {

template <class T>
T metric(const CheckReport& r, const std::string& key) {
  auto it = r.metrics.find(key);
  REQUIRE_MESSAGE(it != r.metrics.end(), "missing metric " << key);
  return std::get<T>(it->second);
}

Rational exact_lhs(const CheckReport& r) { return std::get<Rational>(r.lhs); }
Rational exact_rhs(const CheckReport& r) { return std::get<Rational>(r.rhs); }

std::set<oracle::Point> as_set(const LatticeSet& s) {
  std::set<oracle::Point> out;
  for (const auto& p : s.points()) out.insert(oracle::Point(p.begin(), p.end()));
  return out;
}

VPolytope scaled(const VPolytope& p, const Rational& t) {
  std::vector<QVector> vs = p.vertices();
  for (auto& v : vs) {
    for (auto& x : v) x *= t;
  }
  return VPolytope(p.dim(), vs);
}

}  // namespace

TEST_CASE("Ruzsa triangle examples") {
  const LatticeSet zero(1, {{0}});
  CheckReport r = check_ruzsa_triangle(zero, zero, zero);
  CHECK(r.pass);
  CHECK(exact_lhs(r) == 1);
  CHECK(exact_rhs(r) == 1);
  CHECK(r.error_budget == 0.0);

  const LatticeSet ab(1, {{0}, {1}});
  const LatticeSet c(1, {{0}, {2}});
  r = check_ruzsa_triangle(ab, ab, c);
  CHECK(r.pass);
  CHECK(metric<std::int64_t>(r, "|A-B|") == 3);
  CHECK(metric<std::int64_t>(r, "|A+C|") == 4);
  CHECK(metric<std::int64_t>(r, "|C+B|") == 4);
  CHECK(exact_lhs(r) == 6);
  CHECK(exact_rhs(r) == 16);
  CHECK(r.ratio == doctest::Approx(6.0 / 16.0));
  CHECK_THROWS_AS(check_ruzsa_triangle(ab, ab, LatticeSet(1, {})), InvalidInput);
}

TEST_CASE("Ruzsa triangle on random sets against brute force") {
  CounterRng rng(77);
  for (int t = 0; t < 100; ++t) {
    const std::size_t dim = 1 + t % 2;
    auto a = bundled::random_lattice_set(rng, dim, 8, 4);
    auto b = bundled::random_lattice_set(rng, dim, 8, 4);
    auto c = bundled::random_lattice_set(rng, dim, 8, 4);
    const CheckReport r = check_ruzsa_triangle(a, b, c);
    const auto amb = oracle::sumset(as_set(a), as_set(b), -1).size();
    const auto apc = oracle::sumset(as_set(a), as_set(c)).size();
    const auto cpb = oracle::sumset(as_set(c), as_set(b)).size();
    CHECK(exact_lhs(r) == Rational(static_cast<long>(amb * c.size())));
    CHECK(exact_rhs(r) == Rational(static_cast<long>(apc * cpb)));
    CHECK(r.pass);
    // The |A-A| <= |A+B|^2/|B| specialization.
    CHECK(check_ruzsa_triangle(a, a, b).pass);
  }
}

TEST_CASE("Koester-Katz containment examples") {
  const LatticeSet a(1, {{0}, {1}, {3}});
  const LatticeSet b(1, {{0}, {1}});
  CheckReport r = check_koester_katz(a, b, {1});
  CHECK(r.pass);
  CHECK(metric<std::int64_t>(r, "sumOfSlice") == 2);
  CHECK(metric<std::int64_t>(r, "sliceOfSum") == 4);
  CHECK(exact_lhs(r) == 0);

  r = check_koester_katz(a, b, {0});
  CHECK(r.pass);
  CHECK(metric<std::int64_t>(r, "sumOfSlice") == metric<std::int64_t>(r, "sliceOfSum"));

  r = check_koester_katz(a, b, {10});
  CHECK(r.pass);
  CHECK(r.notes.size() == 1);
}

TEST_CASE("Koester-Katz exhaustive on random sets in Z^2") {
  CounterRng rng(13);
  for (int t = 0; t < 20; ++t) {
    auto a = bundled::random_lattice_set(rng, 2, 20, 4);
    auto b = bundled::random_lattice_set(rng, 2, 20, 4);
    const CheckReport r = check_koester_katz_all(a, b);
    CHECK(r.pass);
    CHECK(metric<std::int64_t>(r, "differencesChecked") == static_cast<std::int64_t>(difference_set(a, a).size()));
  }
}

TEST_CASE("Koester-Katz on grids") {
  const GridSet a = rasterize(make_simplex(2, 1), Rational(1, 4));
  const GridSet b = bundled::l_shape();
  CHECK(check_koester_katz_all(a, b).pass);
  CHECK(check_koester_katz(a, b, {1, 0}).pass);
  const GridSet finer = rasterize(make_simplex(2, 1), Rational(1, 8));
  CHECK_THROWS_AS(check_koester_katz(finer, b, {0, 0}), ResolutionMismatch);
}

TEST_CASE("Lemma 2 examples") {
  const VPolytope tri = make_simplex(2, 1);
  CheckReport r = check_lemma2(tri, 0, 10, 1);
  CHECK(r.pass);
  CHECK(metric<Rational>(r, "minRatio") == 1);

  // A = [0,1]: mu(A_x) = 1 - |x|.
  const VPolytope seg = make_box({0}, {1});
  const std::vector<QVector> xs{{Rational(1, 2)}, {Rational(-1, 3)}, {Rational(1, 10)}};
  r = check_lemma2_at(seg, Rational(1, 2), xs);
  CHECK(r.pass);
  CHECK(metric<Rational>(r, "minRatio") == (1 - Rational(1, 2)) / Rational(1, 2));
  r = check_lemma2(seg, Rational(1, 2), 50, 9);
  CHECK(r.pass);
  CHECK(metric<Rational>(r, "minRatio") >= 1);

  // r = 1 at an extreme difference: the bound is 0.
  r = check_lemma2_at(tri, 1, {{1, 0}});
  CHECK(r.pass);
  CHECK(exact_lhs(r) == 0);
  CHECK(exact_rhs(r) == 0);

  CHECK_THROWS_AS(check_lemma2(tri, Rational(3, 2), 5, 1), InvalidInput);
  CHECK_THROWS_AS(check_lemma2(tri, -1, 5, 1), InvalidInput);
  CHECK_THROWS_AS(check_lemma2(VPolytope(2, {{0, 0}, {1, 1}}), Rational(1, 2), 5, 1), InvalidInput);
}

TEST_CASE("Lemma 2 reports rejected samples and is seed-deterministic") {
  const VPolytope tri = make_simplex(2, 1);
  const CheckReport a = check_lemma2(tri, Rational(1, 2), 40, 5);
  const CheckReport b = check_lemma2(tri, Rational(1, 2), 40, 5);
  CHECK(a.pass);
  CHECK(metric<std::int64_t>(a, "rejectedSamples") > 0);
  CHECK(metric<Rational>(a, "minRatio") == metric<Rational>(b, "minRatio"));
}

TEST_CASE("Lemma 1 examples") {
  const VPolytope seg = make_box({0}, {1});
  CheckReport r = check_lemma1(seg, seg, Rational(1, 20));
  CHECK(r.pass);
  CHECK(exact_lhs(r) == 3);
  CHECK(exact_rhs(r) == 4);

  const VPolytope sq = make_cube(2);
  r = check_lemma1(sq, sq, Rational(1, 10));
  CHECK(r.pass);
  CHECK(exact_lhs(r) == 9);
  CHECK(exact_rhs(r) == 16);

  // B = {0}: integral of mu(A_x) = mu(A)^2.
  const VPolytope origin(2, {{0, 0}});
  r = check_lemma1(sq, origin, Rational(1, 10));
  CHECK(r.pass);
  CHECK(exact_lhs(r) == 1);
  CHECK(exact_rhs(r) == 1);

  const VPolytope tri = make_simplex(2, 1);
  r = check_lemma1(tri, sq, Rational(1, 10));
  CHECK(r.pass);
  CHECK(r.error_budget > 0.0);
  CHECK(metric<double>(r, "lipschitzEstimate") > 0.0);

  CHECK_THROWS_AS(check_lemma1(make_cube(4), make_cube(4), Rational(1, 2)), DimensionCapExceeded);
}

TEST_CASE("Lemma 1 with a non-convex grid B") {
  const GridSet b = bundled::l_shape();
  const CheckReport r = check_lemma1(make_simplex(2, 1), b, b.cell());
  CHECK(r.pass);
  CHECK(r.error_budget == 0.0);
  CHECK(exact_lhs(r) <= exact_rhs(r));
  CHECK_THROWS_AS(check_lemma1(make_simplex(2, 1), b, Rational(1, 8)), ResolutionMismatch);

  // Single voxel B: discrete integral of |A_x| equals |A|^2 cells.
  const GridSet point(2, Rational(1, 4), {Rational(1, 8), Rational(1, 8)}, {{0, 0}});
  const CheckReport p = check_lemma1(make_cube(2), point, Rational(1, 4));
  CHECK(exact_lhs(p) == exact_rhs(p));
}

TEST_CASE("Brunn-Minkowski examples") {
  // 1/3 has no binary expansion, so the enclosures of 1 + 1/3 and 4/3 overlap.
  CheckReport r = check_brunn_minkowski(make_cube(2), make_box({0, 0}, {Rational(1, 3), Rational(1, 3)}));
  CHECK(r.pass);
  CHECK(metric<std::string>(r, "decidedBy") == "exact rational comparison");

  const VPolytope tri = make_simplex(2, 1);
  r = check_brunn_minkowski(tri, reflect(tri));
  CHECK(r.pass);
  CHECK(metric<Rational>(r, "mu(A+B)") == 3);
  CHECK(to_double(r.rhs) == doctest::Approx(std::sqrt(3.0)));
  CHECK(to_double(r.lhs) == doctest::Approx(std::sqrt(2.0)));

  const Rational eps(1, 10);
  const VPolytope thin_a = make_box({0, 0}, {1, eps});
  const VPolytope thin_b = make_box({0, 0}, {eps, 1});
  r = check_brunn_minkowski(thin_a, thin_b);
  CHECK(r.pass);
  CHECK(metric<Rational>(r, "mu(A+B)") == (1 + eps) * (1 + eps));
  CHECK(to_double(r.lhs) < to_double(r.rhs));
  CHECK_THROWS_AS(check_brunn_minkowski(tri, VPolytope(2, {{0, 0}, {1, 1}})), InvalidInput);
}

TEST_CASE("theorem FULL on cubes") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const VPolytope cube = make_cube(n);
    const CheckReport r = check_theorem(cube, cube, TheoremForm::full);
    const double expected = static_cast<double>(integer_sqrt(n) + 1) / std::pow(2.0, static_cast<double>(n));
    CHECK(r.pass);
    CHECK(metric<double>(r, "cEmp") == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("theorem A_GE_B on the simplex is near extremal") {
  for (unsigned long n = 1; n <= 6; ++n) {
    const VPolytope s = make_simplex(n, 1);
    const CheckReport r = check_theorem(s, s, TheoremForm::a_ge_b);
    const double expected = std::sqrt(static_cast<double>(n)) * binomial(2 * n, n).get_d() / std::pow(4.0, static_cast<double>(n));
    CHECK(metric<double>(r, "cEmp") == doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected >= 0.28);
    CHECK(expected <= 0.6);
    CHECK(r.pass);
  }
}

TEST_CASE("theorem B_GE_A uses a measure-matched subset") {
  const VPolytope a = make_simplex(2, 1);
  const VPolytope b = make_cube(2, 3);
  const CheckReport r = check_theorem(a, b, TheoremForm::b_ge_a);
  CHECK(r.pass);
  CHECK(metric<bool>(r, "holds.mu(A+B')<=mu(A+B)"));
  CHECK(metric<bool>(r, "holds.B'⊆B"));
  CHECK(metric<Rational>(r, "mu(B')") <= exact_volume(a));

  const CheckReport g = check_theorem(a, bundled::l_shape(), TheoremForm::b_ge_a);
  CHECK(g.pass);
  CHECK(metric<Rational>(g, "mu(B')") == Rational(1, 2));

  CHECK_THROWS_AS(check_theorem(a, b, TheoremForm::a_ge_b), InvalidInput);
  CHECK_THROWS_AS(check_theorem(b, a, TheoremForm::b_ge_a), InvalidInput);
  CHECK(parse_theorem_form("B_GE_A") == TheoremForm::b_ge_a);
  CHECK_THROWS_AS(parse_theorem_form("sideways"), InvalidInput);
}

TEST_CASE("c budget is configurable") {
  const VPolytope s = make_simplex(3, 1);
  CHECK(check_theorem(s, s, TheoremForm::full, 10).pass);
  CHECK_FALSE(check_theorem(s, s, TheoremForm::full, 0.01).pass);
}

TEST_CASE("report ratios are invariant under simultaneous scaling") {
  const VPolytope a = bundled::unit_triangle();
  const VPolytope b(2, {{0, 0}, {2, 1}, {1, 2}});
  const Rational t(5, 3);
  const VPolytope ta = scaled(a, t), tb = scaled(b, t);
  REQUIRE(exact_volume(ta) == exact_volume(a) * t * t);

  for (TheoremForm form : {TheoremForm::full, TheoremForm::b_ge_a}) {
    const CheckReport r = check_theorem(a, b, form);
    const CheckReport s = check_theorem(ta, tb, form);
    CHECK(metric<double>(s, "cEmp") == doctest::Approx(metric<double>(r, "cEmp")).epsilon(1e-12));
  }
  const CheckReport l = check_lemma1(a, b, Rational(1, 10));
  const CheckReport ls = check_lemma1(ta, tb, Rational(1, 10) * t);
  CHECK(exact_lhs(l) / exact_rhs(l) == exact_lhs(ls) / exact_rhs(ls));

  const std::vector<QVector> xs{{Rational(1, 4), Rational(-1, 8)}};
  const std::vector<QVector> txs{{Rational(1, 4) * t, Rational(-1, 8) * t}};
  CHECK(metric<Rational>(check_lemma2_at(a, Rational(1, 2), xs), "minRatio") ==
        metric<Rational>(check_lemma2_at(ta, Rational(1, 2), txs), "minRatio"));

  const CheckReport bm = check_brunn_minkowski(a, b);
  const CheckReport bms = check_brunn_minkowski(ta, tb);
  CHECK(bms.ratio == doctest::Approx(bm.ratio).epsilon(1e-14));
}

TEST_CASE("pass is recomputable from stored fields") {
  CheckReport r = check_lemma1(make_simplex(2, 1), make_cube(2), Rational(1, 10));
  CHECK(r.recompute_pass() == r.pass);
  r.metrics["holds.extra"] = false;
  CHECK_FALSE(r.recompute_pass());
  CheckReport e;
  e.lhs = Rational(3);
  e.rhs = Rational(3);
  e.finalize();
  CHECK(e.pass);
  CHECK(e.ratio == 1.0);
  e.lhs = Rational(3) + Rational(1, 1000000000) * Rational(1, 1000000000);
  e.finalize();
  CHECK_FALSE(e.pass);
}
