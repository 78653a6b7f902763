#include "convexlab/suite.hpp"

#include <algorithm>
#include <cmath>

#include "convexlab/bundled.hpp"
#include "convexlab/geometry.hpp"
#include "convexlab/inequalities.hpp"
#include "convexlab/measure.hpp"
#include "convexlab/sigma.hpp"
#include "convexlab/simplex_extremal.hpp"

namespace convexlab {

namespace {

CheckReport tagged(CheckReport r, const std::string& tag) {
  r.name += "[" + tag + "]";
  return r;
}

std::vector<TheoremForm> applicable_forms(const Rational& va, const Rational& vb) {
  std::vector<TheoremForm> forms{TheoremForm::full};
  if (va >= vb) forms.push_back(TheoremForm::a_ge_b);
  if (vb >= va) forms.push_back(TheoremForm::b_ge_a);
  return forms;
}

CheckReport mc_crosscheck(const std::string& tag, const VPolytope& p, std::uint64_t samples, std::uint64_t seed) {
  const Rational exact = exact_volume(p);
  const VolumeEstimate mc = volume_mc(make_oracle(p), bounding_box(p), samples, seed);
  CheckReport r;
  r.name = "mc_volume_crosscheck[" + tag + "]";
  r.parameters["samples"] = std::to_string(samples);
  r.parameters["seed"] = std::to_string(seed);
  r.lhs = std::abs(mc.value - exact.get_d());
  r.rhs = 5.0 * mc.std_error;
  r.metrics["exact"] = exact;
  r.metrics["estimate"] = mc.value;
  r.metrics["stderr"] = mc.std_error;
  r.finalize();
  return r;
}

}  // namespace

std::vector<CheckReport> run_suite(std::uint64_t seed, std::uint64_t samples) {
  std::vector<CheckReport> out;
  const CounterRng root(seed);

  // Simplex example.
  {
    std::vector<CheckReport> members;
    for (unsigned long n = 1; n <= kFacetDimCap; ++n) {
      for (const Rational& L : {Rational(1), Rational(3), Rational(7, 2)}) {
        members.push_back(simplex_check(simplex_report(n, L)));
      }
    }
    out.push_back(aggregate("simplex_identities[n=1..6,L=1,3,7/2]", members));
    std::vector<CheckReport> counts;
    for (unsigned long n = 1; n <= 3; ++n) {
      for (unsigned long L = 0; L <= 10; ++L) counts.push_back(lattice_count_check(n, L));
    }
    out.push_back(aggregate("lattice_count_identity[n=1..3,L=0..10]", counts));
    CheckReport ratio;
    ratio.name = "lattice_normalized_ratio[n=2,L=100]";
    ratio.lhs = std::abs(normalized_lattice_ratio(2, 100) - 1.0);
    ratio.rhs = 0.05;
    ratio.metrics["ratio"] = normalized_lattice_ratio(2, 100);
    ratio.finalize();
    out.push_back(ratio);
    out.push_back(vandermonde_check(200));
    out.push_back(tightness_check(tightness_sweep(30), 0.28, 0.60, 0.02));
  }

  // Sigma chain.
  out.push_back(beta_identity_sweep(50));
  for (auto [n, alpha] : std::vector<std::pair<unsigned long, Rational>>{
           {1, 1}, {2, 1}, {4, 1}, {100, 1}, {100, Rational(1, 8)}, {100, 8}, {1000, Rational(1, 2)}}) {
    out.push_back(tagged(sigma_lower_bound(SigmaParams(n, alpha)), "n=" + std::to_string(n) + ",alpha=" + to_string(alpha)));
  }
  {
    const std::vector<Rational> alphas{Rational(1, 8), Rational(1, 2), 1, 2, 8};
    out.push_back(sigma_sweep_report(sigma_sweep(1, 500, alphas), 1, 500, alphas));
  }
  out.push_back(log_inequality_check(10'000));

  // Ruzsa triangle and Koester-Katz containment on random sets.
  {
    CounterRng rng = root.fork(1);
    std::vector<CheckReport> members;
    for (int t = 0; t < 200; ++t) {
      const std::size_t dim = 1 + t % 2;
      auto a = bundled::random_lattice_set(rng, dim, 12, 6);
      auto b = bundled::random_lattice_set(rng, dim, 12, 6);
      auto c = bundled::random_lattice_set(rng, dim, 12, 6);
      members.push_back(check_ruzsa_triangle(a, b, c));
    }
    out.push_back(aggregate("ruzsa_triangle[200 random triples]", members));
  }
  {
    CounterRng rng = root.fork(2);
    std::vector<CheckReport> members;
    for (int t = 0; t < 40; ++t) {
      const std::size_t dim = 1 + t % 2;
      auto a = bundled::random_lattice_set(rng, dim, 20, 5);
      auto b = bundled::random_lattice_set(rng, dim, 20, 5);
      members.push_back(check_koester_katz_all(a, b));
    }
    out.push_back(aggregate("koester_katz[40 random pairs]", members));
    const GridSet tri = rasterize(bundled::unit_triangle(), Rational(1, 4));
    out.push_back(tagged(check_koester_katz_all(tri, bundled::l_shape()), "triangle,L-shape"));
  }

  // Lemma 1.
  for (const auto& p : bundled::lemma1_pairs()) {
    const Rational hx = p.a.dim() == 1 ? Rational(1, 20) : Rational(1, 10);
    out.push_back(tagged(check_lemma1(p.a, p.b, hx), p.name));
  }
  for (const auto& p : bundled::lemma1_grid_pairs()) out.push_back(tagged(check_lemma1(p.a, p.b, p.b.cell()), p.name));

  // Lemma 2.
  {
    std::uint64_t stream = 100;
    for (const auto& body : bundled::lemma2_bodies()) {
      for (const Rational& r : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
        const std::uint64_t s = root.fork(stream++).seed();
        out.push_back(tagged(check_lemma2(body.body, r, 25, s), body.name + ",r=" + to_string(r)));
      }
    }
  }

  // Brunn-Minkowski and the theorem.
  {
    std::vector<CheckReport> members;
    for (const auto& p : bundled::theorem_pairs()) members.push_back(check_brunn_minkowski(p.a, p.b));
    CounterRng rng = root.fork(3);
    for (int t = 0; t < 20; ++t) {
      const std::size_t dim = 1 + t % 3;
      auto a = bundled::random_body(rng, dim, dim + 3, 8);
      auto b = bundled::random_body(rng, dim, dim + 3, 8);
      members.push_back(check_brunn_minkowski(a, b));
    }
    out.push_back(aggregate("brunn_minkowski[bundled + 20 random pairs]", members));
  }
  for (const auto& p : bundled::theorem_pairs()) {
    for (TheoremForm form : applicable_forms(exact_volume(p.a), exact_volume(p.b))) {
      out.push_back(tagged(check_theorem(p.a, p.b, form), p.name));
    }
  }
  for (const auto& p : bundled::theorem_grid_pairs()) {
    for (TheoremForm form : applicable_forms(exact_volume(p.a), p.b.measure())) {
      out.push_back(tagged(check_theorem(p.a, p.b, form), p.name));
    }
  }

  // Monte Carlo volumes against exact ones.
  out.push_back(mc_crosscheck("triangle", bundled::unit_triangle(), samples, root.fork(4).seed()));
  out.push_back(mc_crosscheck("tetrahedron", make_simplex(3, 1), samples, root.fork(5).seed()));

  std::stable_sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) { return a.name < b.name; });
  return out;
}

}  // namespace convexlab
