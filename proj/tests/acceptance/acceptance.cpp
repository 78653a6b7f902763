// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "convexlab/bundled.hpp"
#include "convexlab/cli.hpp"
#include "convexlab/inequalities.hpp"
#include "convexlab/measure.hpp"
#include "convexlab/sigma.hpp"
#include "convexlab/simplex_extremal.hpp"

using namespace convexlab;

namespace {

constexpr std::uint64_t kSeed = 42;

// Each criterion appends failures to `why`; an empty list means it holds.
struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<void(std::vector<std::string>& why)> body;
};

template <class... Args>
std::string format(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

void expect(bool ok, std::vector<std::string>& why, const std::string& what) {
  if (!ok) why.push_back(what);
}

void expect(const CheckReport& r, std::vector<std::string>& why) {
  if (!r.pass) why.push_back(r.name + " failed (lhs " + format("%.6g", to_double(r.lhs)) + ", rhs " +
                             format("%.6g", to_double(r.rhs)) + ")");
}

template <class T>
T metric(const CheckReport& r, const std::string& key) {
  return std::get<T>(r.metrics.at(key));
}

void simplex_identities(std::vector<std::string>& why) {
  for (unsigned long n = 1; n <= 6; ++n) {
    for (const Rational& L : {Rational(1), Rational(3), Rational(7, 2)}) {
      const SimplexReport s = simplex_report(n, L);
      const std::string tag = format("n=%lu L=%s", n, to_string(L).c_str());
      expect(s.kernel_verified, why, tag + " not kernel-verified");
      expect(s.sum_ratio == Rational(Integer(1) << n), why, tag + " sum ratio " + to_string(s.sum_ratio));
      expect(s.diff_ratio == Rational(binomial(2 * n, n)), why, tag + " diff ratio " + to_string(s.diff_ratio));
    }
  }
}

void lattice_counts(std::vector<std::string>& why) {
  for (unsigned long n = 1; n <= 3; ++n) {
    for (unsigned long L = 0; L <= 30; ++L) {
      expect(lattice_diff_count(n, L) == trinomial_sum(n, L), why, format("count mismatch at n=%lu L=%lu", n, L));
    }
  }
  expect(trinomial_sum(2, 2) == 19, why, "trinomial_sum(2,2) != 19");
  const double ratio = normalized_lattice_ratio(2, 100);
  expect(std::abs(ratio - 1.0) <= 0.05, why, format("normalized ratio %.6f", ratio));
}

void beta_identity(std::vector<std::string>& why) { expect(beta_identity_sweep(50), why); }

void sigma_chain_criterion(std::vector<std::string>& why) {
  for (unsigned long n = 1; n <= 30; ++n) {
    const SigmaParams p(n, 1);
    const Rational exact = sigma_exact(n, 1);
    const SigmaValue v = sigma(p, kSigmaBits, 30.0, false);
    const bool inside = v.enclosure.lo.to_rational() <= exact && exact <= v.enclosure.hi.to_rational();
    expect(inside && v.certified_digits() >= 30.0, why,
           format("n=%lu: enclosure misses the exact value or certifies %.1f digits", n, v.certified_digits()));
  }
  const std::vector<Rational> alphas{Rational(1, 8), Rational(1, 2), 1, 2, 8};
  const SigmaSweep sweep = sigma_sweep(1, 10'000, alphas);
  for (const auto& row : sweep.rows) {
    if (!row.chain_holds || !row.specialization_holds) {
      why.push_back(format("chain fails at n=%lu alpha=%s", row.n, to_string(row.alpha).c_str()));
      if (why.size() > 5) return;
    }
  }
  expect(sweep.rows.size() == 50'000, why, "sweep row count");
  expect(sweep.all_hold, why, "sweep reports a failure");
}

void lemma2_criterion(std::vector<std::string>& why) {
  const Rational rs[] = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::uint64_t stream = 0;
  for (const auto& body : bundled::lemma2_bodies()) {
    for (const Rational& r : rs) {
      const CheckReport rep = check_lemma2(body.body, r, 200, CounterRng(kSeed).fork(stream++).seed());
      expect(rep, why);
      if (const auto it = rep.metrics.find("minRatio"); it != rep.metrics.end()) {
        expect(std::get<Rational>(it->second).get_d() >= 1.0 - 1e-9, why, body.name + " min ratio below 1 - 1e-9");
      }
    }
  }
}

void lemma1_criterion(std::vector<std::string>& why) {
  bool saw_unit = false;
  for (const auto& p : bundled::lemma1_pairs()) {
    const Rational hx = p.a.dim() == 1 ? Rational(1, 100) : Rational(1, 10);
    const CheckReport r = check_lemma1(p.a, p.b, hx);
    expect(r, why);
    const bool unit = p.a.dim() == 1 && p.a == p.b && exact_volume(p.a) == 1;
    if (unit) {
      saw_unit = true;
      const double lhs = to_double(r.lhs);
      expect(std::abs(lhs - 3.0) <= 0.03, why, format("[0,1] quadrature %.6f, expected 3", lhs));
    }
  }
  expect(saw_unit, why, "no A = B = [0,1] pair");
  const auto grids = bundled::lemma1_grid_pairs();
  expect(!grids.empty(), why, "no grid pair");
  for (const auto& p : grids) expect(check_lemma1(p.a, p.b, p.b.cell()), why);
}

void koester_katz_criterion(std::vector<std::string>& why) {
  const CounterRng root(kSeed);
  for (std::uint64_t i = 0; i < 100; ++i) {
    CounterRng rng = root.fork(i);
    const std::size_t dim = 1 + i % 2;
    const LatticeSet a = bundled::random_lattice_set(rng, dim, 20, 10);
    const LatticeSet b = bundled::random_lattice_set(rng, dim, 20, 10);
    expect(a.size() <= 20 && b.size() <= 20, why, "generator exceeded 20 points");
    expect(check_koester_katz_all(a, b), why);
  }
}

void ruzsa_criterion(std::vector<std::string>& why) {
  const CounterRng root(kSeed + 1);
  for (std::uint64_t i = 0; i < 1000; ++i) {
    CounterRng rng = root.fork(i);
    const std::size_t dim = 1 + i % 2;
    const LatticeSet a = bundled::random_lattice_set(rng, dim, 12, 8);
    const LatticeSet b = bundled::random_lattice_set(rng, dim, 12, 8);
    const LatticeSet c = bundled::random_lattice_set(rng, dim, 12, 8);
    expect(check_ruzsa_triangle(a, b, c), why);
  }
}

void brunn_minkowski_criterion(std::vector<std::string>& why) {
  const CounterRng root(kSeed + 2);
  for (std::uint64_t i = 0; i < 100; ++i) {
    CounterRng rng = root.fork(i);
    const std::size_t dim = 1 + i % 4;
    const VPolytope a = bundled::random_body(rng, dim, dim + 3, 16, 1 + static_cast<long>(i % 3));
    const VPolytope b = bundled::random_body(rng, dim, dim + 3, 16, 1);
    expect(check_brunn_minkowski(a, b), why);
  }
}

void theorem_criterion(std::vector<std::string>& why) {
  for (const auto& p : bundled::theorem_pairs()) {
    if (p.a.dim() > 5) continue;
    const Rational va = exact_volume(p.a), vb = exact_volume(p.b);
    std::vector<TheoremForm> forms{TheoremForm::full};
    if (va >= vb) forms.push_back(TheoremForm::a_ge_b);
    if (vb >= va) forms.push_back(TheoremForm::b_ge_a);
    for (TheoremForm form : forms) {
      const CheckReport r = check_theorem(p.a, p.b, form, 10.0);
      const double c = metric<double>(r, "cEmp");
      expect(c <= 10.0 && r.pass, why, p.name + " " + std::string(to_string(form)) + format(": cEmp %.4f", c));
    }
  }
  const TightnessSweep t = tightness_sweep(30);
  expect(t.min >= 0.28 && t.max <= 0.60, why, format("tightness range [%.4f, %.4f]", t.min, t.max));
  expect(t.last_distance <= 0.02, why, format("|t(30) - 1/sqrt(pi)| = %.4f", t.last_distance));
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    expect(t.rows[i].t > t.rows[i - 1].t, why, format("tightness not increasing at n=%lu", t.rows[i].n));
  }
}

void reproducibility(std::vector<std::string>& why) {
  RunConfig config;
  config.command = Command::suite;
  config.seed = kSeed;
  config.format = OutputFormat::json;
  const RunOutcome first = execute(config);
  const RunOutcome second = execute(config);
  expect(first.exit_code == kExitPass, why, format("suite exit code %d %s", first.exit_code, first.error.c_str()));
  expect(!first.output.empty() && first.output == second.output, why, "suite JSON differs between runs");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "simplex identities", 60, simplex_identities},
      {2, "lattice-count identity", 30, lattice_counts},
      {3, "beta identity", 5, beta_identity},
      {4, "sigma chain", 60, sigma_chain_criterion},
      {5, "lemma 2 slice volumes", 120, lemma2_criterion},
      {6, "lemma 1 quadrature", 120, lemma1_criterion},
      {7, "Koester-Katz containment", 30, koester_katz_criterion},
      {8, "Ruzsa triangle", 30, ruzsa_criterion},
      {9, "Brunn-Minkowski", 120, brunn_minkowski_criterion},
      {10, "theorem forms and tightness", 120, theorem_criterion},
      {11, "reproducibility", 0, reproducibility},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    std::vector<std::string> why;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(why);
    } catch (const std::exception& e) {
      why.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      why.push_back(format("took %.2f s, limit %.0f s", seconds, c.limit_seconds));
    }
    const bool pass = why.empty();
    failures += pass ? 0 : 1;
    std::printf("%s  %2d  %-30s %8.2f s\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds);
    for (std::size_t i = 0; i < why.size() && i < 5; ++i) std::printf("        %s\n", why[i].c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
