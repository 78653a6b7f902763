#include "convexlab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "convexlab/errors.hpp"
#include "convexlab/inequalities.hpp"
#include "convexlab/sigma.hpp"
#include "convexlab/simplex_extremal.hpp"
#include "convexlab/suite.hpp"

namespace convexlab {

namespace {

constexpr std::string_view kCommandNames[] = {"ruzsa", "kk",    "lemma1",  "lemma2", "bm",
                                              "theorem", "sigma", "simplex", "suite"};

struct Output {
  std::vector<CheckReport> reports;
  Json extra = Json::object();
  std::optional<std::string> csv;  // replaces the report table when set
};

const VPolytope& as_polytope(const SetDescription& s, const char* role) {
  if (const auto* p = std::get_if<VPolytope>(&s)) return *p;
  throw InvalidInput(std::string(role) + " must be a polytope");
}

const LatticeSet& as_lattice(const SetDescription& s, const char* role) {
  if (const auto* p = std::get_if<LatticeSet>(&s)) return *p;
  throw InvalidInput(std::string(role) + " must be a lattice set");
}

void require_inputs(const RunConfig& c, std::size_t count) {
  if (c.inputs.size() != count) {
    throw InvalidInput(std::string(to_string(c.command)) + " expects " + std::to_string(count) + " input file(s), got " +
                       std::to_string(c.inputs.size()));
  }
}

std::vector<SetDescription> load_inputs(const RunConfig& c) {
  std::vector<SetDescription> sets;
  for (const auto& path : c.inputs) sets.push_back(load_set(path));
  return sets;
}

std::vector<TheoremForm> forms_for(const RunConfig& c, const Rational& va, const Rational& vb) {
  if (c.form) return {parse_theorem_form(*c.form)};
  std::vector<TheoremForm> forms{TheoremForm::full};
  if (va >= vb) forms.push_back(TheoremForm::a_ge_b);
  if (vb >= va) forms.push_back(TheoremForm::b_ge_a);
  return forms;
}

Rational default_quadrature_step(const VPolytope& a) {
  std::optional<Rational> extent;
  for (std::size_t k = 0; k < a.dim(); ++k) {
    Rational lo = a.vertices().front()[k], hi = lo;
    for (const auto& v : a.vertices()) {
      lo = std::min(lo, v[k]);
      hi = std::max(hi, v[k]);
    }
    if (!extent || hi - lo < *extent) extent = hi - lo;
  }
  return *extent / 10;
}

std::pair<unsigned long, unsigned long> parse_n_range(const std::string& text) {
  auto to_ul = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(s, &used);
      if (used != s.size()) throw InvalidInput("");
      return v;
    } catch (const std::exception&) {
      throw InvalidInput("bad --n value '" + text + "'");
    }
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = to_ul(text);
    return {n, n};
  }
  return {to_ul(text.substr(0, dots)), to_ul(text.substr(dots + 2))};
}

Json simplex_json(const SimplexReport& s) {
  Json j;
  j["n"] = s.n;
  j["L"] = to_json(s.L);
  j["volA"] = to_json(s.vol_a);
  j["volSum"] = to_json(s.vol_sum);
  j["volDiff"] = to_json(s.vol_diff);
  j["sumRatio"] = to_json(s.sum_ratio);
  j["diffRatio"] = to_json(s.diff_ratio);
  j["tightness"] = s.tightness;
  j["kernelVerified"] = s.kernel_verified;
  return j;
}

Output dispatch(const RunConfig& c) {
  Output out;
  switch (c.command) {
    case Command::ruzsa: {
      require_inputs(c, 3);
      auto s = load_inputs(c);
      out.reports.push_back(check_ruzsa_triangle(as_lattice(s[0], "A"), as_lattice(s[1], "B"), as_lattice(s[2], "C")));
      break;
    }
    case Command::kk: {
      require_inputs(c, 2);
      auto s = load_inputs(c);
      if (std::holds_alternative<LatticeSet>(s[0]) && std::holds_alternative<LatticeSet>(s[1])) {
        const auto& a = std::get<LatticeSet>(s[0]);
        const auto& b = std::get<LatticeSet>(s[1]);
        out.reports.push_back(c.x ? check_koester_katz(a, b, *c.x) : check_koester_katz_all(a, b));
      } else if (std::holds_alternative<GridSet>(s[0]) && std::holds_alternative<GridSet>(s[1])) {
        const auto& a = std::get<GridSet>(s[0]);
        const auto& b = std::get<GridSet>(s[1]);
        out.reports.push_back(c.x ? check_koester_katz(a, b, *c.x) : check_koester_katz_all(a, b));
      } else {
        throw InvalidInput("kk needs two lattice sets or two grids");
      }
      break;
    }
    case Command::lemma1: {
      require_inputs(c, 2);
      auto s = load_inputs(c);
      const auto& a = as_polytope(s[0], "A");
      if (const auto* g = std::get_if<GridSet>(&s[1])) {
        out.reports.push_back(check_lemma1(a, *g, c.grid_step.value_or(g->cell())));
      } else {
        out.reports.push_back(check_lemma1(a, as_polytope(s[1], "B"), c.grid_step.value_or(default_quadrature_step(a))));
      }
      break;
    }
    case Command::lemma2: {
      require_inputs(c, 1);
      auto s = load_inputs(c);
      out.reports.push_back(check_lemma2(as_polytope(s[0], "A"), c.r, c.trials, c.seed));
      break;
    }
    case Command::bm: {
      require_inputs(c, 2);
      auto s = load_inputs(c);
      out.reports.push_back(check_brunn_minkowski(as_polytope(s[0], "A"), as_polytope(s[1], "B")));
      break;
    }
    case Command::theorem: {
      require_inputs(c, 2);
      auto s = load_inputs(c);
      const auto& a = as_polytope(s[0], "A");
      if (a.dim() > kFacetDimCap) throw DimensionCapExceeded("theorem check needs exact volumes (dim <= 6)");
      const Rational va = exact_volume(a);
      if (const auto* g = std::get_if<GridSet>(&s[1])) {
        for (auto form : forms_for(c, va, g->measure())) out.reports.push_back(check_theorem(a, *g, form, c.c_budget));
      } else {
        const auto& b = as_polytope(s[1], "B");
        if (b.dim() > kFacetDimCap) throw DimensionCapExceeded("theorem check needs exact volumes (dim <= 6)");
        for (auto form : forms_for(c, va, exact_volume(b))) out.reports.push_back(check_theorem(a, b, form, c.c_budget));
      }
      break;
    }
    case Command::sigma: {
      require_inputs(c, 0);
      const auto [lo, hi] = parse_n_range(c.n_range);
      require(c.bits >= 32, "sigma: at least 32 bits of precision");
      const SigmaSweep sweep = sigma_sweep(lo, hi, c.alphas, c.bits);
      out.reports.push_back(sigma_sweep_report(sweep, lo, hi, c.alphas));
      if (lo == hi) {
        for (const auto& alpha : c.alphas) out.reports.push_back(sigma_lower_bound(SigmaParams(lo, alpha), c.bits));
      }
      Json rows = Json::array();
      std::string csv = "n,alpha,sigma,lowerbound,ratio\n";
      for (const auto& row : sweep.rows) {
        Json r;
        r["n"] = row.n;
        r["alpha"] = to_json(row.alpha);
        r["sigma"] = row.sigma;
        r["lowerbound"] = row.lower_bound;
        r["ratio"] = row.ratio;
        r["cEmp"] = row.c_emp;
        r["chainHolds"] = row.chain_holds;
        rows.push_back(std::move(r));
        csv += std::to_string(row.n) + "," + to_string(row.alpha) + "," + csv_double(row.sigma) + "," +
               csv_double(row.lower_bound) + "," + csv_double(row.ratio) + "\n";
      }
      out.extra["rows"] = std::move(rows);
      out.csv = std::move(csv);
      break;
    }
    case Command::simplex: {
      require_inputs(c, 0);
      const SimplexReport s = simplex_report(c.simplex_n, c.simplex_L);
      out.reports.push_back(simplex_check(s));
      out.extra["simplex"] = simplex_json(s);
      std::string csv = "n,L,volA,volSum,volDiff,sumRatio,diffRatio,tightness\n";
      csv += std::to_string(s.n) + "," + to_string(s.L) + "," + to_string(s.vol_a) + "," + to_string(s.vol_sum) + "," +
             to_string(s.vol_diff) + "," + to_string(s.sum_ratio) + "," + to_string(s.diff_ratio) + "," +
             csv_double(s.tightness) + "\n";
      if (c.sweep) {
        const TightnessSweep t = tightness_sweep(*c.sweep);
        out.reports.push_back(tightness_check(t, 0.28, 0.60, 0.02));
        Json rows = Json::array();
        csv += "\nn,t\n";
        for (const auto& row : t.rows) {
          rows.push_back(Json{{"n", row.n}, {"t", row.t}});
          csv += std::to_string(row.n) + "," + csv_double(row.t) + "\n";
        }
        out.extra["tightness"] = std::move(rows);
      }
      out.csv = std::move(csv);
      break;
    }
    case Command::suite: {
      require_inputs(c, 0);
      out.reports = run_suite(c.seed, c.samples);
      break;
    }
  }
  return out;
}

std::string render(const RunConfig& c, const Output& o, bool pass) {
  if (c.effective_format() == OutputFormat::csv) {
    if (o.csv) return *o.csv;
    std::string csv(kReportCsvHeader);
    csv += "\n";
    for (const auto& r : o.reports) csv += csv_row(r) + "\n";
    return csv;
  }
  Json j;
  j["tool"] = "convexlab";
  j["config"] = to_json(c);
  Json hashes = Json::array();
  for (const auto& path : c.inputs) hashes.push_back(Json{{"path", path}, {"sha256", sha256_hex(read_file(path))}});
  j["inputHashes"] = std::move(hashes);
  j["pass"] = pass;
  Json reports = Json::array();
  for (const auto& r : o.reports) reports.push_back(to_json(r));
  j["reports"] = std::move(reports);
  for (const auto& [k, v] : o.extra.items()) j[k] = v;
  return j.dump(2) + "\n";
}

Rational parse_rational_option(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const std::exception&) {
    throw InvalidInput(std::string("bad ") + flag + " value '" + text + "'");
  }
}

}  // namespace

std::string_view to_string(Command c) { return kCommandNames[static_cast<int>(c)]; }

Command parse_command(std::string_view text) {
  for (int i = 0; i < 9; ++i) {
    if (kCommandNames[i] == text) return static_cast<Command>(i);
  }
  throw InvalidInput("unknown command '" + std::string(text) + "'");
}

OutputFormat RunConfig::effective_format() const {
  if (format) return *format;
  return command == Command::sigma ? OutputFormat::csv : OutputFormat::json;
}

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = std::string(to_string(c.command));
  j["inputs"] = c.inputs;
  j["seed"] = c.seed;
  j["gridStep"] = c.grid_step ? to_json(*c.grid_step) : Json(nullptr);
  j["samples"] = c.samples;
  j["cBudget"] = c.c_budget;
  j["outputFormat"] = c.effective_format() == OutputFormat::csv ? "csv" : "json";
  j["outputPath"] = c.output_path;
  j["x"] = c.x ? Json(*c.x) : Json(nullptr);
  j["r"] = to_json(c.r);
  j["trials"] = c.trials;
  j["form"] = c.form ? Json(*c.form) : Json(nullptr);
  j["n"] = c.n_range;
  Json alphas = Json::array();
  for (const auto& a : c.alphas) alphas.push_back(to_json(a));
  j["alpha"] = std::move(alphas);
  j["precisionBits"] = c.bits;
  j["simplexN"] = c.simplex_n;
  j["simplexL"] = to_json(c.simplex_L);
  j["sweep"] = c.sweep ? Json(*c.sweep) : Json(nullptr);
  return j;
}

RunOutcome execute(const RunConfig& config) {
  RunOutcome outcome;
  try {
    const Output o = dispatch(config);
    const bool pass = !o.reports.empty() &&
                      std::all_of(o.reports.begin(), o.reports.end(), [](const CheckReport& r) { return r.pass; });
    outcome.output = render(config, o, pass);
    outcome.exit_code = pass ? kExitPass : kExitFail;
  } catch (const DimensionCapExceeded& e) {
    outcome.exit_code = kExitDimensionCap;
    outcome.error = e.what();
  } catch (const nlohmann::json::exception& e) {
    outcome.exit_code = kExitInvalid;
    outcome.error = e.what();
  } catch (const std::exception& e) {
    // Malformed input, violated preconditions, uncertifiable precision.
    outcome.exit_code = kExitInvalid;
    outcome.error = e.what();
  }
  return outcome;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const RunOutcome outcome = execute(config);
  if (!outcome.error.empty()) {
    err << "convexlab: " << outcome.error << "\n";
    return outcome.exit_code;
  }
  if (config.output_path.empty()) {
    out << outcome.output;
  } else {
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
      err << "convexlab: cannot write '" << config.output_path << "'\n";
      return kExitInvalid;
    }
    file << outcome.output;
  }
  return outcome.exit_code;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and certified checks of sumset and difference-body inequalities"};
  app.require_subcommand(1);
  RunConfig c;
  std::string grid_step, r_text = "1/2", L_text = "1", format_text, x_text;
  std::vector<std::string> alpha_text;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--seed", c.seed, "random seed")->capture_default_str();
    sub->add_option("--samples", c.samples, "Monte Carlo samples")->capture_default_str();
    sub->add_option("--grid-step", grid_step, "quadrature or grid cell size (rational)");
    sub->add_option("--c-budget", c.c_budget, "constant budget for theorem checks")->capture_default_str();
    sub->add_option("--format", format_text, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output,-o", c.output_path, "write the report here instead of stdout");
  };
  auto with_inputs = [&](CLI::App* sub, const char* help) {
    common(sub);
    sub->add_option("inputs", c.inputs, help);
  };

  auto* ruzsa = app.add_subcommand("ruzsa", "|A-B||C| <= |A+C||C+B| for lattice sets");
  with_inputs(ruzsa, "A B C lattice set files");
  auto* kk = app.add_subcommand("kk", "A_x + B inside (A+B)_x");
  with_inputs(kk, "A B lattice or grid files");
  kk->add_option("--x", x_text, "difference vector, comma separated (default: every x in A-A)");
  auto* lemma1 = app.add_subcommand("lemma1", "integral of mu(A_x + B) against mu(A+B)^2");
  with_inputs(lemma1, "A polytope, B polytope or grid");
  auto* lemma2 = app.add_subcommand("lemma2", "mu(A_x) >= (1-r)^n mu(A) on x in r(A-A)");
  with_inputs(lemma2, "A polytope");
  lemma2->add_option("--r", r_text, "r in [0,1]")->capture_default_str();
  lemma2->add_option("--trials", c.trials, "sampled difference vectors")->capture_default_str();
  auto* bm = app.add_subcommand("bm", "Brunn-Minkowski with directed rounding");
  with_inputs(bm, "A B polytopes");
  auto* theorem = app.add_subcommand("theorem", "the three forms of the A-A versus A+B bound");
  with_inputs(theorem, "A polytope, B polytope or grid");
  theorem->add_option("--form", c.form, "full, a_ge_b or b_ge_a (default: every applicable form)");
  auto* sigma = app.add_subcommand("sigma", "sigma sum and its lower-bound chain");
  common(sigma);
  sigma->add_option("--n", c.n_range, "n or lo..hi")->capture_default_str();
  sigma->add_option("--alpha", alpha_text, "alpha = mu(B)/mu(A), repeatable")->delimiter(',');
  sigma->add_option("--bits", c.bits, "MPFR precision")->capture_default_str();
  auto* simplex = app.add_subcommand("simplex", "simplex sharpness example");
  common(simplex);
  simplex->add_option("--n", c.simplex_n, "dimension")->capture_default_str();
  simplex->add_option("--L", L_text, "side length")->capture_default_str();
  simplex->add_option("--sweep", c.sweep, "tightness table for n = 1..nmax");
  auto* suite = app.add_subcommand("suite", "bundled regression set");
  common(suite);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalid;
  }

  try {
    c.command = parse_command(app.get_subcommands().front()->get_name());
    if (!grid_step.empty()) c.grid_step = parse_rational_option(grid_step, "--grid-step");
    c.r = parse_rational_option(r_text, "--r");
    c.simplex_L = parse_rational_option(L_text, "--L");
    if (!format_text.empty()) c.format = format_text == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!alpha_text.empty()) {
      c.alphas.clear();
      for (const auto& a : alpha_text) c.alphas.push_back(parse_rational_option(a, "--alpha"));
    }
    if (!x_text.empty()) {
      std::vector<std::int64_t> x;
      std::stringstream ss(x_text);
      for (std::string part; std::getline(ss, part, ',');) x.push_back(std::stoll(part));
      c.x = std::move(x);
    }
  } catch (const std::exception& e) {
    err << "convexlab: " << e.what() << "\n";
    return kExitInvalid;
  }
  return run(c, out, err);
}

}  // namespace convexlab
