#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "convexlab/io.hpp"
#include "convexlab/measure.hpp"

namespace convexlab {

enum class Command { ruzsa, kk, lemma1, lemma2, bm, theorem, sigma, simplex, suite };
enum class OutputFormat { json, csv };

std::string_view to_string(Command c);
Command parse_command(std::string_view text);

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitDimensionCap = 3;

struct RunConfig {
  Command command = Command::suite;
  std::vector<std::string> inputs;
  std::uint64_t seed = 42;
  std::optional<Rational> grid_step;
  std::uint64_t samples = kDefaultSamples;
  double c_budget = 10.0;
  // Unset means json, except for sigma which defaults to csv.
  std::optional<OutputFormat> format;
  std::string output_path;  // empty: standard output

  // kk: a single difference vector; unset checks every x in A - A.
  std::optional<std::vector<std::int64_t>> x;
  // lemma2
  Rational r = Rational(1, 2);
  std::uint64_t trials = 200;
  // theorem: unset runs every applicable form
  std::optional<std::string> form;
  // sigma: "n" or "lo..hi"
  std::string n_range = "1";
  std::vector<Rational> alphas{Rational(1)};
  long bits = 128;
  // simplex
  unsigned long simplex_n = 2;
  Rational simplex_L = 1;
  std::optional<unsigned long> sweep;

  OutputFormat effective_format() const;
};

Json to_json(const RunConfig& config);

struct RunOutcome {
  int exit_code = kExitPass;
  std::string output;  // report text, empty on error
  std::string error;
};

// Executes the configured check(s) and renders the report; never throws.
RunOutcome execute(const RunConfig& config);

// Runs and writes the report to config.output_path or `out`; errors go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Command line entry point.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace convexlab
