#pragma once

#include "inflation/budget.hpp"
#include "inflation/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace inflation::cli {

using Report = nlohmann::ordered_json;

enum class Format { automatic, json, csv };

struct ExperimentConfig {
  std::string command;
  std::size_t k = 2;
  ExactRational n = 1;
  std::size_t w = 2;
  std::size_t m = 6;
  std::size_t count = 0;
  std::uint64_t seed = 1;
  std::string input;
  std::string coloring;
  std::string output;
  std::string save;
  Format format = Format::automatic;
  std::uint64_t trials = 16;
  std::uint64_t samples = 0;
  Budgets budgets;
  bool exhaustive_colorings = false;
  bool distinct_only = true;
  bool allow_empty_sets = false;
  std::vector<std::size_t> tuple;
  ExactRational n_from = 1;
  ExactRational n_to = 1024;
  ExactRational n_factor = 2;
};

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "gen",   "classify",  "census",  "bound",       "lemma-check", "kneser",
      "sunflower", "rainbow", "pair-census", "conjecture", "sweep"};
  return names;
}

/// Throws Error(parse) on malformed flags and Error(precondition) on an
/// invalid combination. Returns nullopt after printing help to `out`.
std::optional<ExperimentConfig> parse_arguments(const std::vector<std::string>& args,
                                                std::ostream& out);

/// Runs one command; the report carries every key except elapsed_ms.
Report run(const ExperimentConfig& config);

/// The text written for a report: JSON, or CSV rows for sweep.
std::string render(const ExperimentConfig& config, const Report& report);

/// Full command line: parse, run, time, write. Returns the exit status; a
/// diagnostic goes to `err` on failure.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Report text with the elapsed_ms value blanked, for determinism checks.
std::string without_elapsed(const std::string& text);

}  // namespace inflation::cli
