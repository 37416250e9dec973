#include "inflation/cli.hpp"

#include "inflation/bounds.hpp"
#include "inflation/coloring.hpp"
#include "inflation/error.hpp"
#include "inflation/mimicry.hpp"
#include "inflation/oracle.hpp"
#include "inflation/rng.hpp"
#include "inflation/setsystem.hpp"
#include "inflation/structures.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <regex>
#include <sstream>

namespace inflation::cli {

namespace {

using nlohmann::ordered_json;

ordered_json count_json(const BigInt& value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return value.str();
}

std::string fraction(const ExactRational& value) { return to_fraction_string(value); }

ordered_json sets_json(const SetSystem& sys, const std::vector<std::size_t>& indices) {
  ordered_json out = ordered_json::array();
  for (std::size_t i : indices) out.push_back(to_string(sys[i]));
  return out;
}

ordered_json echo(const ExperimentConfig& c) {
  // workers and output are left out: neither may change the report.
  ordered_json p;
  p["k"] = c.k;
  p["n"] = fraction(c.n);
  p["w"] = c.w;
  p["m"] = c.m;
  p["count"] = c.count;
  p["input"] = c.input;
  p["coloring"] = c.coloring;
  p["save"] = c.save;
  p["trials"] = c.trials;
  p["samples"] = c.samples;
  p["coloring_budget"] = c.budgets.colorings;
  p["tuple_budget"] = c.budgets.tuples;
  p["node_budget"] = c.budgets.oracle_nodes;
  p["exhaustive_colorings"] = c.exhaustive_colorings;
  p["distinct_only"] = c.distinct_only;
  p["allow_empty_sets"] = c.allow_empty_sets;
  p["tuple"] = c.tuple;
  p["n_from"] = fraction(c.n_from);
  p["n_to"] = fraction(c.n_to);
  p["n_factor"] = fraction(c.n_factor);
  return p;
}

Report skeleton(const ExperimentConfig& c) {
  Report r;
  r["command"] = c.command;
  r["params"] = echo(c);
  r["seed"] = c.seed;
  r["family_size"] = nullptr;
  r["ground_size"] = nullptr;
  r["k"] = c.k;
  r["w"] = c.w;
  r["n"] = fraction(c.n);
  r["results"] = ordered_json::object();
  r["bound"] = nullptr;
  return r;
}

void describe(Report& r, const SetSystem& sys) {
  r["family_size"] = sys.size();
  r["ground_size"] = sys.ground().size;
  r["w"] = sys.width();
}

struct Loaded {
  SetSystem raw;
  std::size_t empty_sets = 0;
  bool remapped = false;
};

Loaded load_family(const ExperimentConfig& c) {
  if (c.input.empty()) fail(ErrorCode::precondition, c.command + " needs --input");
  ParsedSystem parsed = parse_set_system(read_text_file(c.input));
  const std::size_t empties = parsed.system.empty_set_count();
  if (empties > 0 && !c.allow_empty_sets) {
    fail(ErrorCode::infeasible, "input has " + std::to_string(empties) +
                                    " empty set(s); pass --allow-empty-sets to accept");
  }
  if (parsed.system.size() == 0) fail(ErrorCode::infeasible, "input family is empty");
  return {std::move(parsed.system), empties, parsed.remapped};
}

void note_input(Report& r, const Loaded& in) {
  r["results"]["input_sets"] = in.raw.size();
  r["results"]["input_ground"] = in.raw.ground().size;
  r["results"]["empty_sets"] = in.empty_sets;
  r["results"]["remapped"] = in.remapped;
}

Coloring load_or_sample(const ExperimentConfig& c, const SetSystem& sys, std::size_t k,
                        bool require_balanced) {
  if (!c.coloring.empty()) {
    Coloring col = parse_coloring(read_text_file(c.coloring), k);
    if (require_balanced) check_balanced(col, sys, k);
    if (col.size() != sys.ground().size) {
      fail(ErrorCode::precondition, "coloring does not cover the (padded) ground set of size " +
                                        std::to_string(sys.ground().size));
    }
    return col;
  }
  return sample_balanced(sys.ground(), k, c.seed);
}

TupleOfSets requested_tuple(const ExperimentConfig& c, std::size_t k) {
  if (c.tuple.size() != k) {
    fail(ErrorCode::precondition, "--tuple needs exactly " + std::to_string(k) + " indices");
  }
  return TupleOfSets{c.tuple};
}

// Bad counts over either every balanced coloring or `trials` seeded ones,
// one entry per n.
struct CensusRow {
  ExactRational n;
  BigInt bad = 0;
  BigInt total = 0;
  std::uint64_t min_bad = 0;
  std::uint64_t max_bad = 0;
};

struct CensusRun {
  std::uint64_t colorings = 0;
  bool exhaustive = false;
  std::vector<CensusRow> rows;
};

CensusRun census_over_colorings(const ExperimentConfig& c, const SetSystem& sys,
                                const std::vector<ExactRational>& ns) {
  CensusRun run;
  run.exhaustive = c.exhaustive_colorings;
  if (c.exhaustive_colorings) {
    for (const LemmaCheckReport& rep : exhaustive_lemma_check(sys, c.k, ns, c.budgets)) {
      run.colorings = rep.colorings;
      run.rows.push_back({rep.n, rep.pairs_bad, rep.pairs_total, rep.min_bad, rep.max_bad});
    }
    return run;
  }
  for (const ExactRational& n : ns) run.rows.push_back({n, 0, 0, UINT64_MAX, 0});
  Rng rng(c.seed);
  for (std::uint64_t t = 0; t < c.trials; ++t) {
    const Coloring col = sample_balanced(sys.ground(), c.k, rng);
    const MimicProfile profile = mimic_profile(sys, col, c.k, c.budgets);
    for (CensusRow& row : run.rows) {
      const Census cen = profile.census(row.n);
      row.bad += cen.bad_count;
      row.total += cen.total;
      row.min_bad = std::min(row.min_bad, cen.bad_count);
      row.max_bad = std::max(row.max_bad, cen.bad_count);
    }
  }
  run.colorings = c.trials;
  return run;
}

ExactRational empirical(const CensusRow& row) {
  return row.total == 0 ? ExactRational(0) : ExactRational(row.bad, row.total);
}

ordered_json witness_json(const SetSystem& sys, const InflationWitness& wit) {
  ordered_json fams = ordered_json::array();
  for (const auto& f : wit.families) fams.push_back(sets_json(sys, f));
  return fams;
}

ordered_json verdict_json(const SetSystem& sys, const Verdict& v) {
  ordered_json out;
  out["status"] = to_string(v.status);
  out["nodes_explored"] = v.nodes_explored;
  out["witness"] = v.witness ? witness_json(sys, *v.witness) : ordered_json(nullptr);
  return out;
}

void cmd_gen(const ExperimentConfig& c, Report& r) {
  const bool complete = c.count == 0;
  const SetSystem sys =
      complete ? generate_complete_family(c.m, c.w) : generate_uniform_family(c.m, c.w, c.count, c.seed);
  if (!c.save.empty()) write_text_file(c.save, serialize(sys));
  describe(r, sys);
  r["n"] = nullptr;
  r["results"]["complete"] = complete;
  std::vector<std::size_t> all(sys.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  r["results"]["sets"] = sets_json(sys, all);
}

void cmd_bound(const ExperimentConfig& c, Report& r) {
  const ExactRational b = bad_fraction_bound(c.k, c.w, c.n);
  r["results"]["bound_fraction"] = fraction(b);
  r["results"]["vacuous"] = is_vacuous(b);
  if (c.k == 2) {
    const ExactRational closed = bad_fraction_bound_k2(c.w, c.n);
    r["results"]["closed_form"] = fraction(closed);
    r["results"]["closed_form_agrees"] = closed == b;
  }
  r["bound"] = fraction(b);
}

void cmd_classify(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  const SetSystem sys = normalize(in.raw, c.k);
  describe(r, sys);
  note_input(r, in);
  const TupleOfSets tuple = requested_tuple(c, c.k);
  const Coloring col = load_or_sample(c, sys, c.k, true);
  const Classification cls = classify(sys, tuple, col, c.n);
  auto& res = r["results"];
  res["tuple"] = sets_json(sys, tuple.indices);
  res["coloring"] = serialize(col);
  res["threshold"] = cls.threshold;
  res["mimic_counts"] = cls.per_j_count;
  res["bad_parts"] = cls.bad_js;
  res["good"] = cls.good;
  if (cls.good) {
    const InflationWitness wit = extract_witness(sys, tuple, col, c.n);
    const WitnessCheck check = verify_witness(sys, wit, tuple, c.n);
    res["witness"] = witness_json(sys, wit);
    res["witness_verified"] = check.ok;
  } else {
    res["witness"] = nullptr;
    res["witness_verified"] = nullptr;
  }
  res["oracle"] = verdict_json(sys, inflatable_exact(sys, tuple, c.n, c.budgets.oracle_nodes));
  const ExactRational b = bad_fraction_bound(c.k, sys.width(), c.n);
  r["bound"] = fraction(b);
}

void cmd_census(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  const SetSystem sys = normalize(in.raw, c.k);
  describe(r, sys);
  note_input(r, in);
  const CensusRun run = census_over_colorings(c, sys, {c.n});
  const CensusRow& row = run.rows.front();
  const ExactRational b = bad_fraction_bound(c.k, sys.width(), c.n);
  auto& res = r["results"];
  res["exhaustive_colorings"] = run.exhaustive;
  res["colorings"] = run.colorings;
  res["bad_count"] = count_json(row.bad);
  res["total"] = count_json(row.total);
  res["empirical_fraction"] = fraction(empirical(row));
  res["min_bad"] = row.min_bad;
  res["max_bad"] = row.max_bad;
  res["within_bound"] = empirical(row) <= b;
  res["vacuous"] = is_vacuous(b);
  r["bound"] = fraction(b);
}

void cmd_lemma_check(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  const SetSystem sys = normalize(in.raw, c.k);
  describe(r, sys);
  note_input(r, in);
  const LemmaCheckReport rep = exhaustive_lemma_check(sys, c.k, c.n, c.budgets);
  auto& res = r["results"];
  res["pass"] = rep.pass;
  res["colorings"] = rep.colorings;
  res["pairs_bad"] = count_json(rep.pairs_bad);
  res["pairs_total"] = count_json(rep.pairs_total);
  res["empirical_fraction"] = fraction(rep.empirical);
  res["min_bad"] = rep.min_bad;
  res["max_bad"] = rep.max_bad;
  res["averaging_holds"] = rep.averaging_holds;
  res["vacuous"] = is_vacuous(rep.bound);
  r["bound"] = fraction(rep.bound);
}

void cmd_kneser(const ExperimentConfig& c, Report& r) {
  DisjointnessGraph g = [&] {
    if (c.input.empty()) return kneser(c.m, c.w);
    ExperimentConfig relaxed = c;
    relaxed.allow_empty_sets = true;
    const Loaded in = load_family(relaxed);
    std::vector<ElementSet> kept;
    for (const ElementSet& s : in.raw.sets()) {
      if (!s.empty()) kept.push_back(s);
    }
    r["results"]["empty_sets_excluded"] = in.empty_sets;
    return disjointness_graph(SetSystem(in.raw.ground(), in.raw.width(), std::move(kept)));
  }();
  if (!c.save.empty()) write_text_file(c.save, serialize(g));
  describe(r, g.family);
  r["k"] = 2;

  std::vector<Edge> edges = g.edges;
  if (!c.tuple.empty()) {
    if (c.tuple.size() != 2) fail(ErrorCode::precondition, "--tuple names one edge: two indices");
    const Edge e{std::min(c.tuple[0], c.tuple[1]), std::max(c.tuple[0], c.tuple[1])};
    if (!g.has_edge(e.first, e.second)) fail(ErrorCode::precondition, "--tuple is not an edge");
    edges = {e};
  }
  const SearchMode mode = c.exhaustive_colorings ? SearchMode::exhaustive()
                                                 : SearchMode::sampled(c.trials, c.seed);
  std::uint64_t found = 0;
  std::size_t smallest = SIZE_MAX;
  ordered_json first = nullptr;
  for (const Edge& e : edges) {
    const auto wit = edge_biclique_witness(g, e, c.n, mode, c.budgets);
    if (!wit) continue;
    ++found;
    smallest = std::min({smallest, wit->part_a.size(), wit->part_b.size()});
    if (first.is_null()) {
      first = ordered_json::object();
      first["edge"] = {e.first, e.second};
      first["part_a"] = sets_json(g.family, wit->part_a);
      first["part_b"] = sets_json(g.family, wit->part_b);
      first["coloring"] = serialize(wit->coloring);
    }
  }
  const ExactRational b = bad_fraction_bound_k2(g.family.width(), c.n);
  auto& res = r["results"];
  res["vertices"] = g.vertex_count();
  res["edges"] = g.edges.size();
  res["edges_tested"] = edges.size();
  res["edges_with_witness"] = found;
  res["threshold"] = size_threshold(g.vertex_count(), c.n, g.vertex_count() + 1);
  res["smallest_side"] = found == 0 ? ordered_json(nullptr) : ordered_json(smallest);
  res["first_witness"] = first;
  res["vacuous"] = is_vacuous(b);
  r["bound"] = fraction(b);
}

void cmd_sunflower(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  describe(r, in.raw);
  note_input(r, in);
  std::map<std::size_t, std::uint64_t> kernels;
  const std::uint64_t total = for_each_sunflower(
      in.raw, c.k, c.distinct_only,
      [&](const SunflowerRecord& rec) { ++kernels[rec.kernel.size()]; }, c.budgets);
  auto& res = r["results"];
  res["distinct_only"] = c.distinct_only;
  res["sunflowers"] = total;
  ordered_json by_kernel = ordered_json::object();
  for (const auto& [size, n] : kernels) by_kernel[std::to_string(size)] = n;
  res["by_kernel_size"] = by_kernel;
  const ExactRational b = bad_fraction_bound(c.k, in.raw.width(), c.n);
  r["bound"] = fraction(b);
  if (c.samples == 0) {
    res["experiment"] = nullptr;
    return;
  }
  const SetSystem sys = normalize(in.raw, c.k);
  const SunflowerExperiment ex =
      sunflower_inflation_experiment(sys, c.k, c.n, c.samples, c.seed, c.distinct_only, c.budgets);
  ordered_json e;
  e["examined"] = ex.examined;
  e["exhaustive"] = ex.exhaustive;
  e["good_under_best_coloring"] = ex.good_under_best_coloring;
  e["inflatable_by_oracle"] = ex.inflatable_by_oracle;
  e["not_inflatable"] = ex.not_inflatable;
  e["inconclusive"] = ex.inconclusive;
  e["inflatable_fraction"] = fraction(ex.fraction());
  e["coloring"] = serialize(ex.coloring);
  res["experiment"] = e;
}

void cmd_rainbow(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  const SetSystem sys = normalize(in.raw, c.k);
  describe(r, sys);
  note_input(r, in);
  const Coloring part = load_or_sample(c, sys, c.k, false);
  const bool balanced = part.is_balanced();
  const std::uint64_t tuples = checked_tuple_count(sys.size(), c.k, c.budgets.tuples);
  std::uint64_t considered = 0, rainbow = 0, sunflowers = 0, good = 0;
  for (std::uint64_t rank = 0; rank < tuples; ++rank) {
    const TupleOfSets t = tuple_at(rank, sys.size(), c.k);
    if (c.distinct_only) {
      std::vector<std::size_t> idx = t.indices;
      std::sort(idx.begin(), idx.end());
      if (std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
    }
    ++considered;
    if (is_sunflower(sys, t)) ++sunflowers;
    if (!is_rainbow_sunflower(sys, t, part)) continue;
    ++rainbow;
    if (balanced && classify(sys, t, part, c.n).good) ++good;
  }
  auto& res = r["results"];
  res["partition"] = serialize(part);
  res["balanced"] = balanced;
  res["tuples"] = considered;
  res["sunflowers"] = sunflowers;
  res["rainbow_sunflowers"] = rainbow;
  res["good_rainbow_sunflowers"] = balanced ? ordered_json(good) : ordered_json(nullptr);
  const ExactRational b = bad_fraction_bound(c.k, sys.width(), c.n);
  r["bound"] = fraction(b);
}

void cmd_pair_census(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  const SetSystem sys = normalize(in.raw, 2);
  describe(r, sys);
  note_input(r, in);
  r["k"] = 2;
  std::vector<Coloring> parts;
  if (!c.coloring.empty()) {
    parts.push_back(load_or_sample(c, sys, 2, false));
  } else {
    Rng rng(c.seed);
    for (std::uint64_t t = 0; t < c.trials; ++t) parts.push_back(sample_balanced(sys.ground(), 2, rng));
  }
  ordered_json rows = ordered_json::array();
  std::uint64_t census_total = 0, good_total = 0, least = UINT64_MAX;
  for (const Coloring& p : parts) {
    const std::uint64_t census = disjoint_pair_census(sys, p);
    std::optional<std::uint64_t> good;
    if (p.is_balanced()) {
      good = 0;
      for (std::size_t s = 0; s < sys.size(); ++s) {
        for (std::size_t t = 0; t < sys.size(); ++t) {
          if (s == t) continue;
          if (!bits::difference_within(sys.mask(s), sys.mask(t), p.mask(0)) ||
              !bits::difference_within(sys.mask(t), sys.mask(s), p.mask(1))) {
            continue;
          }
          if (classify(sys, TupleOfSets{{s, t}}, p, c.n).good) ++*good;
        }
      }
      good_total += *good;
    }
    census_total += census;
    least = std::min(least, census);
    ordered_json row;
    row["partition"] = serialize(p);
    row["census"] = census;
    row["good_pairs"] = good ? ordered_json(*good) : ordered_json(nullptr);
    rows.push_back(row);
  }
  auto& res = r["results"];
  res["partitions"] = rows;
  res["census_total"] = census_total;
  res["census_min"] = least;
  res["good_total"] = good_total;
  res["good_fraction"] =
      census_total == 0 ? ordered_json(nullptr) : ordered_json(fraction(ExactRational(good_total, census_total)));
  res["ordered_pairs"] = sys.size() * (sys.size() - 1);
  const ExactRational b = bad_fraction_bound_k2(sys.width(), c.n);
  r["bound"] = fraction(b);
}

void cmd_conjecture(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  describe(r, in.raw);
  note_input(r, in);
  r["n"] = nullptr;
  const std::size_t f = in.raw.size();
  std::uint64_t triples = 0, found = 0;
  const bool exhaustive = c.exhaustive_colorings;
  auto probe = [&](std::size_t s, std::size_t s1, std::size_t s2) {
    ++triples;
    if (union_trace_search(in.raw, s, s1, s2)) ++found;
  };
  if (exhaustive) {
    const std::uint64_t total = checked_tuple_count(f, 3, c.budgets.tuples);
    for (std::uint64_t rank = 0; rank < total; ++rank) {
      const TupleOfSets t = tuple_at(rank, f, 3);
      probe(t[0], t[1], t[2]);
    }
  } else {
    Rng rng(c.seed);
    for (std::uint64_t i = 0; i < c.trials; ++i) {
      const std::size_t s = uniform_below(rng, f);
      const std::size_t s1 = uniform_below(rng, f);
      const std::size_t s2 = uniform_below(rng, f);
      probe(s, s1, s2);
    }
  }
  auto& res = r["results"];
  res["exhaustive"] = exhaustive;
  res["triples"] = triples;
  res["with_union_trace"] = found;
  res["fraction"] = fraction(triples == 0 ? ExactRational(0) : ExactRational(found, triples));
}

std::vector<ExactRational> sweep_values(const ExperimentConfig& c) {
  std::vector<ExactRational> ns;
  for (ExactRational n = c.n_from; n <= c.n_to; n *= c.n_factor) {
    ns.push_back(n);
    if (ns.size() > 4096) fail(ErrorCode::budget_exceeded, "sweep has more than 4096 steps");
  }
  return ns;
}

void cmd_sweep(const ExperimentConfig& c, Report& r) {
  const Loaded in = load_family(c);
  const SetSystem sys = normalize(in.raw, c.k);
  describe(r, sys);
  note_input(r, in);
  r["n"] = nullptr;
  const CensusRun run = census_over_colorings(c, sys, sweep_values(c));
  ordered_json rows = ordered_json::array();
  for (const CensusRow& row : run.rows) {
    ordered_json o;
    o["n"] = fraction(row.n);
    o["bad_count"] = count_json(row.bad);
    o["total"] = count_json(row.total);
    o["empirical_fraction"] = fraction(empirical(row));
    o["bound_fraction"] = fraction(bad_fraction_bound(c.k, sys.width(), row.n));
    rows.push_back(o);
  }
  r["results"]["exhaustive_colorings"] = run.exhaustive;
  r["results"]["colorings"] = run.colorings;
  r["results"]["rows"] = rows;
}

void validate(const ExperimentConfig& c) {
  if (c.k < 2) fail(ErrorCode::precondition, "--k must be at least 2");
  if (c.n <= 0) fail(ErrorCode::precondition, "--n must be positive");
  if (c.budgets.colorings == 0 || c.budgets.tuples == 0 || c.budgets.oracle_nodes == 0) {
    fail(ErrorCode::precondition, "budgets must be positive");
  }
  if (c.budgets.workers == 0) fail(ErrorCode::precondition, "--workers must be positive");
  if (c.trials == 0) fail(ErrorCode::precondition, "--trials must be positive");
  if (c.command == "sweep") {
    if (c.n_from <= 0 || c.n_to < c.n_from) {
      fail(ErrorCode::precondition, "sweep needs 0 < --n-from <= --n-to");
    }
    if (c.n_factor <= 1) fail(ErrorCode::precondition, "--n-factor must exceed 1");
  }
  if (c.format == Format::csv && c.command != "sweep") {
    fail(ErrorCode::precondition, "csv output is only available for sweep");
  }
}

}  // namespace

std::optional<ExperimentConfig> parse_arguments(const std::vector<std::string>& args,
                                                std::ostream& out) {
  ExperimentConfig c;
  std::string n = "1", n_from = "1", n_to = "1024", n_factor = "2", format = "auto";
  CLI::App app{"Inflation, mimicry and sunflower experiments on set systems", "inflate"};
  app.add_option("command", c.command, "Experiment to run")
      ->required()
      ->check(CLI::IsMember(commands()));
  app.add_option("--k", c.k, "Tuple length / number of colors");
  app.add_option("--n", n, "Inflation parameter: integer, decimal or p/q");
  app.add_option("--w", c.w, "Set width for gen, bound and kneser");
  app.add_option("--m", c.m, "Ground size for gen and kneser");
  app.add_option("--count", c.count, "Number of sets for gen (0: all w-subsets)");
  app.add_option("--seed", c.seed, "Random seed");
  app.add_option("--input", c.input, "Set-system file");
  app.add_option("--coloring", c.coloring, "Coloring / partition file");
  app.add_option("--output", c.output, "Report destination (default: stdout)");
  app.add_option("--save", c.save, "Write the generated family or graph here");
  app.add_option("--format", format, "auto, json or csv")
      ->check(CLI::IsMember({"auto", "json", "csv"}));
  app.add_option("--trials", c.trials, "Sampled colorings, partitions or triples");
  app.add_option("--samples", c.samples, "Sunflowers to classify for inflatability");
  app.add_option("--coloring-budget", c.budgets.colorings, "Maximum colorings enumerated");
  app.add_option("--tuple-budget", c.budgets.tuples, "Maximum tuples enumerated");
  app.add_option("--node-budget", c.budgets.oracle_nodes, "Maximum oracle search nodes");
  app.add_option("--workers", c.budgets.workers, "Worker threads");
  app.add_option("--tuple", c.tuple, "Set indices, comma separated")->delimiter(',');
  app.add_flag("--exhaustive-colorings", c.exhaustive_colorings,
               "Enumerate every balanced coloring (or every triple)");
  app.add_flag("--distinct-only,!--all-tuples", c.distinct_only,
               "Skip tuples that repeat a set (default on)");
  app.add_flag("--allow-empty-sets", c.allow_empty_sets, "Accept empty sets in the input");
  app.add_option("--n-from", n_from, "First n of a sweep");
  app.add_option("--n-to", n_to, "Last n of a sweep (inclusive)");
  app.add_option("--n-factor", n_factor, "Ratio between consecutive sweep values");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    fail(ErrorCode::parse, e.what());
  }
  c.n = parse_rational(n);
  c.n_from = parse_rational(n_from);
  c.n_to = parse_rational(n_to);
  c.n_factor = parse_rational(n_factor);
  c.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::automatic;
  validate(c);
  return c;
}

Report run(const ExperimentConfig& c) {
  validate(c);
  Report r = skeleton(c);
  if (c.command == "gen") cmd_gen(c, r);
  else if (c.command == "classify") cmd_classify(c, r);
  else if (c.command == "census") cmd_census(c, r);
  else if (c.command == "bound") cmd_bound(c, r);
  else if (c.command == "lemma-check") cmd_lemma_check(c, r);
  else if (c.command == "kneser") cmd_kneser(c, r);
  else if (c.command == "sunflower") cmd_sunflower(c, r);
  else if (c.command == "rainbow") cmd_rainbow(c, r);
  else if (c.command == "pair-census") cmd_pair_census(c, r);
  else if (c.command == "conjecture") cmd_conjecture(c, r);
  else if (c.command == "sweep") cmd_sweep(c, r);
  else fail(ErrorCode::precondition, "unknown command " + c.command);
  return r;
}

std::string render(const ExperimentConfig& c, const Report& report) {
  const bool csv = c.format == Format::csv || (c.format == Format::automatic && c.command == "sweep");
  if (!csv) return report.dump(2) + "\n";
  std::ostringstream out;
  out << "n,bad_count,total,empirical_fraction,bound_fraction\n";
  for (const auto& row : report["results"]["rows"]) {
    auto cell = [](const ordered_json& v) {
      return v.is_string() ? v.get<std::string>() : v.dump();
    };
    out << cell(row["n"]) << ',' << cell(row["bad_count"]) << ',' << cell(row["total"]) << ','
        << cell(row["empirical_fraction"]) << ',' << cell(row["bound_fraction"]) << '\n';
  }
  return out.str();
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const auto config = parse_arguments(args, out);
    if (!config) return 0;
    const auto start = std::chrono::steady_clock::now();
    Report report = run(*config);
    const auto stop = std::chrono::steady_clock::now();
    report["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    const std::string text = render(*config, report);
    if (config->output.empty()) {
      out << text;
    } else {
      write_text_file(config->output, text);
    }
    return 0;
  } catch (const Error& e) {
    err << "inflate: " << to_string(e.code()) << ": " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    err << "inflate: internal: " << e.what() << '\n';
    return static_cast<int>(ErrorCode::internal);
  }
}

std::string without_elapsed(const std::string& text) {
  static const std::regex elapsed(R"("elapsed_ms": [0-9]+)");
  return std::regex_replace(text, elapsed, "\"elapsed_ms\": 0");
}

}  // namespace inflation::cli
