// popmaj: simulate, sweep, and verify two-type majority protocols on
// interaction graphs.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "popmaj/analysis.hpp"
#include "popmaj/experiment.hpp"
#include "popmaj/graph.hpp"
#include "popmaj/protocol.hpp"
#include "popmaj/rng.hpp"
#include "popmaj/stats.hpp"
#include "popmaj/verifier.hpp"

namespace {

constexpr const char* kOutDirEnv = "POPMAJ_OUT_DIR";

std::string out_path(const std::string& path) {
  const char* dir = std::getenv(kOutDirEnv);
  if (dir == nullptr || *dir == '\0' || path.empty() || path[0] == '/')
    return path;
  return std::string(dir) + "/" + path;
}

std::ofstream open_out(const std::string& path) {
  const std::string resolved = out_path(path);
  std::ofstream out(resolved, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + resolved);
  return out;
}

popmaj::Protocol load_protocol(const std::string& arg) {
  if (arg == "three-state") return popmaj::three_state_protocol();
  if (arg == "ambassador") return popmaj::ambassador_protocol();
  return popmaj::protocol_from_json(
      nlohmann::json::parse(popmaj::slurp_file(arg)));
}

// Accepts either a family literal like "clique(8)" or an edge-list file path.
popmaj::GraphSpec parse_graph_arg(const std::string& arg) {
  popmaj::GraphSpec gs;
  const auto open = arg.find('(');
  if (open == std::string::npos || arg.back() != ')') {
    gs.family = "file";
    gs.path = arg;
    return gs;
  }
  gs.family = arg.substr(0, open);
  std::vector<std::string> parts;
  std::string body = arg.substr(open + 1, arg.size() - open - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  const auto want = [&](std::size_t lo, std::size_t hi) {
    if (parts.size() < lo || parts.size() > hi)
      throw CLI::ValidationError("graph", "bad parameter count in " + arg);
  };
  const auto num = [&](std::size_t i) {
    return static_cast<std::uint32_t>(std::stoul(parts.at(i)));
  };
  if (gs.family == "clique" || gs.family == "line") {
    want(1, 1);
    gs.n = num(0);
  } else if (gs.family == "lollipop") {
    want(2, 3);
    gs.n1 = num(0);
    gs.n2 = num(1);
    if (parts.size() == 3) gs.bridge = parts[2];
  } else if (gs.family == "two-cliques") {
    want(2, 2);
    gs.n1 = num(0);
    gs.n2 = num(1);
  } else if (gs.family == "clique-feeder") {
    want(1, 1);
    gs.n1 = num(0);
  } else if (gs.family == "cycle-chords") {
    want(1, 2);
    gs.n = num(0);
    if (parts.size() == 2) gs.skip = num(1);
  } else {
    throw CLI::ValidationError("graph", "unknown family in " + arg);
  }
  return gs;
}

nlohmann::json arcs_to_json(const std::vector<popmaj::Arc>& arcs) {
  nlohmann::json j = nlohmann::json::array();
  for (const popmaj::Arc& a : arcs) j.push_back({a.tail, a.head});
  return j;
}

struct VerifyTotals {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  nlohmann::json results = nlohmann::json::array();
};

void verify_one(const popmaj::InteractionGraph& g, const popmaj::Protocol& p,
                const std::string& coloring, const std::string& graph_label,
                std::uint64_t node_limit, bool verbose, VerifyTotals& totals) {
  popmaj::Configuration c0;
  c0.states.resize(coloring.size());
  for (std::size_t v = 0; v < coloring.size(); ++v)
    c0.states[v] = p.input_state(std::string(1, coloring[v]));
  const popmaj::MajorityVerdict verdict =
      popmaj::stably_computes_majority(g, p, c0, node_limit);
  ++totals.checks;
  if (!verdict.pass) ++totals.failures;
  if (!verdict.pass || verbose) {
    nlohmann::json r;
    r["graph"] = graph_label;
    r["coloring"] = coloring;
    r["majority"] = verdict.majority;
    r["pass"] = verdict.pass;
    r["explored"] = verdict.explored_nodes;
    if (verdict.violation) {
      r["violation"] = popmaj::to_string(*verdict.violation);
      r["witness"] = arcs_to_json(verdict.witness);
    }
    totals.results.push_back(std::move(r));
  }
}

std::vector<std::string> colorings_for(std::uint32_t n, const std::string& arg) {
  std::vector<std::string> out;
  if (arg != "all") {
    if (arg.size() != n)
      throw CLI::ValidationError("coloring",
                                 "coloring length differs from vertex count");
    for (char c : arg)
      if (c != 'g' && c != 'r')
        throw CLI::ValidationError("coloring", "symbols must be g or r");
    out.push_back(arg);
    return out;
  }
  // Every assignment with a strict majority; orientation matters on directed
  // graphs, so both colors of each split are kept.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto reds = static_cast<std::uint32_t>(__builtin_popcount(mask));
    if (2 * reds == n) continue;
    std::string s(n, 'g');
    for (std::uint32_t v = 0; v < n; ++v)
      if (mask & (1u << v)) s[v] = 'r';
    out.push_back(std::move(s));
  }
  return out;
}

int cmd_verify(const std::string& protocol_arg, const std::string& graph_arg,
               const std::string& coloring_arg, std::uint32_t nmax,
               std::uint64_t node_limit, bool expect_pass, bool verbose) {
  const popmaj::Protocol p = load_protocol(protocol_arg);
  VerifyTotals totals;
  if (graph_arg == "all") {
    for (std::uint32_t n = 2; n <= nmax; ++n) {
      const auto graphs = popmaj::connected_undirected_graphs(n);
      for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const std::string label =
            "undirected(n=" + std::to_string(n) + ",#" + std::to_string(gi) + ")";
        for (const std::string& coloring : colorings_for(n, coloring_arg))
          verify_one(graphs[gi], p, coloring, label, node_limit, verbose,
                     totals);
      }
    }
  } else {
    const popmaj::GraphSpec gs = parse_graph_arg(graph_arg);
    const popmaj::InteractionGraph g = gs.build();
    for (const std::string& coloring :
         colorings_for(g.vertex_count(), coloring_arg))
      verify_one(g, p, coloring, gs.label(), node_limit, verbose, totals);
  }
  nlohmann::json report;
  report["protocol"] = protocol_arg;
  report["checks"] = totals.checks;
  report["failures"] = totals.failures;
  report["pass"] = totals.failures == 0;
  report["results"] = std::move(totals.results);
  std::cout << report.dump(2) << "\n";
  if (expect_pass && totals.failures > 0) return 3;
  return 0;
}

void apply_overrides(popmaj::ExperimentSpec& spec,
                     const std::optional<std::uint64_t>& seed,
                     const std::optional<std::uint64_t>& trials,
                     const std::optional<std::uint64_t>& max_steps,
                     const std::string& engine, std::uint32_t threads,
                     bool trace) {
  if (seed) spec.seed = *seed;
  if (trials) spec.trials = *trials;
  if (max_steps) spec.max_steps = *max_steps;
  if (!engine.empty()) spec.engine = engine;
  if (threads) spec.threads = threads;
  if (trace) spec.record_trace = true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"majority population protocols on interaction graphs"};
  app.require_subcommand(1);

  // graph gen
  auto* graph = app.add_subcommand("graph", "graph utilities");
  graph->require_subcommand(1);
  auto* gen = graph->add_subcommand("gen", "generate an edge list");
  std::string gen_family;
  std::uint32_t gen_n = 0, gen_n1 = 0, gen_n2 = 0, gen_skip = 3;
  std::string gen_bridge = "undirected";
  std::string gen_out;
  gen->add_option("family", gen_family,
                  "clique|line|lollipop|two-cliques|clique-feeder|cycle-chords")
      ->required();
  gen->add_option("--n", gen_n, "vertex count (clique, line, cycle-chords)");
  gen->add_option("--n1", gen_n1, "first block size");
  gen->add_option("--n2", gen_n2, "second block size");
  gen->add_option("--skip", gen_skip, "chord skip (cycle-chords)");
  gen->add_option("--bridge", gen_bridge,
                  "lollipop bridge: undirected|directed-v-to-u|directed-u-to-v");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // simulate
  auto* sim = app.add_subcommand("simulate", "run one experiment spec");
  std::string sim_spec;
  std::optional<std::uint64_t> sim_seed, sim_trials, sim_max_steps;
  std::string sim_engine;
  std::uint32_t sim_threads = 0;
  bool sim_trace = false, sim_quiet = false;
  std::string sim_records;
  sim->add_option("--spec", sim_spec, "experiment spec (JSON)")->required();
  sim->add_option("--seed", sim_seed, "override master seed");
  sim->add_option("--trials", sim_trials, "override trial count");
  sim->add_option("--max-steps", sim_max_steps, "override step cap");
  sim->add_option("--engine", sim_engine,
                  "override engine: direct|skip-null|aggregated");
  sim->add_option("--threads", sim_threads, "override worker count");
  sim->add_flag("--trace", sim_trace, "record interaction traces");
  sim->add_option("--records", sim_records, "write run records (JSON lines)");
  sim->add_flag("--quiet", sim_quiet, "suppress the summary");

  // sweep
  auto* sw = app.add_subcommand("sweep", "run a parameter sweep");
  std::string sw_spec, sw_preset, sw_out, sw_plot, sw_records;
  std::optional<std::uint64_t> sw_seed, sw_trials, sw_max_steps;
  std::string sw_engine;
  std::uint32_t sw_threads = 0;
  auto* sw_spec_opt = sw->add_option("--spec", sw_spec, "sweep spec (JSON)");
  sw->add_option("--preset", sw_preset, "bundled preset name")
      ->excludes(sw_spec_opt);
  sw->add_option("--seed", sw_seed, "override master seed");
  sw->add_option("--trials", sw_trials, "override trial count");
  sw->add_option("--max-steps", sw_max_steps, "override step cap");
  sw->add_option("--engine", sw_engine, "override engine");
  sw->add_option("--threads", sw_threads, "override worker count");
  sw->add_option("--out", sw_out, "summary CSV path (default stdout)");
  sw->add_option("--plot-data", sw_plot, "long-format CSV for plotting");
  sw->add_option("--records", sw_records, "write run records (JSON lines)");

  // verify
  auto* ver = app.add_subcommand("verify", "exhaustively check small instances");
  std::string ver_protocol = "three-state";
  std::string ver_graph, ver_coloring = "all";
  std::uint32_t ver_nmax = 4;
  std::uint64_t ver_node_limit = 5000000;
  bool ver_expect_pass = false, ver_verbose = false;
  ver->add_option("--protocol", ver_protocol,
                  "three-state|ambassador|<table.json>");
  ver->add_option("--graph", ver_graph,
                  "edge-list file, family literal like clique(4), or 'all'")
      ->required();
  ver->add_option("--coloring", ver_coloring, "g/r string or 'all'");
  ver->add_option("--nmax", ver_nmax, "max vertex count for --graph all");
  ver->add_option("--node-limit", ver_node_limit,
                  "configuration space exploration cap");
  ver->add_flag("--expect", ver_expect_pass,
                "exit 3 unless every check passes");
  ver->add_flag("--verbose", ver_verbose, "report passing checks too");

  // bd
  auto* bd = app.add_subcommand("bd", "biased birth-death chain quantities");
  bd->require_subcommand(1);
  auto* bd_prob = bd->add_subcommand(
      "prob", "absorption probability at m (absorbing barriers)");
  auto* bd_time = bd->add_subcommand(
      "time", "expected steps to m (reflecting 0, absorbing m)");
  std::uint32_t bd_m = 0, bd_i = 0;
  double bd_p = 0, bd_q = 0;
  std::uint64_t bd_mc = 0, bd_seed = 1;
  for (auto* sub : {bd_prob, bd_time}) {
    sub->add_option("--m", bd_m, "upper barrier")->required();
    sub->add_option("--i", bd_i, "start state")->required();
    sub->add_option("--p", bd_p, "up probability")->required();
    sub->add_option("--q", bd_q, "down probability")->required();
    sub->add_option("--mc", bd_mc, "Monte Carlo cross-check trials");
    sub->add_option("--seed", bd_seed, "Monte Carlo seed");
  }

  // preset
  auto* preset = app.add_subcommand("preset", "bundled experiment presets");
  preset->require_subcommand(1);
  auto* preset_list = preset->add_subcommand("list", "list preset names");
  auto* preset_show = preset->add_subcommand("show", "print a preset spec");
  std::string preset_name;
  preset_show->add_option("name", preset_name, "preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      static const std::vector<std::string> kFamilies = {
          "clique",        "line",          "lollipop",
          "two-cliques",   "clique-feeder", "cycle-chords"};
      if (std::find(kFamilies.begin(), kFamilies.end(), gen_family) ==
          kFamilies.end())
        throw CLI::ValidationError("family",
                                   "unknown graph family: " + gen_family);
      popmaj::GraphSpec gs;
      gs.family = gen_family;
      gs.n = gen_n;
      gs.n1 = gen_n1;
      gs.n2 = gen_n2;
      gs.skip = gen_skip;
      gs.bridge = gen_bridge;
      const std::string text = popmaj::to_edge_list(gs.build());
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        open_out(gen_out) << text;
      }
      return 0;
    }

    if (sim->parsed()) {
      popmaj::ExperimentSpec spec = popmaj::experiment_from_json(
          nlohmann::json::parse(popmaj::slurp_file(sim_spec)));
      apply_overrides(spec, sim_seed, sim_trials, sim_max_steps, sim_engine,
                      sim_threads, sim_trace);
      const popmaj::CellResult cell = popmaj::simulate(spec);
      if (!sim_records.empty()) {
        auto out = open_out(sim_records);
        popmaj::write_records(out, cell);
      }
      if (!sim_quiet) std::cout << popmaj::to_json(cell.summary).dump(2) << "\n";
      return 0;
    }

    if (sw->parsed()) {
      popmaj::SweepSpec sweep_spec;
      if (!sw_preset.empty()) {
        const auto& names = popmaj::preset_names();
        if (std::find(names.begin(), names.end(), sw_preset) == names.end())
          throw CLI::ValidationError("preset", "unknown preset: " + sw_preset);
        sweep_spec = popmaj::builtin_preset(sw_preset);
      } else if (!sw_spec.empty()) {
        sweep_spec = popmaj::sweep_from_json(
            nlohmann::json::parse(popmaj::slurp_file(sw_spec)));
      } else {
        throw CLI::ValidationError("sweep", "--spec or --preset is required");
      }
      apply_overrides(sweep_spec.base, sw_seed, sw_trials, sw_max_steps,
                      sw_engine, sw_threads, false);
      const std::vector<popmaj::CellResult> cells = popmaj::sweep(sweep_spec);
      if (!sw_records.empty()) {
        auto out = open_out(sw_records);
        for (const popmaj::CellResult& cell : cells)
          popmaj::write_records(out, cell);
      }
      if (!sw_plot.empty()) {
        auto out = open_out(sw_plot);
        popmaj::write_plot_data(out, cells);
      }
      if (sw_out.empty()) {
        popmaj::write_csv(std::cout, cells);
      } else {
        auto out = open_out(sw_out);
        popmaj::write_csv(out, cells);
      }
      return 0;
    }

    if (ver->parsed())
      return cmd_verify(ver_protocol, ver_graph, ver_coloring, ver_nmax,
                        ver_node_limit, ver_expect_pass, ver_verbose);

    if (bd_prob->parsed() || bd_time->parsed()) {
      const bool is_prob = bd_prob->parsed();
      popmaj::BirthDeathSpec s;
      s.m = bd_m;
      s.p = bd_p;
      s.q = bd_q;
      s.barrier0 =
          is_prob ? popmaj::Barrier::absorbing : popmaj::Barrier::reflecting;
      s.barrier_m = popmaj::Barrier::absorbing;
      nlohmann::json j;
      j["m"] = bd_m;
      j["i"] = bd_i;
      j["p"] = bd_p;
      j["q"] = bd_q;
      if (is_prob) {
        j["quantity"] = "absorption_probability";
        j["value"] = popmaj::absorption_probability(s, bd_i);
      } else {
        j["quantity"] = "expected_time";
        j["value"] = popmaj::expected_time_reflecting(s, bd_i);
      }
      if (bd_mc > 0) {
        popmaj::Rng rng(bd_seed);
        std::vector<double> samples;
        samples.reserve(bd_mc);
        std::uint64_t hits = 0;
        for (std::uint64_t t = 0; t < bd_mc; ++t) {
          popmaj::Rng trial_rng(popmaj::trial_seed(bd_seed, t));
          const popmaj::BdSimResult r = popmaj::simulate_bd(s, bd_i, trial_rng);
          if (!r.absorbed_at)
            throw std::runtime_error("Monte Carlo run hit the step cap");
          if (is_prob) {
            if (*r.absorbed_at == bd_m) ++hits;
          } else {
            samples.push_back(static_cast<double>(r.steps));
          }
        }
        nlohmann::json mc;
        mc["trials"] = bd_mc;
        if (is_prob) {
          const popmaj::WilsonInterval w = popmaj::wilson_interval(hits, bd_mc);
          mc["estimate"] = w.freq;
          mc["wilson95_lo"] = w.lo;
          mc["wilson95_hi"] = w.hi;
        } else {
          mc["estimate"] = popmaj::mean(samples);
          mc["stderr"] = popmaj::sample_stddev(samples) /
                         std::sqrt(static_cast<double>(bd_mc));
        }
        j["mc"] = std::move(mc);
      }
      std::cout << j.dump(2) << "\n";
      return 0;
    }

    if (preset_list->parsed()) {
      for (const std::string& name : popmaj::preset_names())
        std::cout << name << "\n";
      return 0;
    }
    if (preset_show->parsed()) {
      const auto& names = popmaj::preset_names();
      if (std::find(names.begin(), names.end(), preset_name) == names.end())
        throw CLI::ValidationError("preset", "unknown preset: " + preset_name);
      std::cout << popmaj::to_json(popmaj::builtin_preset(preset_name)).dump(2)
                << "\n";
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
