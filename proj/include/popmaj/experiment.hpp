#pragma once

#include <cstdint>
#include <exception>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "popmaj/engine.hpp"
#include "popmaj/graph.hpp"
#include "popmaj/protocol.hpp"
#include "popmaj/rng.hpp"
#include "popmaj/scheduler.hpp"
#include "popmaj/stats.hpp"

namespace popmaj {

inline constexpr std::string_view kToolkitVersion = "0.1.0";

inline std::string slurp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---------------------------------------------------------------------------
// Declarative experiment description

struct GraphSpec {
  std::string family = "clique";  // clique | line | lollipop | two-cliques |
                                  // clique-feeder | cycle-chords | file
  std::uint32_t n = 0;
  std::uint32_t n1 = 0;
  std::uint32_t n2 = 0;
  std::uint32_t skip = 3;
  std::string bridge = "undirected";
  std::string path;

  InteractionGraph build() const {
    if (family == "clique") return clique(n);
    if (family == "line") return line(n);
    if (family == "lollipop")
      return lollipop(n1, n2, bridge_mode_from_string(bridge));
    if (family == "two-cliques") return two_cliques_bridged(n1, n2);
    if (family == "clique-feeder") return clique_with_feeder(n1);
    if (family == "cycle-chords") return cycle_with_chords(n, skip);
    if (family == "file") return from_edge_list(slurp_file(path));
    throw std::invalid_argument("unknown graph family: " + family);
  }

  std::string label() const {
    std::ostringstream s;
    if (family == "clique" || family == "line") {
      s << family << "(" << n << ")";
    } else if (family == "lollipop") {
      s << "lollipop(" << n1 << "," << n2 << "," << bridge << ")";
    } else if (family == "two-cliques") {
      s << "two-cliques(" << n1 << "," << n2 << ")";
    } else if (family == "clique-feeder") {
      s << "clique-feeder(" << n1 << ")";
    } else if (family == "cycle-chords") {
      s << "cycle-chords(" << n << "," << skip << ")";
    } else {
      s << family << "(" << path << ")";
    }
    return s.str();
  }
};

struct PlacementSpec {
  std::string mode = "counts";  // counts | random | preset | explicit
  std::uint32_t r = 0;
  std::uint32_t g = 0;
  std::string preset;
  std::vector<std::string> symbols;

  Placement resolve(const GraphSpec& gs) const {
    if (mode == "counts") return Placement::by_counts(r, g);
    if (mode == "random") return Placement::random(r, g);
    if (mode == "explicit") return Placement::explicit_symbols(symbols);
    if (mode == "preset") {
      if (preset == "line-endpoint") {
        const InteractionGraph built = gs.build();
        return line_endpoint_placement(built.vertex_count());
      }
      if (preset == "lollipop-adversarial")
        return lollipop_adversarial_placement(gs.n1, gs.n2);
      if (preset == "two-clique-split")
        return two_clique_split_placement(gs.n1, gs.n2);
      if (preset == "feeder-minority") return feeder_minority_placement(gs.n1);
      throw std::invalid_argument("unknown placement preset: " + preset);
    }
    throw std::invalid_argument("unknown placement mode: " + mode);
  }

  std::string label() const {
    std::ostringstream s;
    if (mode == "counts" || mode == "random") {
      s << mode << "(r=" << r << ",g=" << g << ")";
    } else if (mode == "preset") {
      s << "preset(" << preset << ")";
    } else {
      s << "explicit";
    }
    return s.str();
  }
};

struct ExperimentSpec {
  std::string name;
  GraphSpec graph;
  std::string protocol = "three-state";  // three-state | ambassador
  std::string protocol_file;             // overrides protocol when set
  PlacementSpec placement;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 0;  // 0 -> engine default
  std::string engine = "direct";  // direct | skip-null | aggregated
  bool record_blank = false;
  bool record_contest = false;
  std::uint32_t series_stride = 1;
  bool record_trace = false;
  std::string win_outcome = "g";
  std::uint32_t threads = 0;  // 0 -> hardware concurrency

  Protocol build_protocol() const {
    if (!protocol_file.empty())
      return protocol_from_json(nlohmann::json::parse(slurp_file(protocol_file)));
    if (protocol == "three-state") return three_state_protocol();
    if (protocol == "ambassador") return ambassador_protocol();
    throw std::invalid_argument("unknown protocol: " + protocol);
  }
};

inline nlohmann::json to_json(const GraphSpec& gs) {
  nlohmann::json j;
  j["family"] = gs.family;
  if (gs.family == "clique" || gs.family == "line") j["n"] = gs.n;
  if (gs.family == "cycle-chords") {
    j["n"] = gs.n;
    j["skip"] = gs.skip;
  }
  if (gs.family == "lollipop") {
    j["n1"] = gs.n1;
    j["n2"] = gs.n2;
    j["bridge"] = gs.bridge;
  }
  if (gs.family == "two-cliques") {
    j["n1"] = gs.n1;
    j["n2"] = gs.n2;
  }
  if (gs.family == "clique-feeder") j["n1"] = gs.n1;
  if (gs.family == "file") j["path"] = gs.path;
  return j;
}

inline GraphSpec graph_spec_from_json(const nlohmann::json& j) {
  GraphSpec gs;
  gs.family = j.at("family").get<std::string>();
  gs.n = j.value("n", 0u);
  gs.n1 = j.value("n1", 0u);
  gs.n2 = j.value("n2", 0u);
  gs.skip = j.value("skip", 3u);
  gs.bridge = j.value("bridge", "undirected");
  gs.path = j.value("path", "");
  return gs;
}

inline nlohmann::json to_json(const PlacementSpec& ps) {
  nlohmann::json j;
  j["mode"] = ps.mode;
  if (ps.mode == "counts" || ps.mode == "random") {
    j["r"] = ps.r;
    j["g"] = ps.g;
  }
  if (ps.mode == "preset") j["preset"] = ps.preset;
  if (ps.mode == "explicit") j["symbols"] = ps.symbols;
  return j;
}

inline PlacementSpec placement_spec_from_json(const nlohmann::json& j) {
  PlacementSpec ps;
  ps.mode = j.at("mode").get<std::string>();
  ps.r = j.value("r", 0u);
  ps.g = j.value("g", 0u);
  ps.preset = j.value("preset", "");
  if (j.contains("symbols"))
    ps.symbols = j.at("symbols").get<std::vector<std::string>>();
  return ps;
}

inline nlohmann::json to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["name"] = spec.name;
  j["graph"] = to_json(spec.graph);
  if (!spec.protocol_file.empty())
    j["protocol"] = nlohmann::json{{"file", spec.protocol_file}};
  else
    j["protocol"] = spec.protocol;
  j["placement"] = to_json(spec.placement);
  j["trials"] = spec.trials;
  j["seed"] = spec.seed;
  if (spec.max_steps) j["max_steps"] = spec.max_steps;
  j["engine"] = spec.engine;
  if (spec.record_blank || spec.record_contest) {
    j["observers"] = {{"blank", spec.record_blank},
                      {"contest", spec.record_contest},
                      {"stride", spec.series_stride}};
  }
  if (spec.record_trace) j["record_trace"] = true;
  j["win_outcome"] = spec.win_outcome;
  if (spec.threads) j["threads"] = spec.threads;
  return j;
}

inline ExperimentSpec experiment_from_json(const nlohmann::json& j) {
  ExperimentSpec spec;
  spec.name = j.value("name", "");
  spec.graph = graph_spec_from_json(j.at("graph"));
  if (j.contains("protocol")) {
    if (j.at("protocol").is_object())
      spec.protocol_file = j.at("protocol").at("file").get<std::string>();
    else
      spec.protocol = j.at("protocol").get<std::string>();
  }
  spec.placement = placement_spec_from_json(j.at("placement"));
  spec.trials = j.at("trials").get<std::uint64_t>();
  spec.seed = j.at("seed").get<std::uint64_t>();
  spec.max_steps = j.value("max_steps", std::uint64_t{0});
  spec.engine = j.value("engine", "direct");
  if (j.contains("observers")) {
    const auto& o = j.at("observers");
    spec.record_blank = o.value("blank", false);
    spec.record_contest = o.value("contest", false);
    spec.series_stride = o.value("stride", 1u);
  }
  spec.record_trace = j.value("record_trace", false);
  spec.win_outcome = j.value("win_outcome", "g");
  spec.threads = j.value("threads", 0u);
  return spec;
}

// ---------------------------------------------------------------------------
// Run records and summaries

struct RunRecord {
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
  std::string outcome;  // class label, "frozen" or "step-cap"
  std::uint64_t steps_total = 0;
  std::uint64_t steps_effective = 0;
  std::vector<Arc> trace;  // filled only when the spec asks for traces
};

inline std::string outcome_label(const RunResult& res) {
  switch (res.outcome) {
    case RunResult::Outcome::absorbed: return res.value;
    case RunResult::Outcome::frozen: return "frozen";
    case RunResult::Outcome::step_cap: return "step-cap";
  }
  throw std::invalid_argument("bad outcome");
}

struct Summary {
  std::uint64_t trials = 0;
  std::map<std::string, std::uint64_t> outcome_counts;
  std::string win_outcome;
  std::uint64_t wins = 0;
  std::optional<WilsonInterval> win_interval;
  double steps_mean = 0;
  double steps_median = 0;
  double steps_p95 = 0;
  std::uint64_t cap_hits = 0;
};

inline Summary summarize(const std::vector<RunRecord>& records,
                         const std::string& win_outcome) {
  Summary s;
  s.trials = records.size();
  s.win_outcome = win_outcome;
  if (records.empty()) return s;
  std::vector<double> steps;
  steps.reserve(records.size());
  for (const RunRecord& r : records) {
    ++s.outcome_counts[r.outcome];
    steps.push_back(static_cast<double>(r.steps_total));
  }
  if (auto it = s.outcome_counts.find(win_outcome);
      it != s.outcome_counts.end())
    s.wins = it->second;
  if (auto it = s.outcome_counts.find("step-cap"); it != s.outcome_counts.end())
    s.cap_hits = it->second;
  s.win_interval = wilson_interval(s.wins, s.trials);
  s.steps_mean = mean(steps);
  s.steps_median = median(steps);
  s.steps_p95 = quantile(steps, 0.95);
  return s;
}

inline nlohmann::json to_json(const Summary& s) {
  nlohmann::json j;
  j["trials"] = s.trials;
  j["outcomes"] = s.outcome_counts;
  j["win_outcome"] = s.win_outcome;
  j["wins"] = s.wins;
  if (s.win_interval) {
    j["win_freq"] = s.win_interval->freq;
    j["wilson95_lo"] = s.win_interval->lo;
    j["wilson95_hi"] = s.win_interval->hi;
  }
  j["steps_mean"] = s.steps_mean;
  j["steps_median"] = s.steps_median;
  j["steps_p95"] = s.steps_p95;
  j["cap_hits"] = s.cap_hits;
  return j;
}

// ---------------------------------------------------------------------------
// Simulation driver

struct CellResult {
  ExperimentSpec spec;
  std::vector<std::pair<std::string, double>> cell;  // swept parameter values
  Summary summary;
  std::vector<RunRecord> records;
};

namespace detail {

inline RunRecord run_one_trial(const ExperimentSpec& spec,
                               const InteractionGraph* graph,
                               const Protocol& protocol,
                               const Placement& placement,
                               std::uint64_t trial) {
  RunRecord rec;
  rec.trial = trial;
  rec.seed = trial_seed(spec.seed, trial);
  RunOptions opts;
  opts.max_steps = spec.max_steps;
  opts.skip_null = spec.engine == "skip-null";
  opts.record_blank = spec.record_blank;
  opts.record_contest = spec.record_contest;
  opts.series_stride = spec.series_stride;
  opts.record_trace = spec.record_trace;
  Rng rng(rec.seed);
  RunResult res;
  if (spec.engine == "aggregated") {
    if (spec.placement.mode != "counts" && spec.placement.mode != "random")
      throw std::invalid_argument(
          "aggregated engine needs counts or random placement");
    // Null runs are always jumped over here; the count chain makes the
    // geometric resampling exact, so only the effective steps cost time.
    opts.skip_null = true;
    res = run_clique_aggregated(spec.graph.n, spec.placement.r,
                                spec.placement.g, rng, opts);
  } else {
    Configuration c0 = initial_config(*graph, protocol, placement, &rng);
    Scheduler sched = Scheduler::probabilistic(std::move(rng));
    res = run(*graph, protocol, std::move(c0), sched, opts);
  }
  rec.outcome = outcome_label(res);
  rec.steps_total = res.steps_total;
  rec.steps_effective = res.steps_effective;
  rec.trace = std::move(res.trace);
  return rec;
}

}  // namespace detail

inline CellResult simulate(const ExperimentSpec& spec) {
  CellResult cell;
  cell.spec = spec;
  const Protocol protocol = spec.build_protocol();
  std::optional<InteractionGraph> graph;
  Placement placement;
  if (spec.engine == "aggregated") {
    if (spec.graph.family != "clique")
      throw std::invalid_argument("aggregated engine needs the clique family");
    if (protocol.family != ProtocolFamily::three_state)
      throw std::invalid_argument(
          "aggregated engine needs the three-state protocol");
    if (spec.placement.mode != "counts" && spec.placement.mode != "random")
      throw std::invalid_argument(
          "aggregated engine needs counts or random placement");
  } else {
    graph.emplace(spec.graph.build());
    placement = spec.placement.resolve(spec.graph);
  }
  cell.records.resize(spec.trials);
  const std::uint32_t hw = std::thread::hardware_concurrency();
  std::uint32_t workers = spec.threads ? spec.threads : (hw ? hw : 1);
  if (workers > spec.trials)
    workers = spec.trials ? static_cast<std::uint32_t>(spec.trials) : 1;
  const InteractionGraph* graph_ptr = graph ? &*graph : nullptr;
  std::vector<std::exception_ptr> errors(workers);
  const auto body = [&](std::uint32_t worker) {
    try {
      for (std::uint64_t t = worker; t < spec.trials; t += workers)
        cell.records[t] =
            detail::run_one_trial(spec, graph_ptr, protocol, placement, t);
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers <= 1) {
    body(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint32_t w = 0; w < workers; ++w) pool.emplace_back(body, w);
    for (auto& th : pool) th.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  cell.summary = summarize(cell.records, spec.win_outcome);
  return cell;
}

// One JSON object per run; keys are sorted by the serializer, so reruns with
// the same spec produce byte-identical lines. Timestamps never appear here.
inline void write_records(std::ostream& out, const CellResult& cell) {
  const std::string graph_label = cell.spec.graph.label();
  const std::string placement_label = cell.spec.placement.label();
  const std::string protocol_label = cell.spec.protocol_file.empty()
                                         ? cell.spec.protocol
                                         : cell.spec.protocol_file;
  for (const RunRecord& r : cell.records) {
    nlohmann::json j;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["outcome"] = r.outcome;
    j["steps_total"] = r.steps_total;
    j["steps_effective"] = r.steps_effective;
    j["graph"] = graph_label;
    j["placement"] = placement_label;
    j["protocol"] = protocol_label;
    j["engine"] = cell.spec.engine;
    j["rng"] = kRngAlgorithmId;
    if (!r.trace.empty()) {
      nlohmann::json arcs = nlohmann::json::array();
      for (const Arc& a : r.trace) arcs.push_back({a.tail, a.head});
      j["trace"] = std::move(arcs);
    }
    out << j.dump() << "\n";
  }
}

// ---------------------------------------------------------------------------
// Parameter sweeps

struct SweepAxis {
  std::vector<std::string> params;           // set together (zipped)
  std::vector<std::vector<double>> values;   // one tuple per grid point
};

struct SweepSpec {
  ExperimentSpec base;
  std::vector<SweepAxis> axes;
};

inline void set_parameter(ExperimentSpec& spec, const std::string& name,
                          double value) {
  const auto u32 = [&] { return static_cast<std::uint32_t>(value); };
  const auto u64 = [&] { return static_cast<std::uint64_t>(value); };
  if (name == "graph.n") spec.graph.n = u32();
  else if (name == "graph.n1") spec.graph.n1 = u32();
  else if (name == "graph.n2") spec.graph.n2 = u32();
  else if (name == "graph.skip") spec.graph.skip = u32();
  else if (name == "placement.r") spec.placement.r = u32();
  else if (name == "placement.g") spec.placement.g = u32();
  else if (name == "trials") spec.trials = u64();
  else if (name == "seed") spec.seed = u64();
  else if (name == "max_steps") spec.max_steps = u64();
  else throw std::invalid_argument("unknown sweep parameter: " + name);
}

inline nlohmann::json to_json(const SweepSpec& sw) {
  nlohmann::json j;
  j["base"] = to_json(sw.base);
  j["axes"] = nlohmann::json::array();
  for (const SweepAxis& axis : sw.axes) {
    nlohmann::json a;
    a["params"] = axis.params;
    a["values"] = axis.values;
    j["axes"].push_back(a);
  }
  return j;
}

inline SweepSpec sweep_from_json(const nlohmann::json& j) {
  SweepSpec sw;
  sw.base = experiment_from_json(j.at("base"));
  if (j.contains("axes")) {
    for (const auto& a : j.at("axes")) {
      SweepAxis axis;
      axis.params = a.at("params").get<std::vector<std::string>>();
      axis.values = a.at("values").get<std::vector<std::vector<double>>>();
      for (const auto& tuple : axis.values)
        if (tuple.size() != axis.params.size())
          throw std::invalid_argument("axis tuple arity mismatch");
      sw.axes.push_back(std::move(axis));
    }
  }
  return sw;
}

inline std::vector<CellResult> sweep(const SweepSpec& sw) {
  std::vector<CellResult> cells;
  std::vector<std::size_t> cursor(sw.axes.size(), 0);
  while (true) {
    ExperimentSpec spec = sw.base;
    std::vector<std::pair<std::string, double>> cell_params;
    for (std::size_t a = 0; a < sw.axes.size(); ++a) {
      const SweepAxis& axis = sw.axes[a];
      const auto& tuple = axis.values[cursor[a]];
      for (std::size_t k = 0; k < axis.params.size(); ++k) {
        set_parameter(spec, axis.params[k], tuple[k]);
        cell_params.push_back({axis.params[k], tuple[k]});
      }
    }
    CellResult cell = simulate(spec);
    cell.cell = std::move(cell_params);
    cells.push_back(std::move(cell));
    std::size_t a = sw.axes.size();
    while (a > 0) {
      --a;
      if (++cursor[a] < sw.axes[a].values.size()) break;
      cursor[a] = 0;
      if (a == 0) return cells;
    }
    if (sw.axes.empty()) return cells;
  }
}

inline std::string cell_label(const CellResult& cell) {
  std::ostringstream s;
  for (std::size_t i = 0; i < cell.cell.size(); ++i) {
    if (i) s << ";";
    s << cell.cell[i].first << "=" << cell.cell[i].second;
  }
  return s.str();
}

inline void write_csv(std::ostream& out, const std::vector<CellResult>& cells) {
  out << "name,cell,graph,placement,protocol,engine,trials,win_outcome,wins,"
         "win_freq,wilson95_lo,wilson95_hi,steps_mean,steps_median,steps_p95,"
         "cap_hits,outcomes\n";
  for (const CellResult& cell : cells) {
    const Summary& s = cell.summary;
    out << cell.spec.name << "," << cell_label(cell) << ","
        << cell.spec.graph.label() << "," << cell.spec.placement.label() << ","
        << (cell.spec.protocol_file.empty() ? cell.spec.protocol
                                            : cell.spec.protocol_file)
        << "," << cell.spec.engine << "," << s.trials << "," << s.win_outcome
        << "," << s.wins << ",";
    if (s.win_interval)
      out << s.win_interval->freq << "," << s.win_interval->lo << ","
          << s.win_interval->hi;
    else
      out << ",,";
    out << "," << s.steps_mean << "," << s.steps_median << "," << s.steps_p95
        << "," << s.cap_hits << ",";
    bool first = true;
    for (const auto& [label, count] : s.outcome_counts) {
      if (!first) out << "|";
      out << label << ":" << count;
      first = false;
    }
    out << "\n";
  }
}

// Long-format variant for plotting tools: one (cell, metric, value) row per
// metric.
inline void write_plot_data(std::ostream& out,
                            const std::vector<CellResult>& cells) {
  out << "name,cell,metric,value\n";
  for (const CellResult& cell : cells) {
    const Summary& s = cell.summary;
    const std::string label = cell_label(cell);
    const auto row = [&](const std::string& metric, double value) {
      out << cell.spec.name << "," << label << "," << metric << "," << value
          << "\n";
    };
    if (s.win_interval) {
      row("win_freq", s.win_interval->freq);
      row("wilson95_lo", s.win_interval->lo);
      row("wilson95_hi", s.win_interval->hi);
    }
    row("steps_mean", s.steps_mean);
    row("steps_median", s.steps_median);
    row("steps_p95", s.steps_p95);
    row("cap_hits", static_cast<double>(s.cap_hits));
  }
}

// ---------------------------------------------------------------------------
// Bundled presets. The files under presets/ are these specs serialized; a
// test keeps them in sync.

inline SweepSpec builtin_preset(const std::string& name) {
  SweepSpec sw;
  ExperimentSpec& base = sw.base;
  base.name = name;
  if (name == "line-lemma") {
    base.graph.family = "line";
    base.graph.n = 2;
    base.placement.mode = "preset";
    base.placement.preset = "line-endpoint";
    base.trials = 100000;
    base.seed = 9001;
    base.win_outcome = "g";
    sw.axes.push_back({{"graph.n"}, {{2}, {3}, {5}, {8}}});
    return sw;
  }
  if (name == "clique-robustness") {
    base.graph.family = "clique";
    base.engine = "aggregated";
    base.placement.mode = "counts";
    base.trials = 10000;
    base.seed = 9002;
    base.win_outcome = "r";
    sw.axes.push_back({{"graph.n", "placement.r", "placement.g"},
                       {{20, 2, 18}, {50, 5, 45}, {100, 10, 90},
                        {200, 20, 180}}});
    return sw;
  }
  if (name == "lollipop-failure") {
    base.graph.family = "lollipop";
    base.graph.bridge = "undirected";
    base.placement.mode = "preset";
    base.placement.preset = "lollipop-adversarial";
    base.engine = "skip-null";
    base.trials = 2000;
    base.seed = 9003;
    base.win_outcome = "g";
    sw.axes.push_back(
        {{"graph.n1", "graph.n2"}, {{16, 48}, {32, 96}, {64, 192}}});
    return sw;
  }
  if (name == "two-clique-time") {
    base.graph.family = "two-cliques";
    base.placement.mode = "preset";
    base.placement.preset = "two-clique-split";
    base.engine = "skip-null";
    base.trials = 500;
    base.seed = 9004;
    base.max_steps = 100000000;
    base.win_outcome = "g";
    sw.axes.push_back(
        {{"graph.n1", "graph.n2"}, {{6, 6}, {8, 8}, {10, 10}, {12, 12}}});
    return sw;
  }
  if (name == "random-placement") {
    base.graph.family = "cycle-chords";
    base.graph.n = 9;
    base.graph.skip = 3;
    base.placement.mode = "random";
    base.placement.r = 3;
    base.placement.g = 6;
    base.trials = 20000;
    base.seed = 9005;
    base.win_outcome = "g";
    return sw;
  }
  if (name == "ambassador-time") {
    base.protocol = "ambassador";
    base.graph.family = "clique";
    base.placement.mode = "counts";
    base.engine = "skip-null";
    base.trials = 1000;
    base.seed = 9006;
    base.win_outcome = "g";
    sw.axes.push_back({{"graph.n", "placement.r", "placement.g"},
                       {{32, 8, 24}, {64, 16, 48}, {128, 32, 96}}});
    return sw;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "line-lemma",      "clique-robustness", "lollipop-failure",
      "two-clique-time", "random-placement",  "ambassador-time"};
  return names;
}

}  // namespace popmaj
