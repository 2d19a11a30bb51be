#include "popmaj/experiment.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#ifndef POPMAJ_PRESET_DIR
#error "POPMAJ_PRESET_DIR must point at the checked-in preset files"
#endif

namespace popmaj {
namespace {

using nlohmann::json;

TEST(Experiment, GraphSpecBuildAndLabel) {
  GraphSpec clique8{"clique", 8};
  EXPECT_EQ(clique8.label(), "clique(8)");
  EXPECT_EQ(clique8.build().vertex_count(), 8u);

  GraphSpec lol;
  lol.family = "lollipop";
  lol.n1 = 64;
  lol.n2 = 192;
  EXPECT_EQ(lol.label(), "lollipop(64,192,undirected)");
  EXPECT_EQ(lol.build().vertex_count(), 256u);

  GraphSpec chords;
  chords.family = "cycle-chords";
  chords.n = 9;
  EXPECT_EQ(chords.label(), "cycle-chords(9,3)");
  EXPECT_EQ(chords.build().arcs().size(), 18u);

  GraphSpec bad;
  bad.family = "torus";
  EXPECT_THROW(bad.build(), std::invalid_argument);
}

TEST(Experiment, GraphSpecFromFile) {
  const std::string path = testing::TempDir() + "popmaj_graph_spec.edges";
  {
    std::ofstream out(path);
    out << to_edge_list(clique(3));
  }
  GraphSpec gs;
  gs.family = "file";
  gs.path = path;
  const InteractionGraph g = gs.build();
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.arcs().size(), 6u);
  EXPECT_EQ(gs.label(), "file(" + path + ")");
  gs.path = path + ".missing";
  EXPECT_THROW(gs.build(), std::runtime_error);
}

TEST(Experiment, PlacementSpecResolve) {
  GraphSpec line4{"line", 4};
  PlacementSpec ps;
  ps.mode = "preset";
  ps.preset = "line-endpoint";
  const Placement pl = ps.resolve(line4);
  EXPECT_EQ(pl.symbols, (std::vector<std::string>{"g", "r", "r", "r"}));
  EXPECT_EQ(ps.label(), "preset(line-endpoint)");

  ps.preset = "nonesuch";
  EXPECT_THROW(ps.resolve(line4), std::invalid_argument);
  ps.mode = "nonesuch";
  EXPECT_THROW(ps.resolve(line4), std::invalid_argument);

  PlacementSpec counts;
  counts.mode = "counts";
  counts.r = 2;
  counts.g = 6;
  EXPECT_EQ(counts.resolve(line4).reds, 2u);
  EXPECT_EQ(counts.label(), "counts(r=2,g=6)");
}

TEST(Experiment, SpecJsonRoundTrip) {
  ExperimentSpec spec;
  spec.name = "demo";
  spec.graph.family = "lollipop";
  spec.graph.n1 = 8;
  spec.graph.n2 = 4;
  spec.graph.bridge = "directed-v-to-u";
  spec.protocol = "ambassador";
  spec.placement.mode = "preset";
  spec.placement.preset = "lollipop-adversarial";
  spec.trials = 42;
  spec.seed = 7;
  spec.max_steps = 1234;
  spec.engine = "skip-null";
  spec.record_blank = true;
  spec.record_contest = true;
  spec.series_stride = 10;
  spec.record_trace = true;
  spec.win_outcome = "r";
  spec.threads = 2;

  const ExperimentSpec back = experiment_from_json(to_json(spec));
  EXPECT_EQ(to_json(back), to_json(spec));
  EXPECT_EQ(back.graph.bridge, "directed-v-to-u");
  EXPECT_EQ(back.placement.preset, "lollipop-adversarial");
  EXPECT_EQ(back.max_steps, 1234u);
  EXPECT_TRUE(back.record_blank);
  EXPECT_EQ(back.series_stride, 10u);
  EXPECT_TRUE(back.record_trace);
  EXPECT_EQ(back.threads, 2u);

  ExperimentSpec file_spec;
  file_spec.graph.family = "clique";
  file_spec.graph.n = 4;
  file_spec.protocol_file = "custom.json";
  file_spec.trials = 1;
  const ExperimentSpec file_back = experiment_from_json(to_json(file_spec));
  EXPECT_EQ(file_back.protocol_file, "custom.json");
}

ExperimentSpec small_spec() {
  ExperimentSpec spec;
  spec.name = "small";
  spec.graph.family = "clique";
  spec.graph.n = 6;
  spec.placement.mode = "counts";
  spec.placement.r = 2;
  spec.placement.g = 4;
  spec.trials = 60;
  spec.seed = 321;
  spec.threads = 1;
  return spec;
}

std::string records_string(const CellResult& cell) {
  std::ostringstream out;
  write_records(out, cell);
  return out.str();
}

TEST(Experiment, SimulateIsDeterministic) {
  const ExperimentSpec spec = small_spec();
  const CellResult a = simulate(spec);
  const CellResult b = simulate(spec);
  EXPECT_EQ(records_string(a), records_string(b));
  EXPECT_EQ(a.records.size(), 60u);
}

TEST(Experiment, ThreadCountDoesNotChangeRecords) {
  ExperimentSpec spec = small_spec();
  const CellResult serial = simulate(spec);
  spec.threads = 3;
  const CellResult parallel = simulate(spec);
  EXPECT_EQ(records_string(serial), records_string(parallel));
}

TEST(Experiment, SummaryIsConsistent) {
  const CellResult cell = simulate(small_spec());
  const Summary& s = cell.summary;
  EXPECT_EQ(s.trials, 60u);
  std::uint64_t total = 0;
  for (const auto& [label, count] : s.outcome_counts) total += count;
  EXPECT_EQ(total, 60u);
  EXPECT_EQ(s.wins, s.outcome_counts.count("g") ? s.outcome_counts.at("g") : 0);
  ASSERT_TRUE(s.win_interval.has_value());
  EXPECT_DOUBLE_EQ(s.win_interval->freq, double(s.wins) / 60.0);
  std::vector<double> steps;
  for (const RunRecord& r : cell.records) {
    EXPECT_EQ(r.seed, trial_seed(321, r.trial));
    steps.push_back(double(r.steps_total));
  }
  EXPECT_DOUBLE_EQ(s.steps_mean, mean(steps));
  EXPECT_DOUBLE_EQ(s.steps_median, median(steps));
  EXPECT_DOUBLE_EQ(s.steps_p95, quantile(steps, 0.95));
  EXPECT_EQ(s.cap_hits, 0u);
}

TEST(Experiment, StepCapOutcome) {
  ExperimentSpec spec = small_spec();
  spec.trials = 5;
  spec.max_steps = 1;
  const CellResult cell = simulate(spec);
  for (const RunRecord& r : cell.records) EXPECT_EQ(r.outcome, "step-cap");
  EXPECT_EQ(cell.summary.cap_hits, 5u);
  EXPECT_EQ(cell.summary.wins, 0u);
}

TEST(Experiment, ZeroTrials) {
  ExperimentSpec spec = small_spec();
  spec.trials = 0;
  const CellResult cell = simulate(spec);
  EXPECT_TRUE(cell.records.empty());
  EXPECT_EQ(cell.summary.trials, 0u);
  EXPECT_FALSE(cell.summary.win_interval.has_value());
}

TEST(Experiment, RecordsCarryTraces) {
  ExperimentSpec spec = small_spec();
  spec.trials = 3;
  spec.record_trace = true;
  const CellResult cell = simulate(spec);
  std::istringstream lines(records_string(cell));
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const json j = json::parse(line);
    ASSERT_TRUE(j.contains("trace"));
    EXPECT_EQ(j.at("trace").size(), j.at("steps_total").get<std::uint64_t>());
    EXPECT_EQ(j.at("rng").get<std::string>(), std::string(kRngAlgorithmId));
    ++count;
  }
  EXPECT_EQ(count, 3u);
}

TEST(Experiment, AggregatedEngineValidation) {
  ExperimentSpec spec = small_spec();
  spec.engine = "aggregated";
  EXPECT_NO_THROW(simulate(spec));
  spec.graph.family = "line";
  EXPECT_THROW(simulate(spec), std::invalid_argument);
  spec.graph.family = "clique";
  spec.protocol = "ambassador";
  EXPECT_THROW(simulate(spec), std::invalid_argument);
  spec.protocol = "three-state";
  spec.placement.mode = "preset";
  spec.placement.preset = "line-endpoint";
  EXPECT_THROW(simulate(spec), std::invalid_argument);
}

TEST(Experiment, TrialErrorsPropagateFromWorkers) {
  ExperimentSpec spec = small_spec();
  spec.placement.g = 5;  // counts no longer sum to n
  spec.threads = 3;
  EXPECT_THROW(simulate(spec), std::invalid_argument);
}

TEST(Experiment, SweepGridOrderAndCells) {
  SweepSpec sw;
  sw.base.name = "grid";
  sw.base.graph.family = "line";
  sw.base.placement.mode = "preset";
  sw.base.placement.preset = "line-endpoint";
  sw.base.trials = 4;
  sw.base.seed = 5;
  sw.base.threads = 1;
  sw.axes.push_back({{"graph.n"}, {{2}, {3}}});
  sw.axes.push_back({{"trials"}, {{4}, {6}}});
  const std::vector<CellResult> cells = sweep(sw);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].spec.graph.n, 2u);
  EXPECT_EQ(cells[0].summary.trials, 4u);
  EXPECT_EQ(cells[1].spec.graph.n, 2u);
  EXPECT_EQ(cells[1].summary.trials, 6u);
  EXPECT_EQ(cells[2].spec.graph.n, 3u);
  EXPECT_EQ(cells[2].summary.trials, 4u);
  EXPECT_EQ(cells[3].spec.graph.n, 3u);
  EXPECT_EQ(cells[3].summary.trials, 6u);
  EXPECT_EQ(cell_label(cells[3]), "graph.n=3;trials=6");
  EXPECT_EQ(cells[0].cell,
            (std::vector<std::pair<std::string, double>>{{"graph.n", 2},
                                                         {"trials", 4}}));
}

TEST(Experiment, SweepZippedAxis) {
  SweepSpec sw;
  sw.base.name = "zip";
  sw.base.graph.family = "two-cliques";
  sw.base.placement.mode = "preset";
  sw.base.placement.preset = "two-clique-split";
  sw.base.trials = 2;
  sw.base.seed = 6;
  sw.base.threads = 1;
  sw.axes.push_back({{"graph.n1", "graph.n2"}, {{3, 2}, {4, 3}}});
  const std::vector<CellResult> cells = sweep(sw);
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_EQ(cells[0].spec.graph.n1, 3u);
  EXPECT_EQ(cells[0].spec.graph.n2, 2u);
  EXPECT_EQ(cells[1].spec.graph.n1, 4u);
  EXPECT_EQ(cells[1].spec.graph.n2, 3u);
}

TEST(Experiment, SweepWithoutAxesMatchesSimulate) {
  SweepSpec sw;
  sw.base = small_spec();
  const std::vector<CellResult> cells = sweep(sw);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_TRUE(cells[0].cell.empty());
  EXPECT_EQ(records_string(cells[0]), records_string(simulate(sw.base)));
}

TEST(Experiment, SweepJsonRoundTripAndValidation) {
  SweepSpec sw;
  sw.base = small_spec();
  sw.axes.push_back({{"graph.n", "placement.g"}, {{6, 4}, {8, 6}}});
  const SweepSpec back = sweep_from_json(to_json(sw));
  EXPECT_EQ(to_json(back), to_json(sw));

  json bad = to_json(sw);
  bad["axes"][0]["values"] = {{6}};
  EXPECT_THROW(sweep_from_json(bad), std::invalid_argument);

  ExperimentSpec spec = small_spec();
  EXPECT_THROW(set_parameter(spec, "graph.diameter", 3), std::invalid_argument);
  set_parameter(spec, "max_steps", 99);
  EXPECT_EQ(spec.max_steps, 99u);
}

TEST(Experiment, CsvAndPlotData) {
  SweepSpec sw;
  sw.base = small_spec();
  sw.base.trials = 8;
  sw.axes.push_back({{"graph.n", "placement.g"}, {{6, 4}, {8, 6}}});
  const std::vector<CellResult> cells = sweep(sw);
  std::ostringstream csv;
  write_csv(csv, cells);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header,
            "name,cell,graph,placement,protocol,engine,trials,win_outcome,"
            "wins,win_freq,wilson95_lo,wilson95_hi,steps_mean,steps_median,"
            "steps_p95,cap_hits,outcomes");
  std::size_t rows = 0;
  std::string row;
  while (std::getline(lines, row)) ++rows;
  EXPECT_EQ(rows, 2u);

  std::ostringstream plot;
  write_plot_data(plot, cells);
  EXPECT_NE(plot.str().find("name,cell,metric,value"), std::string::npos);
  EXPECT_NE(plot.str().find("win_freq"), std::string::npos);
}

TEST(Experiment, BuiltinPresetShapes) {
  EXPECT_EQ(preset_names().size(), 6u);
  const SweepSpec line_lemma = builtin_preset("line-lemma");
  ASSERT_EQ(line_lemma.axes.size(), 1u);
  EXPECT_EQ(line_lemma.axes[0].values.size(), 4u);
  EXPECT_EQ(line_lemma.base.trials, 100000u);
  const SweepSpec amb = builtin_preset("ambassador-time");
  EXPECT_EQ(amb.base.protocol, "ambassador");
  EXPECT_EQ(amb.base.engine, "skip-null");
  EXPECT_THROW(builtin_preset("nonesuch"), std::invalid_argument);
}

TEST(Experiment, PresetFilesMatchBuiltins) {
  for (const std::string& name : preset_names()) {
    const std::string path =
        std::string(POPMAJ_PRESET_DIR) + "/" + name + ".json";
    const json on_disk = json::parse(slurp_file(path));
    EXPECT_EQ(on_disk, to_json(builtin_preset(name))) << name;
  }
}

}  // namespace
}  // namespace popmaj
