#include "popmaj/verifier.hpp"

#include <vector>

#include <gtest/gtest.h>

#include "popmaj/engine.hpp"
#include "popmaj/graph.hpp"
#include "popmaj/protocol.hpp"
#include "popmaj/scheduler.hpp"

namespace popmaj {
namespace {

Configuration config_of(const Protocol& p,
                        const std::vector<std::string>& names) {
  Configuration c;
  for (const auto& s : names) c.states.push_back(p.state_id(s));
  return c;
}

// Two states that swap on every interaction: the whole reachable set is one
// oscillating terminal component without consensus.
Protocol swap_protocol() {
  Protocol p;
  p.name = "swap";
  p.states = {"a", "z"};
  p.inputs = {"a", "z"};
  p.input_map = {0, 1};
  p.outputs = {"a", "z"};
  p.output_map = {0, 1};
  detail::init_identity_delta(p);
  detail::set_delta(p, "a", "z", "z", "a");
  detail::set_delta(p, "z", "a", "a", "z");
  return p;
}

TEST(Verifier, EncodeDecodeRoundTrip) {
  EXPECT_EQ(encode_config({{2, 1, 0}}, 3), 5u);
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Configuration c;
    for (int v = 0; v < 7; ++v)
      c.states.push_back(static_cast<StateId>(rng.bounded(4)));
    EXPECT_EQ(decode_config(encode_config(c, 4), 7, 4), c);
  }
}

TEST(Verifier, LineTwoClosure) {
  const Protocol p = three_state_protocol();
  const InteractionGraph g = line(2);
  const ConfigGraph cg = explore(g, p, config_of(p, {"g", "r"}));
  EXPECT_EQ(cg.codes.size(), 5u);
  const ComponentAnalysis comps = terminal_components(cg, 0);  // correct: g
  ASSERT_EQ(comps.terminals.size(), 2u);
  int correct = 0, wrong = 0;
  for (const TerminalComponent& tc : comps.terminals) {
    ASSERT_EQ(tc.members.size(), 1u);
    const Configuration c = decode_config(cg.codes[tc.members[0]], 2, 3);
    if (tc.cls == ComponentClass::all_correct) {
      ++correct;
      EXPECT_EQ(c, config_of(p, {"g", "g"}));
    } else {
      ++wrong;
      EXPECT_EQ(tc.cls, ComponentClass::all_wrong);
      EXPECT_EQ(c, config_of(p, {"r", "r"}));
    }
  }
  EXPECT_EQ(correct, 1);
  EXPECT_EQ(wrong, 1);
}

TEST(Verifier, ThreeStateFailsOnLineThree) {
  const Protocol p = three_state_protocol();
  const InteractionGraph g = line(3);
  const Configuration c0 = config_of(p, {"g", "r", "r"});
  const MajorityVerdict v = stably_computes_majority(g, p, c0);
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.majority, "r");
  ASSERT_TRUE(v.violation.has_value());
  EXPECT_EQ(*v.violation, ComponentClass::all_wrong);
  ASSERT_FALSE(v.witness.empty());

  Configuration c = c0;
  for (const Arc& a : v.witness) step(c, a, p);
  EXPECT_EQ(c, config_of(p, {"g", "g", "g"}));

  // The witness is not a measure-zero artifact: the scheduler finds the
  // wrong consensus on its own.
  int all_green = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Scheduler sched = Scheduler::probabilistic(seed);
    const RunResult res = run(g, p, c0, sched);
    if (res.outcome == RunResult::Outcome::absorbed && res.value == "g")
      ++all_green;
  }
  EXPECT_GE(all_green, 1);
}

TEST(Verifier, ThreeStateCliquePassesOnlyWhenSafe) {
  const Protocol p = three_state_protocol();
  const InteractionGraph g = clique(3);
  const MajorityVerdict mono =
      stably_computes_majority(g, p, config_of(p, {"g", "g", "g"}));
  EXPECT_TRUE(mono.pass);
  EXPECT_EQ(mono.majority, "g");
  EXPECT_EQ(mono.explored_nodes, 1u);
  const MajorityVerdict mixed =
      stably_computes_majority(g, p, config_of(p, {"g", "r", "r"}));
  EXPECT_FALSE(mixed.pass);
}

TEST(Verifier, AmbassadorPassesOnSmallClique) {
  const Protocol p = ambassador_protocol();
  const InteractionGraph g = clique(3);
  const MajorityVerdict v =
      stably_computes_majority(g, p, config_of(p, {"r1", "g1", "g1"}));
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.majority, "g");
  EXPECT_TRUE(v.witness.empty());
}

TEST(Verifier, TieThrows) {
  const Protocol p = ambassador_protocol();
  const InteractionGraph g = clique(2);
  EXPECT_THROW(
      stably_computes_majority(g, p, config_of(p, {"g1", "r1"})),
      std::domain_error);
}

TEST(Verifier, MixedTerminalComponent) {
  const Protocol p = swap_protocol();
  const InteractionGraph g = line(3);
  const MajorityVerdict v =
      stably_computes_majority(g, p, config_of(p, {"a", "a", "z"}));
  EXPECT_FALSE(v.pass);
  EXPECT_EQ(v.majority, "a");
  ASSERT_TRUE(v.violation.has_value());
  EXPECT_EQ(*v.violation, ComponentClass::mixed);
  // The root itself sits inside the oscillating component.
  EXPECT_TRUE(v.witness.empty());
}

TEST(Verifier, NodeLimit) {
  const Protocol p = three_state_protocol();
  const InteractionGraph g = clique(3);
  EXPECT_THROW(
      stably_computes_majority(g, p, config_of(p, {"g", "r", "r"}), 3),
      std::runtime_error);
}

TEST(Verifier, EncodingWidthGuard) {
  const Protocol p = three_state_protocol();
  const InteractionGraph g = clique(44);
  Configuration c0;
  c0.states.assign(44, p.state_id("g"));
  c0[0] = p.state_id("r");
  EXPECT_THROW(explore(g, p, c0), std::invalid_argument);
}

TEST(Verifier, ConfigSizeMismatch) {
  const Protocol p = three_state_protocol();
  EXPECT_THROW(explore(clique(3), p, config_of(p, {"g", "r"})),
               std::invalid_argument);
}

TEST(Verifier, ConnectedGraphCounts) {
  EXPECT_EQ(connected_undirected_graphs(2).size(), 1u);
  EXPECT_EQ(connected_undirected_graphs(3).size(), 4u);
  EXPECT_EQ(connected_undirected_graphs(4).size(), 38u);
  EXPECT_EQ(connected_undirected_graphs(5).size(), 728u);
  EXPECT_THROW(connected_undirected_graphs(7), std::invalid_argument);
  for (const InteractionGraph& g : connected_undirected_graphs(4)) {
    const Connectivity c = connectivity(g);
    EXPECT_TRUE(c.strongly);
  }
}

}  // namespace
}  // namespace popmaj
