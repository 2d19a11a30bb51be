#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "popmaj/engine.hpp"
#include "popmaj/graph.hpp"
#include "popmaj/protocol.hpp"

namespace popmaj {

// Exhaustive analysis of the reachable configuration space. "Stably
// computes" is interpreted operationally: under the probabilistic (hence
// fair) scheduler a run eventually enters a terminal strongly connected
// component of the configuration graph and visits all of it, so the
// protocol stably computes the majority from c0 exactly when every
// terminal component consists of correct-consensus configurations.

inline constexpr std::uint32_t kNoNode = 0xFFFFFFFFu;

struct ConfigGraph {
  std::uint32_t vertices = 0;       // interaction graph size
  std::uint32_t state_count = 0;    // |Q|
  std::vector<std::uint64_t> codes;
  std::vector<std::vector<std::uint32_t>> adj;  // deduplicated successors
  std::vector<std::uint32_t> parent_node;       // BFS tree, kNoNode at root
  std::vector<std::uint32_t> parent_arc;        // arc index used at discovery
  std::vector<std::int16_t> consensus;          // output index, -1 if none
};

inline std::uint64_t encode_config(const Configuration& c,
                                   std::uint32_t state_count) {
  std::uint64_t code = 0;
  for (std::size_t v = c.states.size(); v-- > 0;)
    code = code * state_count + c.states[v];
  return code;
}

inline Configuration decode_config(std::uint64_t code, std::uint32_t n,
                                   std::uint32_t state_count) {
  Configuration c;
  c.states.resize(n);
  for (std::uint32_t v = 0; v < n; ++v) {
    c.states[v] = static_cast<StateId>(code % state_count);
    code /= state_count;
  }
  return c;
}

inline ConfigGraph explore(const InteractionGraph& g, const Protocol& p,
                           const Configuration& c0,
                           std::uint64_t node_limit = 5'000'000) {
  const std::uint32_t n = g.vertex_count();
  if (c0.size() != n)
    throw std::invalid_argument("configuration size differs from graph");
  const auto q = static_cast<std::uint32_t>(p.size());
  double bits = 0;
  for (std::uint32_t v = 0; v < n; ++v) bits += std::log2(double(q));
  if (bits > 63)
    throw std::invalid_argument("state space exceeds the 64-bit encoding");

  ConfigGraph cg;
  cg.vertices = n;
  cg.state_count = q;
  std::unordered_map<std::uint64_t, std::uint32_t> index;
  const auto consensus_index = [&](const Configuration& c) -> std::int16_t {
    const std::uint8_t out = p.output_map[c.states[0]];
    for (StateId s : c.states)
      if (p.output_map[s] != out) return -1;
    return static_cast<std::int16_t>(out);
  };
  const auto add_node = [&](std::uint64_t code, const Configuration& c,
                            std::uint32_t parent,
                            std::uint32_t arc) -> std::uint32_t {
    if (cg.codes.size() >= node_limit)
      throw std::runtime_error("configuration closure exceeds node limit");
    const auto id = static_cast<std::uint32_t>(cg.codes.size());
    index.emplace(code, id);
    cg.codes.push_back(code);
    cg.adj.emplace_back();
    cg.parent_node.push_back(parent);
    cg.parent_arc.push_back(arc);
    cg.consensus.push_back(consensus_index(c));
    return id;
  };

  const std::uint64_t root = encode_config(c0, q);
  add_node(root, c0, kNoNode, kNoNode);
  for (std::uint32_t id = 0; id < cg.codes.size(); ++id) {
    const Configuration base = decode_config(cg.codes[id], n, q);
    for (std::uint32_t a = 0; a < g.arcs().size(); ++a) {
      const Arc arc = g.arcs()[a];
      const StateId qa = base[arc.tail];
      const StateId qb = base[arc.head];
      const auto [ra, rb] = p.delta[static_cast<std::size_t>(qa) * q + qb];
      if (ra == qa && rb == qb) continue;
      Configuration succ = base;
      succ[arc.tail] = ra;
      succ[arc.head] = rb;
      const std::uint64_t code = encode_config(succ, q);
      auto it = index.find(code);
      const std::uint32_t succ_id =
          it != index.end() ? it->second : add_node(code, succ, id, a);
      cg.adj[id].push_back(succ_id);
    }
    auto& out = cg.adj[id];
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }
  return cg;
}

enum class ComponentClass { all_correct, all_wrong, mixed };

inline std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::all_correct: return "all-correct";
    case ComponentClass::all_wrong: return "all-wrong";
    case ComponentClass::mixed: return "mixed";
  }
  throw std::invalid_argument("bad component class");
}

struct TerminalComponent {
  std::vector<std::uint32_t> members;
  ComponentClass cls = ComponentClass::mixed;
};

struct ComponentAnalysis {
  std::vector<std::uint32_t> component_of;
  std::uint32_t component_count = 0;
  std::vector<TerminalComponent> terminals;
};

// Tarjan's algorithm, iterative. Terminal components have no edge leaving
// them in the condensation; each is classified against the expected output.
inline ComponentAnalysis terminal_components(const ConfigGraph& cg,
                                             std::uint8_t correct_output) {
  const auto n = static_cast<std::uint32_t>(cg.codes.size());
  ComponentAnalysis res;
  res.component_of.assign(n, kNoNode);
  std::vector<std::uint32_t> order(n, kNoNode), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_order = 0;

  struct Frame {
    std::uint32_t node;
    std::uint32_t child = 0;
  };
  std::vector<Frame> frames;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (order[start] != kNoNode) continue;
    frames.push_back({start});
    while (!frames.empty()) {
      Frame& f = frames.back();
      const std::uint32_t v = f.node;
      if (f.child == 0) {
        order[v] = low[v] = next_order++;
        stack.push_back(v);
        on_stack[v] = 1;
      }
      bool descended = false;
      while (f.child < cg.adj[v].size()) {
        const std::uint32_t w = cg.adj[v][f.child++];
        if (order[w] == kNoNode) {
          frames.push_back({w});
          descended = true;
          break;
        }
        if (on_stack[w]) low[v] = std::min(low[v], order[w]);
      }
      if (descended) continue;
      if (low[v] == order[v]) {
        const std::uint32_t comp = res.component_count++;
        while (true) {
          const std::uint32_t w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          res.component_of[w] = comp;
          if (w == v) break;
        }
      }
      frames.pop_back();
      if (!frames.empty()) {
        const std::uint32_t parent = frames.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::vector<char> terminal(res.component_count, 1);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w : cg.adj[v])
      if (res.component_of[v] != res.component_of[w])
        terminal[res.component_of[v]] = 0;

  std::vector<std::vector<std::uint32_t>> members(res.component_count);
  for (std::uint32_t v = 0; v < n; ++v)
    members[res.component_of[v]].push_back(v);
  for (std::uint32_t comp = 0; comp < res.component_count; ++comp) {
    if (!terminal[comp]) continue;
    TerminalComponent tc;
    tc.members = members[comp];
    bool all_correct = true;
    bool all_same_wrong = true;
    std::int16_t wrong_value = -1;
    for (std::uint32_t v : tc.members) {
      const std::int16_t out = cg.consensus[v];
      if (out != correct_output) all_correct = false;
      if (out < 0 || out == correct_output) {
        all_same_wrong = false;
      } else if (wrong_value == -1) {
        wrong_value = out;
      } else if (wrong_value != out) {
        all_same_wrong = false;
      }
    }
    tc.cls = all_correct ? ComponentClass::all_correct
             : all_same_wrong ? ComponentClass::all_wrong
                              : ComponentClass::mixed;
    res.terminals.push_back(std::move(tc));
  }
  return res;
}

struct MajorityVerdict {
  bool pass = false;
  std::string majority;
  std::uint64_t explored_nodes = 0;
  // On failure: a shortest interaction sequence from c0 into a terminal
  // component that is not all-correct, and that component's class.
  std::vector<Arc> witness;
  std::optional<ComponentClass> violation;
};

inline MajorityVerdict stably_computes_majority(
    const InteractionGraph& g, const Protocol& p, const Configuration& c0,
    std::uint64_t node_limit = 5'000'000) {
  std::vector<std::uint32_t> output_counts(p.outputs.size(), 0);
  for (StateId q : c0.states) ++output_counts[p.output_map[q]];
  std::uint32_t best = 0;
  bool tie = false;
  for (std::uint32_t y = 1; y < output_counts.size(); ++y) {
    if (output_counts[y] > output_counts[best]) {
      best = y;
      tie = false;
    } else if (output_counts[y] == output_counts[best]) {
      tie = true;
    }
  }
  if (tie)
    throw std::domain_error("initial configuration has no strict majority");

  const ConfigGraph cg = explore(g, p, c0, node_limit);
  const ComponentAnalysis comps =
      terminal_components(cg, static_cast<std::uint8_t>(best));

  MajorityVerdict verdict;
  verdict.majority = p.outputs[best];
  verdict.explored_nodes = cg.codes.size();
  std::vector<std::optional<ComponentClass>> violating(comps.component_count);
  for (const TerminalComponent& tc : comps.terminals)
    if (tc.cls != ComponentClass::all_correct)
      for (std::uint32_t v : tc.members)
        violating[comps.component_of[v]] = tc.cls;
  std::uint32_t target = kNoNode;
  for (std::uint32_t v = 0; v < cg.codes.size(); ++v) {
    if (violating[comps.component_of[v]]) {
      target = v;  // BFS discovery order, so the first hit is shallowest
      break;
    }
  }
  if (target == kNoNode) {
    verdict.pass = true;
    return verdict;
  }
  verdict.pass = false;
  verdict.violation = violating[comps.component_of[target]];
  for (std::uint32_t v = target; cg.parent_node[v] != kNoNode;
       v = cg.parent_node[v])
    verdict.witness.push_back(g.arcs()[cg.parent_arc[v]]);
  std::reverse(verdict.witness.begin(), verdict.witness.end());
  return verdict;
}

// All connected undirected labeled graphs on n vertices, as symmetric arc
// sets. Sizes grow as 1, 4, 38, 728 for n = 2..5.
inline std::vector<InteractionGraph> connected_undirected_graphs(
    std::uint32_t n) {
  if (n < 2 || n > 6)
    throw std::invalid_argument("enumeration supported for 2 <= n <= 6");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
  std::vector<InteractionGraph> graphs;
  for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
    std::vector<std::uint32_t> root(n);
    for (std::uint32_t v = 0; v < n; ++v) root[v] = v;
    const auto find = [&](std::uint32_t v) {
      while (root[v] != v) v = root[v] = root[root[v]];
      return v;
    };
    std::vector<Arc> arcs;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (!(mask & (1u << e))) continue;
      arcs.push_back({pairs[e].first, pairs[e].second});
      arcs.push_back({pairs[e].second, pairs[e].first});
      root[find(pairs[e].first)] = find(pairs[e].second);
    }
    bool connected = true;
    for (std::uint32_t v = 0; v < n; ++v)
      if (find(v) != find(0)) connected = false;
    if (connected) graphs.emplace_back(n, std::move(arcs));
  }
  return graphs;
}

}  // namespace popmaj
