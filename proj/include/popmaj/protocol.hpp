#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace popmaj {

using StateId = std::uint8_t;

enum class ProtocolFamily { three_state, ambassador, custom };

// A population protocol (Q, X, iota, Y, gamma, delta). States, inputs and
// outputs are named; the hot paths work on dense StateId indices. delta is
// total and indexed by (initiator, responder).
struct Protocol {
  std::string name;
  std::vector<std::string> states;        // Q
  std::vector<std::string> inputs;        // X
  std::vector<StateId> input_map;         // iota, by input index
  std::vector<std::string> outputs;       // Y
  std::vector<std::uint8_t> output_map;   // gamma, by state id
  std::vector<std::pair<StateId, StateId>> delta;  // delta[a * |Q| + b]
  ProtocolFamily family = ProtocolFamily::custom;

  std::size_t size() const { return states.size(); }

  StateId state_id(std::string_view s) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == s) return static_cast<StateId>(i);
    throw std::invalid_argument("unknown state: " + std::string(s));
  }

  std::optional<StateId> find_state(std::string_view s) const {
    for (std::size_t i = 0; i < states.size(); ++i)
      if (states[i] == s) return static_cast<StateId>(i);
    return std::nullopt;
  }

  StateId input_state(std::string_view symbol) const {
    for (std::size_t i = 0; i < inputs.size(); ++i)
      if (inputs[i] == symbol) return input_map[i];
    throw std::invalid_argument("unknown input symbol: " + std::string(symbol));
  }

  const std::string& output_of(StateId q) const {
    return outputs[output_map[q]];
  }

  std::pair<StateId, StateId> apply(StateId a, StateId b) const {
    if (a >= size() || b >= size())
      throw std::invalid_argument("state id out of range");
    return delta[static_cast<std::size_t>(a) * size() + b];
  }

  // delta(q1, q2) = (a, b) implies delta(q2, q1) = (b, a) for all pairs.
  bool symmetric() const {
    const std::size_t q = size();
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        const auto [r1, r2] = delta[a * q + b];
        const auto [s1, s2] = delta[b * q + a];
        if (r1 != s2 || r2 != s1) return false;
      }
    }
    return true;
  }
};

// Per-vertex state assignment. Bound to a protocol by construction only;
// callers keep the protocol alongside.
struct Configuration {
  std::vector<StateId> states;

  std::uint32_t size() const { return static_cast<std::uint32_t>(states.size()); }
  StateId operator[](std::uint32_t v) const { return states[v]; }
  StateId& operator[](std::uint32_t v) { return states[v]; }

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

namespace detail {

inline void set_delta(Protocol& p, std::string_view a, std::string_view b,
                      std::string_view ra, std::string_view rb) {
  p.delta[static_cast<std::size_t>(p.state_id(a)) * p.size() + p.state_id(b)] =
      {p.state_id(ra), p.state_id(rb)};
}

inline void init_identity_delta(Protocol& p) {
  const std::size_t q = p.size();
  p.delta.resize(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      p.delta[a * q + b] = {static_cast<StateId>(a), static_cast<StateId>(b)};
}

}  // namespace detail

// Three-state majority protocol.
// Q = {b, g, r}; a colored initiator blanks an opposite-colored responder
// and recolors a blank responder; a blank initiator changes nothing.
// gamma maps the blank state to the green output by convention; experiments
// classify runs by the absorbing configuration itself, never through
// gamma(b).
inline Protocol three_state_protocol() {
  Protocol p;
  p.name = "three-state";
  p.family = ProtocolFamily::three_state;
  p.states = {"b", "g", "r"};
  p.inputs = {"g", "r"};
  p.input_map = {p.state_id("g"), p.state_id("r")};
  p.outputs = {"g", "r"};
  p.output_map = {0, 0, 1};  // b -> g, g -> g, r -> r
  detail::init_identity_delta(p);
  detail::set_delta(p, "g", "r", "g", "b");
  detail::set_delta(p, "r", "g", "r", "b");
  detail::set_delta(p, "g", "b", "g", "g");
  detail::set_delta(p, "r", "b", "r", "r");
  return p;
}

// Four-state ambassador protocol. State (c, i) is written "c0"/"c1": color
// c in {g, r}, ambassador flag i. Every agent starts as an ambassador of its
// input color; opposite-color ambassadors annihilate pairwise, an ambassador
// meeting a plain agent converts it and hops onto it.
inline Protocol ambassador_protocol() {
  Protocol p;
  p.name = "ambassador";
  p.family = ProtocolFamily::ambassador;
  p.states = {"g0", "g1", "r0", "r1"};
  p.inputs = {"g", "r"};
  p.input_map = {p.state_id("g1"), p.state_id("r1")};
  p.outputs = {"g", "r"};
  p.output_map = {0, 0, 1, 1};
  detail::init_identity_delta(p);
  detail::set_delta(p, "g0", "g1", "g1", "g0");
  detail::set_delta(p, "g0", "r1", "r1", "r0");
  detail::set_delta(p, "g1", "g0", "g0", "g1");
  detail::set_delta(p, "g1", "r0", "g0", "g1");
  detail::set_delta(p, "g1", "r1", "g0", "r0");
  detail::set_delta(p, "r0", "g1", "g1", "g0");
  detail::set_delta(p, "r0", "r1", "r1", "r0");
  detail::set_delta(p, "r1", "g0", "r0", "r1");
  detail::set_delta(p, "r1", "g1", "r0", "g0");
  detail::set_delta(p, "r1", "r0", "r0", "r1");
  return p;
}

// The output symbol shared by all vertices, if there is one.
inline std::optional<std::string> consensus_output(const Protocol& p,
                                                   const Configuration& c) {
  if (c.states.empty()) return std::nullopt;
  const std::uint8_t out = p.output_map[c.states[0]];
  for (StateId q : c.states)
    if (p.output_map[q] != out) return std::nullopt;
  return p.outputs[out];
}

struct AmbassadorCounts {
  std::uint32_t red = 0;
  std::uint32_t green = 0;
};

inline AmbassadorCounts ambassador_counts(const Protocol& p,
                                          const Configuration& c) {
  const auto r1 = p.find_state("r1");
  const auto g1 = p.find_state("g1");
  if (!r1 || !g1)
    throw std::invalid_argument("protocol has no ambassador states");
  AmbassadorCounts counts;
  for (StateId q : c.states) {
    if (q == *r1) ++counts.red;
    if (q == *g1) ++counts.green;
  }
  return counts;
}

// JSON protocol table. delta holds all |Q|^2 entries keyed "a,b".
inline nlohmann::json protocol_to_json(const Protocol& p) {
  nlohmann::json j;
  j["name"] = p.name;
  j["states"] = p.states;
  j["inputs"] = p.inputs;
  nlohmann::json imap = nlohmann::json::object();
  for (std::size_t i = 0; i < p.inputs.size(); ++i)
    imap[p.inputs[i]] = p.states[p.input_map[i]];
  j["input_map"] = imap;
  j["outputs"] = p.outputs;
  nlohmann::json omap = nlohmann::json::object();
  for (std::size_t q = 0; q < p.size(); ++q)
    omap[p.states[q]] = p.outputs[p.output_map[q]];
  j["output_map"] = omap;
  nlohmann::json delta = nlohmann::json::object();
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      const auto [ra, rb] = p.delta[a * p.size() + b];
      delta[p.states[a] + "," + p.states[b]] = {p.states[ra], p.states[rb]};
    }
  }
  j["delta"] = delta;
  return j;
}

inline Protocol protocol_from_json(const nlohmann::json& j) {
  Protocol p;
  try {
    p.name = j.value("name", "custom");
    p.states = j.at("states").get<std::vector<std::string>>();
    if (p.states.empty() || p.states.size() > 255)
      throw std::invalid_argument("bad state count");
    p.inputs = j.at("inputs").get<std::vector<std::string>>();
    p.outputs = j.at("outputs").get<std::vector<std::string>>();
    for (const auto& in : p.inputs)
      p.input_map.push_back(
          p.state_id(j.at("input_map").at(in).get<std::string>()));
    for (const auto& st : p.states) {
      const std::string out = j.at("output_map").at(st).get<std::string>();
      bool found = false;
      for (std::size_t y = 0; y < p.outputs.size(); ++y) {
        if (p.outputs[y] == out) {
          p.output_map.push_back(static_cast<std::uint8_t>(y));
          found = true;
          break;
        }
      }
      if (!found) throw std::invalid_argument("unknown output: " + out);
    }
    const auto& delta = j.at("delta");
    p.delta.resize(p.size() * p.size());
    std::size_t filled = 0;
    for (const auto& a : p.states) {
      for (const auto& b : p.states) {
        const std::string key = a + "," + b;
        if (!delta.contains(key))
          throw std::invalid_argument("delta missing entry " + key);
        const auto& entry = delta.at(key);
        if (!entry.is_array() || entry.size() != 2)
          throw std::invalid_argument("delta entry " + key +
                                      " must be a state pair");
        p.delta[static_cast<std::size_t>(p.state_id(a)) * p.size() +
                p.state_id(b)] = {
            p.state_id(entry.at(0).get<std::string>()),
            p.state_id(entry.at(1).get<std::string>())};
        ++filled;
      }
    }
    if (delta.size() != filled)
      throw std::invalid_argument("delta has extra entries");
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad protocol table: ") + e.what());
  }
  const Protocol reference_three = three_state_protocol();
  const Protocol reference_amb = ambassador_protocol();
  if (p.states == reference_three.states && p.delta == reference_three.delta)
    p.family = ProtocolFamily::three_state;
  else if (p.states == reference_amb.states && p.delta == reference_amb.delta)
    p.family = ProtocolFamily::ambassador;
  return p;
}

}  // namespace popmaj
