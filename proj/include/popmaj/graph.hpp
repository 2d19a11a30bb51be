#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace popmaj {

// Interaction graphs are finite directed multigraph-free arc sets. An arc
// (tail, head) means tail may act as initiator on head as responder. An
// undirected edge is represented by the two opposite arcs.

struct Arc {
  std::uint32_t tail = 0;
  std::uint32_t head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class InteractionGraph {
 public:
  InteractionGraph(std::uint32_t n, std::vector<Arc> arcs)
      : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 2) throw std::invalid_argument("graph needs at least 2 vertices");
    if (arcs_.empty()) throw std::invalid_argument("graph has no arcs");
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (const Arc& a : arcs_) {
      if (a.tail >= n_ || a.head >= n_)
        throw std::invalid_argument("arc endpoint out of range");
      if (a.tail == a.head) throw std::invalid_argument("self-loop arc");
      if (!seen.insert({a.tail, a.head}).second)
        throw std::invalid_argument("duplicate arc");
    }
    symmetric_ = true;
    for (const Arc& a : arcs_) {
      if (!seen.count({a.head, a.tail})) {
        symmetric_ = false;
        break;
      }
    }
  }

  std::uint32_t vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }

  // True when the arc set is closed under reversal, i.e. the graph is an
  // undirected graph in disguise.
  bool symmetric_arcs() const { return symmetric_; }

 private:
  std::uint32_t n_;
  std::vector<Arc> arcs_;
  bool symmetric_;
};

namespace detail {

inline void append_clique_arcs(std::vector<Arc>& arcs, std::uint32_t first,
                               std::uint32_t count) {
  for (std::uint32_t i = first; i < first + count; ++i)
    for (std::uint32_t j = first; j < first + count; ++j)
      if (i != j) arcs.push_back({i, j});
}

inline void append_path_arcs(std::vector<Arc>& arcs, std::uint32_t first,
                             std::uint32_t count) {
  for (std::uint32_t i = 0; i + 1 < count; ++i) {
    arcs.push_back({first + i, first + i + 1});
    arcs.push_back({first + i + 1, first + i});
  }
}

}  // namespace detail

// Complete graph on n >= 2 vertices, all n(n-1) ordered arcs.
inline InteractionGraph clique(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("clique needs n >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(std::size_t{n} * (n - 1));
  detail::append_clique_arcs(arcs, 0, n);
  return InteractionGraph(n, std::move(arcs));
}

// Undirected path on m >= 2 vertices 0..m-1.
inline InteractionGraph line(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("line needs m >= 2");
  std::vector<Arc> arcs;
  arcs.reserve(2 * std::size_t{m - 1});
  detail::append_path_arcs(arcs, 0, m);
  return InteractionGraph(m, std::move(arcs));
}

enum class BridgeMode {
  undirected,      // arcs both ways between v and u
  directed_v_to_u, // clique vertex v initiates on line vertex u only
  directed_u_to_v, // line vertex u initiates on clique vertex v only
};

inline BridgeMode bridge_mode_from_string(std::string_view s) {
  if (s == "undirected") return BridgeMode::undirected;
  if (s == "directed-v-to-u") return BridgeMode::directed_v_to_u;
  if (s == "directed-u-to-v") return BridgeMode::directed_u_to_v;
  throw std::invalid_argument("unknown bridge mode: " + std::string(s));
}

inline std::string to_string(BridgeMode m) {
  switch (m) {
    case BridgeMode::undirected: return "undirected";
    case BridgeMode::directed_v_to_u: return "directed-v-to-u";
    case BridgeMode::directed_u_to_v: return "directed-u-to-v";
  }
  throw std::invalid_argument("bad bridge mode");
}

// Clique on vertices 0..n1-1 glued to a path on vertices n1..n1+n2-1.
// The bridge joins v = n1-1 (in the clique) and u = n1 (left end of the
// path); its orientation is selectable.
inline InteractionGraph lollipop(std::uint32_t n1, std::uint32_t n2,
                                 BridgeMode mode = BridgeMode::undirected) {
  if (n1 < 2) throw std::invalid_argument("lollipop needs n1 >= 2");
  if (n2 < 1) throw std::invalid_argument("lollipop needs n2 >= 1");
  const std::uint32_t v = n1 - 1;
  const std::uint32_t u = n1;
  std::vector<Arc> arcs;
  detail::append_clique_arcs(arcs, 0, n1);
  detail::append_path_arcs(arcs, n1, n2);
  switch (mode) {
    case BridgeMode::undirected:
      arcs.push_back({v, u});
      arcs.push_back({u, v});
      break;
    case BridgeMode::directed_v_to_u:
      arcs.push_back({v, u});
      break;
    case BridgeMode::directed_u_to_v:
      arcs.push_back({u, v});
      break;
  }
  return InteractionGraph(n1 + n2, std::move(arcs));
}

// Cliques on 0..n1-1 and n1..n1+n2-1 joined by the undirected bridge
// {n1-1, n1}.
inline InteractionGraph two_cliques_bridged(std::uint32_t n1,
                                            std::uint32_t n2) {
  if (n1 < 2 || n2 < 2)
    throw std::invalid_argument("two_cliques_bridged needs n1, n2 >= 2");
  std::vector<Arc> arcs;
  detail::append_clique_arcs(arcs, 0, n1);
  detail::append_clique_arcs(arcs, n1, n2);
  arcs.push_back({n1 - 1, n1});
  arcs.push_back({n1, n1 - 1});
  return InteractionGraph(n1 + n2, std::move(arcs));
}

// Clique on 0..n1-1 plus a feeder vertex n1 with the single arc (n1, 0).
// The feeder has no incoming arcs, so it can only ever act as initiator.
inline InteractionGraph clique_with_feeder(std::uint32_t n1) {
  if (n1 < 2) throw std::invalid_argument("clique_with_feeder needs n1 >= 2");
  std::vector<Arc> arcs;
  detail::append_clique_arcs(arcs, 0, n1);
  arcs.push_back({n1, 0});
  return InteractionGraph(n1 + 1, std::move(arcs));
}

// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 plus the chord arcs
// (i, (i + skip) mod n). Strongly connected for every skip; used as a fixed
// non-symmetric test graph.
inline InteractionGraph cycle_with_chords(std::uint32_t n,
                                          std::uint32_t skip = 3) {
  if (n < 3) throw std::invalid_argument("cycle_with_chords needs n >= 3");
  if (skip < 2 || skip >= n)
    throw std::invalid_argument("cycle_with_chords needs 2 <= skip < n");
  std::vector<Arc> arcs;
  for (std::uint32_t i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  for (std::uint32_t i = 0; i < n; ++i) arcs.push_back({i, (i + skip) % n});
  return InteractionGraph(n, std::move(arcs));
}

struct Connectivity {
  bool weakly = false;
  bool strongly = false;
};

inline Connectivity connectivity(const InteractionGraph& g) {
  const std::uint32_t n = g.vertex_count();
  std::vector<std::vector<std::uint32_t>> out(n), in(n), both(n);
  for (const Arc& a : g.arcs()) {
    out[a.tail].push_back(a.head);
    in[a.head].push_back(a.tail);
    both[a.tail].push_back(a.head);
    both[a.head].push_back(a.tail);
  }
  auto reaches_all = [n](const std::vector<std::vector<std::uint32_t>>& adj) {
    std::vector<char> seen(n, 0);
    std::queue<std::uint32_t> q;
    q.push(0);
    seen[0] = 1;
    std::uint32_t count = 1;
    while (!q.empty()) {
      const std::uint32_t v = q.front();
      q.pop();
      for (std::uint32_t w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          q.push(w);
        }
      }
    }
    return count == n;
  };
  Connectivity c;
  c.weakly = reaches_all(both);
  c.strongly = c.weakly && reaches_all(out) && reaches_all(in);
  return c;
}

// Plain-text edge list. First relevant line is "n <vertex count>", then one
// arc per line: "a b" for the directed arc (a, b), "a -- b" for both
// directions. '#' starts a comment, blank lines are skipped.
inline InteractionGraph from_edge_list(std::string_view text) {
  std::istringstream stream{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool have_n = false;
  std::uint32_t n = 0;
  std::vector<Arc> arcs;
  while (std::getline(stream, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream fields(raw);
    std::string first;
    if (!(fields >> first)) continue;
    if (!have_n) {
      if (first != "n") throw ParseError(lineno, "expected \"n <count>\"");
      long long count = -1;
      std::string extra;
      if (!(fields >> count) || count < 0 || (fields >> extra))
        throw ParseError(lineno, "expected \"n <count>\"");
      n = static_cast<std::uint32_t>(count);
      have_n = true;
      continue;
    }
    long long a = -1, b = -1;
    std::string sep, extra;
    std::istringstream arc_fields(raw);
    if (!(arc_fields >> a)) throw ParseError(lineno, "expected arc endpoints");
    arc_fields >> sep;
    bool undirected = false;
    if (sep == "--") {
      undirected = true;
      if (!(arc_fields >> b)) throw ParseError(lineno, "expected arc endpoints");
    } else {
      std::istringstream bs(sep);
      if (!(bs >> b) || !bs.eof())
        throw ParseError(lineno, "expected arc endpoints");
    }
    if (arc_fields >> extra) throw ParseError(lineno, "trailing tokens");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw ParseError(lineno, "arc endpoint out of range");
    arcs.push_back({static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(b)});
    if (undirected)
      arcs.push_back({static_cast<std::uint32_t>(b),
                      static_cast<std::uint32_t>(a)});
  }
  if (!have_n) throw ParseError(lineno ? lineno : 1, "missing \"n <count>\"");
  try {
    return InteractionGraph(n, std::move(arcs));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lineno, e.what());
  }
}

// Inverse of from_edge_list up to arc order: opposite arc pairs are emitted
// as one "a -- b" line.
inline std::string to_edge_list(const InteractionGraph& g) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> all;
  for (const Arc& a : g.arcs()) all.insert({a.tail, a.head});
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  std::set<std::pair<std::uint32_t, std::uint32_t>> done;
  for (const auto& [a, b] : all) {
    if (done.count({a, b})) continue;
    if (all.count({b, a})) {
      out << std::min(a, b) << " -- " << std::max(a, b) << "\n";
      done.insert({b, a});
    } else {
      out << a << " " << b << "\n";
    }
    done.insert({a, b});
  }
  return out.str();
}

}  // namespace popmaj
