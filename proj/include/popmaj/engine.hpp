#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "popmaj/graph.hpp"
#include "popmaj/protocol.hpp"
#include "popmaj/rng.hpp"
#include "popmaj/scheduler.hpp"

namespace popmaj {

// Transition kinds follow the arrow notation for the three-state protocol:
// the label is (initiator type -> responder type). "g->r" blanks a red
// responder and so lowers |R|; "r->b" recolors a blank responder red and so
// raises |R|. Transitions that change nothing are null. Non-three-state
// protocols only distinguish change from null.
enum class TransitionKind : std::uint8_t {
  null_step,
  g_to_r,  // |R| - 1
  r_to_g,  // |G| - 1
  g_to_b,  // |G| + 1
  r_to_b,  // |R| + 1
  change,
};

inline std::string to_string(TransitionKind k) {
  switch (k) {
    case TransitionKind::null_step: return "null";
    case TransitionKind::g_to_r: return "g->r";
    case TransitionKind::r_to_g: return "r->g";
    case TransitionKind::g_to_b: return "g->b";
    case TransitionKind::r_to_b: return "r->b";
    case TransitionKind::change: return "change";
  }
  throw std::invalid_argument("bad transition kind");
}

inline bool raises_blanks(TransitionKind k) {
  return k == TransitionKind::g_to_r || k == TransitionKind::r_to_g;
}

inline bool lowers_blanks(TransitionKind k) {
  return k == TransitionKind::g_to_b || k == TransitionKind::r_to_b;
}

namespace detail {

// Kind by (initiator, responder) state for the built-in three-state ids
// b=0, g=1, r=2.
inline constexpr TransitionKind kThreeStateKind[3][3] = {
    {TransitionKind::null_step, TransitionKind::null_step,
     TransitionKind::null_step},
    {TransitionKind::g_to_b, TransitionKind::null_step,
     TransitionKind::g_to_r},
    {TransitionKind::r_to_b, TransitionKind::r_to_g,
     TransitionKind::null_step},
};

inline TransitionKind classify(const Protocol& p, StateId qa, StateId qb,
                               bool changed) {
  if (p.family == ProtocolFamily::three_state)
    return kThreeStateKind[qa][qb];
  return changed ? TransitionKind::change : TransitionKind::null_step;
}

}  // namespace detail

// Applies one interaction in place and reports its kind.
inline TransitionKind step(Configuration& c, Arc arc, const Protocol& p) {
  if (arc.tail >= c.size() || arc.head >= c.size())
    throw std::invalid_argument("arc outside configuration");
  const StateId qa = c[arc.tail];
  const StateId qb = c[arc.head];
  const auto [ra, rb] = p.apply(qa, qb);
  const bool changed = ra != qa || rb != qb;
  c[arc.tail] = ra;
  c[arc.head] = rb;
  return detail::classify(p, qa, qb, changed);
}

// ---------------------------------------------------------------------------
// Initial configurations

struct Placement {
  enum class Mode { explicit_symbols, counts, random };

  Mode mode = Mode::counts;
  std::vector<std::string> symbols;  // explicit: one input symbol per vertex
  std::uint32_t reds = 0;
  std::uint32_t greens = 0;

  static Placement explicit_symbols(std::vector<std::string> symbols) {
    Placement pl;
    pl.mode = Mode::explicit_symbols;
    pl.symbols = std::move(symbols);
    return pl;
  }

  // Vertices 0..r-1 get input "r", vertices r..n-1 get input "g".
  static Placement by_counts(std::uint32_t r, std::uint32_t g) {
    Placement pl;
    pl.mode = Mode::counts;
    pl.reds = r;
    pl.greens = g;
    return pl;
  }

  // A uniformly random subset of exactly r vertices gets input "r".
  static Placement random(std::uint32_t r, std::uint32_t g) {
    Placement pl;
    pl.mode = Mode::random;
    pl.reds = r;
    pl.greens = g;
    return pl;
  }
};

inline Configuration initial_config(const InteractionGraph& g,
                                    const Protocol& p, const Placement& pl,
                                    Rng* rng = nullptr) {
  const std::uint32_t n = g.vertex_count();
  Configuration c;
  c.states.resize(n);
  switch (pl.mode) {
    case Placement::Mode::explicit_symbols: {
      if (pl.symbols.size() != n)
        throw std::invalid_argument("placement needs one symbol per vertex");
      for (std::uint32_t v = 0; v < n; ++v)
        c[v] = p.input_state(pl.symbols[v]);
      return c;
    }
    case Placement::Mode::counts: {
      if (pl.reds + pl.greens != n)
        throw std::invalid_argument("placement counts must sum to n");
      const StateId red = p.input_state("r");
      const StateId green = p.input_state("g");
      for (std::uint32_t v = 0; v < n; ++v)
        c[v] = v < pl.reds ? red : green;
      return c;
    }
    case Placement::Mode::random: {
      if (pl.reds + pl.greens != n)
        throw std::invalid_argument("placement counts must sum to n");
      if (rng == nullptr)
        throw std::invalid_argument("random placement needs an rng");
      const StateId red = p.input_state("r");
      const StateId green = p.input_state("g");
      std::vector<std::uint32_t> order(n);
      for (std::uint32_t v = 0; v < n; ++v) order[v] = v;
      for (std::uint32_t i = 0; i < pl.reds; ++i) {
        const auto j =
            i + static_cast<std::uint32_t>(rng->bounded(n - i));
        std::swap(order[i], order[j]);
      }
      for (std::uint32_t v = 0; v < n; ++v) c[v] = green;
      for (std::uint32_t i = 0; i < pl.reds; ++i) c[order[i]] = red;
      return c;
    }
  }
  throw std::invalid_argument("bad placement mode");
}

// Named initial conditions of the studied constructions.

// line(m): left end green, the rest red.
inline Placement line_endpoint_placement(std::uint32_t m) {
  std::vector<std::string> s(m, "r");
  s[0] = "g";
  return Placement::explicit_symbols(std::move(s));
}

// lollipop(n1, n2): bridge vertex v = n1-1 and the whole path red, the rest
// of the clique green.
inline Placement lollipop_adversarial_placement(std::uint32_t n1,
                                                std::uint32_t n2) {
  std::vector<std::string> s(n1 + n2, "r");
  for (std::uint32_t v = 0; v + 1 < n1; ++v) s[v] = "g";
  return Placement::explicit_symbols(std::move(s));
}

// two_cliques_bridged(n1, n2): first clique green, second red.
inline Placement two_clique_split_placement(std::uint32_t n1,
                                            std::uint32_t n2) {
  std::vector<std::string> s(n1 + n2, "r");
  for (std::uint32_t v = 0; v < n1; ++v) s[v] = "g";
  return Placement::explicit_symbols(std::move(s));
}

// clique_with_feeder(n1): feeder vertex red, clique green.
inline Placement feeder_minority_placement(std::uint32_t n1) {
  std::vector<std::string> s(n1 + 1, "g");
  s[n1] = "r";
  return Placement::explicit_symbols(std::move(s));
}

// ---------------------------------------------------------------------------
// Observers (three-state runs only)

// W: number of blank vertices over effective steps.
struct BlankState {
  std::uint32_t value = 0;
};

inline BlankState observe_blank(BlankState w, TransitionKind k) {
  if (raises_blanks(k)) {
    ++w.value;
  } else if (lowers_blanks(k)) {
    if (w.value == 0) throw std::logic_error("blank count underflow");
    --w.value;
  }
  return w;
}

// C: the contest process over pair time tau. Each blank-raising transition
// is paired FIFO with the earliest later blank-lowering one; the pair
// (r->g, r->b) converts a green to red and raises C, (g->r, g->b) lowers
// it, mixed pairs leave it unchanged. C(0) is the initial |R|.
struct ContestState {
  long long value = 0;
  std::uint64_t tau = 0;
  std::deque<TransitionKind> pending;
};

// Returns true when a pair completed (tau advanced).
inline bool observe_contest(ContestState& cs, TransitionKind k) {
  if (raises_blanks(k)) {
    cs.pending.push_back(k);
    return false;
  }
  if (!lowers_blanks(k)) return false;
  if (cs.pending.empty())
    throw std::logic_error("contest pairing underflow");
  const TransitionKind opener = cs.pending.front();
  cs.pending.pop_front();
  if (opener == TransitionKind::r_to_g && k == TransitionKind::r_to_b)
    ++cs.value;
  else if (opener == TransitionKind::g_to_r && k == TransitionKind::g_to_b)
    --cs.value;
  ++cs.tau;
  return true;
}

// ---------------------------------------------------------------------------
// Runs

inline std::uint64_t default_max_steps(std::uint32_t n) {
  return 500ULL * n * n * n;
}

struct RunOptions {
  std::uint64_t max_steps = 0;  // 0 -> default_max_steps(n)
  // Jump over null interactions by sampling the length of each null run;
  // preserves the joint distribution of (steps_total, effective sequence).
  bool skip_null = false;
  bool record_blank = false;
  bool record_contest = false;
  std::uint32_t series_stride = 1;
  bool record_trace = false;
  // Observers only see transitions on arcs accepted by this filter.
  std::function<bool(Arc)> observer_arc_filter;
  // Test hook, called after every effective step.
  std::function<void(const Configuration&, TransitionKind, std::uint64_t)>
      on_effective_step;
};

struct RunResult {
  enum class Outcome { absorbed, frozen, step_cap };

  Outcome outcome = Outcome::step_cap;
  // Absorbing class: uniform state name for single-state absorption, the
  // surviving color for the ambassador protocol, otherwise the consensus
  // output symbol.
  std::string value;
  std::uint64_t steps_total = 0;
  std::uint64_t steps_effective = 0;
  Configuration final_config;
  std::vector<std::uint32_t> blank_series;
  std::vector<long long> contest_series;
  std::vector<Arc> trace;
};

inline std::string to_string(RunResult::Outcome o) {
  switch (o) {
    case RunResult::Outcome::absorbed: return "absorbed";
    case RunResult::Outcome::frozen: return "frozen";
    case RunResult::Outcome::step_cap: return "step-cap";
  }
  throw std::invalid_argument("bad outcome");
}

// True when an ambassador configuration can no longer make progress: no
// ambassadors of either color remain while both colors are still present.
inline bool frozen_detect(const Protocol& p, const Configuration& c) {
  if (p.family != ProtocolFamily::ambassador)
    throw std::invalid_argument("frozen_detect needs the ambassador protocol");
  std::uint32_t per_state[4] = {0, 0, 0, 0};
  for (StateId q : c.states) ++per_state[q];
  const auto g0 = p.state_id("g0");
  const auto g1 = p.state_id("g1");
  const auto r0 = p.state_id("r0");
  const auto r1 = p.state_id("r1");
  const std::uint32_t greens = per_state[g0] + per_state[g1];
  const std::uint32_t reds = per_state[r0] + per_state[r1];
  return per_state[g1] == 0 && per_state[r1] == 0 && greens > 0 && reds > 0;
}

namespace detail {

class Runner {
 public:
  Runner(const InteractionGraph& g, const Protocol& p, Configuration c0,
         Scheduler& sched, const RunOptions& opts)
      : g_(g), p_(p), c_(std::move(c0)), sched_(sched), opts_(opts) {
    if (c_.size() != g_.vertex_count())
      throw std::invalid_argument("configuration size differs from graph");
    const bool three = p_.family == ProtocolFamily::three_state;
    if ((opts_.record_blank || opts_.record_contest) && !three)
      throw std::invalid_argument("observers need the three-state protocol");
    if (opts_.skip_null && sched_.is_replay())
      throw std::invalid_argument("skip_null needs a probabilistic scheduler");
    if (opts_.series_stride == 0)
      throw std::invalid_argument("series stride must be positive");
    counts_.assign(p_.size(), 0);
    for (StateId q : c_.states) ++counts_[q];
    max_steps_ = opts_.max_steps ? opts_.max_steps
                                 : default_max_steps(g_.vertex_count());
    if (p_.family == ProtocolFamily::ambassador) {
      amb_ids_ = {p_.state_id("g0"), p_.state_id("g1"), p_.state_id("r0"),
                  p_.state_id("r1")};
    }
  }

  RunResult run() {
    RunResult res;
    if (opts_.record_blank && p_.family == ProtocolFamily::three_state) {
      blank_.value = counts_[p_.state_id("b")];
      res.blank_series.push_back(blank_.value);
    }
    if (opts_.record_contest && p_.family == ProtocolFamily::three_state) {
      contest_.value = counts_[p_.state_id("r")];
      res.contest_series.push_back(contest_.value);
    }
    if (auto settled = settled_outcome()) {
      finish(res, settled->first, settled->second);
      return res;
    }
    if (opts_.skip_null)
      run_skip_null(res);
    else
      run_direct(res);
    return res;
  }

 private:
  void run_direct(RunResult& res) {
    while (res.steps_total < max_steps_) {
      const Arc arc = sched_.next(g_);
      ++res.steps_total;
      if (opts_.record_trace) res.trace.push_back(arc);
      const StateId qa = c_[arc.tail];
      const StateId qb = c_[arc.head];
      const auto [ra, rb] =
          p_.delta[static_cast<std::size_t>(qa) * p_.size() + qb];
      if (ra == qa && rb == qb) continue;
      apply_effective(res, arc, qa, qb, ra, rb);
      if (auto settled = settled_outcome()) {
        finish(res, settled->first, settled->second);
        return;
      }
    }
    res.outcome = RunResult::Outcome::step_cap;
    res.final_config = c_;
  }

  void run_skip_null(RunResult& res) {
    build_active_set();
    const std::uint64_t arc_count = g_.arcs().size();
    Rng& rng = sched_.rng();
    while (true) {
      if (active_.empty()) {
        // Fully inert configuration; classify by outputs.
        if (auto out = consensus_output(p_, c_))
          finish(res, RunResult::Outcome::absorbed, *out);
        else
          finish(res, RunResult::Outcome::frozen, "");
        return;
      }
      std::uint64_t jump = 1;
      if (active_.size() < arc_count) {
        const double s =
            static_cast<double>(active_.size()) / static_cast<double>(arc_count);
        const double draws = std::ceil(std::log(rng.uniform_pos()) /
                                       std::log1p(-s));
        jump = draws < 1.0 ? 1 : static_cast<std::uint64_t>(draws);
      }
      if (jump > max_steps_ - res.steps_total) {
        res.steps_total = max_steps_;
        res.outcome = RunResult::Outcome::step_cap;
        res.final_config = c_;
        return;
      }
      res.steps_total += jump;
      const std::uint32_t idx = active_[rng.bounded(active_.size())];
      const Arc arc = g_.arcs()[idx];
      if (opts_.record_trace) res.trace.push_back(arc);
      const StateId qa = c_[arc.tail];
      const StateId qb = c_[arc.head];
      const auto [ra, rb] =
          p_.delta[static_cast<std::size_t>(qa) * p_.size() + qb];
      apply_effective(res, arc, qa, qb, ra, rb);
      refresh_incident(arc.tail);
      if (arc.head != arc.tail) refresh_incident(arc.head);
      if (auto settled = settled_outcome()) {
        finish(res, settled->first, settled->second);
        return;
      }
    }
  }

  void apply_effective(RunResult& res, Arc arc, StateId qa, StateId qb,
                       StateId ra, StateId rb) {
    c_[arc.tail] = ra;
    c_[arc.head] = rb;
    --counts_[qa];
    --counts_[qb];
    ++counts_[ra];
    ++counts_[rb];
    ++res.steps_effective;
    const TransitionKind kind = classify(p_, qa, qb, true);
    const bool observed =
        !opts_.observer_arc_filter || opts_.observer_arc_filter(arc);
    if (observed && opts_.record_blank) {
      blank_ = observe_blank(blank_, kind);
      if (res.steps_effective % opts_.series_stride == 0)
        res.blank_series.push_back(blank_.value);
    }
    if (observed && opts_.record_contest) {
      if (observe_contest(contest_, kind) &&
          contest_.tau % opts_.series_stride == 0)
        res.contest_series.push_back(contest_.value);
    }
    if (opts_.on_effective_step)
      opts_.on_effective_step(c_, kind, res.steps_total);
  }

  // Outcome checks that only need the per-state counts.
  std::optional<std::pair<RunResult::Outcome, std::string>> settled_outcome() {
    const std::uint32_t n = g_.vertex_count();
    switch (p_.family) {
      case ProtocolFamily::three_state:
        for (std::size_t q = 0; q < counts_.size(); ++q)
          if (counts_[q] == n)
            return {{RunResult::Outcome::absorbed, p_.states[q]}};
        return std::nullopt;
      case ProtocolFamily::ambassador: {
        const std::uint32_t greens =
            counts_[amb_ids_[0]] + counts_[amb_ids_[1]];
        const std::uint32_t reds = counts_[amb_ids_[2]] + counts_[amb_ids_[3]];
        if (reds == 0) return {{RunResult::Outcome::absorbed, "g"}};
        if (greens == 0) return {{RunResult::Outcome::absorbed, "r"}};
        if (counts_[amb_ids_[1]] == 0 && counts_[amb_ids_[3]] == 0)
          return {{RunResult::Outcome::frozen, ""}};
        return std::nullopt;
      }
      case ProtocolFamily::custom: {
        for (std::size_t q = 0; q < counts_.size(); ++q) {
          if (counts_[q] == n) {
            const auto [ra, rb] = p_.apply(static_cast<StateId>(q),
                                           static_cast<StateId>(q));
            if (ra == q && rb == q)
              return {{RunResult::Outcome::absorbed, p_.states[q]}};
          }
        }
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  void finish(RunResult& res, RunResult::Outcome outcome, std::string value) {
    res.outcome = outcome;
    res.value = std::move(value);
    res.final_config = c_;
  }

  bool arc_effective(std::uint32_t idx) const {
    const Arc a = g_.arcs()[idx];
    const StateId qa = c_[a.tail];
    const StateId qb = c_[a.head];
    const auto [ra, rb] =
        p_.delta[static_cast<std::size_t>(qa) * p_.size() + qb];
    return ra != qa || rb != qb;
  }

  void build_active_set() {
    const auto& arcs = g_.arcs();
    incident_.assign(g_.vertex_count(), {});
    for (std::uint32_t i = 0; i < arcs.size(); ++i) {
      incident_[arcs[i].tail].push_back(i);
      incident_[arcs[i].head].push_back(i);
    }
    active_pos_.assign(arcs.size(), kNoPos);
    active_.clear();
    for (std::uint32_t i = 0; i < arcs.size(); ++i)
      if (arc_effective(i)) activate(i);
  }

  void refresh_incident(std::uint32_t vertex) {
    for (std::uint32_t idx : incident_[vertex]) {
      const bool eff = arc_effective(idx);
      const bool marked = active_pos_[idx] != kNoPos;
      if (eff && !marked)
        activate(idx);
      else if (!eff && marked)
        deactivate(idx);
    }
  }

  void activate(std::uint32_t idx) {
    active_pos_[idx] = static_cast<std::uint32_t>(active_.size());
    active_.push_back(idx);
  }

  void deactivate(std::uint32_t idx) {
    const std::uint32_t pos = active_pos_[idx];
    const std::uint32_t last = active_.back();
    active_[pos] = last;
    active_pos_[last] = pos;
    active_.pop_back();
    active_pos_[idx] = kNoPos;
  }

  static constexpr std::uint32_t kNoPos = 0xFFFFFFFFu;

  const InteractionGraph& g_;
  const Protocol& p_;
  Configuration c_;
  Scheduler& sched_;
  RunOptions opts_;
  std::vector<std::uint32_t> counts_;
  std::uint64_t max_steps_ = 0;
  std::array<StateId, 4> amb_ids_{};  // g0, g1, r0, r1
  BlankState blank_;
  ContestState contest_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> active_;
  std::vector<std::uint32_t> active_pos_;
};

}  // namespace detail

// Runs the protocol until it settles or hits the step cap. A run is
// absorbed when no reachable interaction can change any vertex's output
// again: a single-state configuration, a single surviving color for the
// ambassador protocol (leftover same-color ambassadors keep hopping without
// touching outputs), or an entirely inert configuration with uniform
// outputs.
inline RunResult run(const InteractionGraph& g, const Protocol& p,
                     Configuration c0, Scheduler& sched,
                     const RunOptions& opts = {}) {
  detail::Runner runner(g, p, std::move(c0), sched, opts);
  return runner.run();
}

// Count-level simulation of the three-state protocol on clique(n), tracking
// only (|R|, |G|). One step draws an ordered vertex pair uniformly; the
// per-kind probabilities are |G||R|/(n(n-1)) for each of g->r and r->g,
// |G|W/(n(n-1)) for g->b and |R|W/(n(n-1)) for r->b. Absorbs at (n,0),
// (0,n) or (0,0). final_config is the representative with reds first.
inline RunResult run_clique_aggregated(std::uint32_t n, std::uint32_t r0,
                                       std::uint32_t g0, Rng& rng,
                                       const RunOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  if (r0 + g0 > n) throw std::invalid_argument("r0 + g0 must be at most n");
  if (opts.observer_arc_filter)
    throw std::invalid_argument("aggregated runs have no arcs to filter");
  if (opts.series_stride == 0)
    throw std::invalid_argument("series stride must be positive");
  std::uint64_t R = r0, G = g0;
  const std::uint64_t N = n;
  const std::uint64_t pairs = N * (N - 1);
  const std::uint64_t cap =
      opts.max_steps ? opts.max_steps : default_max_steps(n);
  RunResult res;
  BlankState blank{static_cast<std::uint32_t>(N - R - G)};
  ContestState contest;
  contest.value = static_cast<long long>(R);
  if (opts.record_blank) res.blank_series.push_back(blank.value);
  if (opts.record_contest) res.contest_series.push_back(contest.value);

  const auto settled = [&]() -> std::optional<std::string> {
    if (R == N) return "r";
    if (G == N) return "g";
    if (R + G == 0) return "b";
    return std::nullopt;
  };
  const StateId id_b = 0, id_g = 1, id_r = 2;  // builtin three-state order
  const auto make_final = [&](Configuration& c) {
    c.states.assign(n, id_b);
    for (std::uint64_t v = 0; v < R; ++v) c.states[v] = id_r;
    for (std::uint64_t v = R; v < R + G; ++v) c.states[v] = id_g;
  };

  while (true) {
    if (auto s = settled()) {
      res.outcome = RunResult::Outcome::absorbed;
      res.value = *s;
      make_final(res.final_config);
      return res;
    }
    const std::uint64_t W = N - R - G;
    const std::uint64_t rg = R * G;
    const std::uint64_t gb = G * W;
    const std::uint64_t rb = R * W;
    const std::uint64_t effective = 2 * rg + gb + rb;
    std::uint64_t pick;
    if (opts.skip_null && effective < pairs) {
      const double s =
          static_cast<double>(effective) / static_cast<double>(pairs);
      const double draws =
          std::ceil(std::log(rng.uniform_pos()) / std::log1p(-s));
      const std::uint64_t jump =
          draws < 1.0 ? 1 : static_cast<std::uint64_t>(draws);
      if (jump > cap - res.steps_total) {
        res.steps_total = cap;
        res.outcome = RunResult::Outcome::step_cap;
        make_final(res.final_config);
        return res;
      }
      res.steps_total += jump;
      pick = rng.bounded(effective);
    } else {
      if (res.steps_total == cap) {
        res.outcome = RunResult::Outcome::step_cap;
        make_final(res.final_config);
        return res;
      }
      ++res.steps_total;
      pick = rng.bounded(pairs);
      if (pick >= effective) continue;
    }
    TransitionKind kind;
    if (pick < rg) {
      kind = TransitionKind::g_to_r;
      --R;
    } else if (pick < 2 * rg) {
      kind = TransitionKind::r_to_g;
      --G;
    } else if (pick < 2 * rg + gb) {
      kind = TransitionKind::g_to_b;
      ++G;
    } else {
      kind = TransitionKind::r_to_b;
      ++R;
    }
    ++res.steps_effective;
    if (opts.record_blank) {
      blank = observe_blank(blank, kind);
      if (res.steps_effective % opts.series_stride == 0)
        res.blank_series.push_back(blank.value);
    }
    if (opts.record_contest) {
      if (observe_contest(contest, kind) &&
          contest.tau % opts.series_stride == 0)
        res.contest_series.push_back(contest.value);
    }
  }
}

inline RunResult run_clique_aggregated(std::uint32_t n, std::uint32_t r0,
                                       std::uint32_t g0, std::uint64_t seed,
                                       const RunOptions& opts = {}) {
  Rng rng(seed);
  return run_clique_aggregated(n, r0, g0, rng, opts);
}

}  // namespace popmaj
