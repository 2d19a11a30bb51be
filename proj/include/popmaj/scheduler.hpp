#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "popmaj/graph.hpp"
#include "popmaj/rng.hpp"

namespace popmaj {

class ReplayExhausted : public std::runtime_error {
 public:
  ReplayExhausted() : std::runtime_error("replay trace exhausted") {}
};

// Produces the interaction sequence for a run. The probabilistic scheduler
// draws one directed arc uniformly per step; picking an undirected edge and
// then an initiator uniformly is the same distribution because undirected
// edges are stored as two arcs. The replay scheduler feeds back a recorded
// arc list for deterministic reproduction.
class Scheduler {
 public:
  static Scheduler probabilistic(std::uint64_t seed) {
    return Scheduler(Rng(seed));
  }

  static Scheduler probabilistic(Rng rng) { return Scheduler(std::move(rng)); }

  static Scheduler replay(std::vector<Arc> trace) {
    Scheduler s{Rng(0)};
    s.replay_ = true;
    s.trace_ = std::move(trace);
    return s;
  }

  Arc next(const InteractionGraph& g) {
    if (replay_) {
      if (pos_ >= trace_.size()) throw ReplayExhausted();
      const Arc a = trace_[pos_++];
      if (a.tail >= g.vertex_count() || a.head >= g.vertex_count())
        throw std::invalid_argument("replayed arc outside graph");
      return a;
    }
    return g.arcs()[rng_.bounded(g.arcs().size())];
  }

  bool is_replay() const { return replay_; }
  std::size_t replay_remaining() const { return trace_.size() - pos_; }

  // Auxiliary draws (placement, null-run skipping) share the run's stream.
  Rng& rng() { return rng_; }

 private:
  explicit Scheduler(Rng rng) : rng_(rng) {}

  Rng rng_;
  bool replay_ = false;
  std::vector<Arc> trace_;
  std::size_t pos_ = 0;
};

}  // namespace popmaj
