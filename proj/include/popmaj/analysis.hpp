#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "popmaj/rng.hpp"

namespace popmaj {

// Birth-death chains on states 0..m with constant interior bias: up with
// probability p, down with q, lazy otherwise. The two barriers are
// configured separately; the closed forms below fix them as noted.

enum class Barrier { absorbing, reflecting };

struct BirthDeathSpec {
  std::uint32_t m = 1;
  double p = 0;
  double q = 0;
  Barrier barrier0 = Barrier::absorbing;
  Barrier barrier_m = Barrier::absorbing;
};

namespace detail {

inline void check_bd(const BirthDeathSpec& s, std::uint32_t i) {
  if (s.m < 1) throw std::invalid_argument("need m >= 1");
  if (i > s.m) throw std::invalid_argument("start state outside 0..m");
  if (s.p <= 0 || s.q < 0 || s.p + s.q > 1)
    throw std::invalid_argument("need p > 0, q >= 0, p + q <= 1");
  if (s.p == s.q)
    throw std::domain_error(
        "p == q has no biased closed form; use the symmetric_* variants");
}

// Switch to the log-space evaluation once (q/p)^m overflows this.
inline constexpr double kRatioPowerLimit = 1e12;

}  // namespace detail

// P(reach m before 0) from state i with both barriers absorbing:
// h_i = ((q/p)^i - 1) / ((q/p)^m - 1).
inline double absorption_probability(const BirthDeathSpec& s, std::uint32_t i) {
  detail::check_bd(s, i);
  if (s.barrier0 != Barrier::absorbing || s.barrier_m != Barrier::absorbing)
    throw std::invalid_argument("absorption_probability needs both barriers absorbing");
  if (i == 0) return 0.0;
  if (i == s.m) return 1.0;
  const double r = s.q / s.p;
  const double log_r = std::log(r);
  if (r > 1 && static_cast<double>(s.m) * log_r >
                   std::log(detail::kRatioPowerLimit)) {
    // h_i = r^(i-m) * (1 - r^-i) / (1 - r^-m)
    const double num = 1.0 - std::exp(-static_cast<double>(i) * log_r);
    const double den = 1.0 - std::exp(-static_cast<double>(s.m) * log_r);
    return std::exp((static_cast<double>(i) - s.m) * log_r) * num / den;
  }
  return (std::pow(r, i) - 1.0) / (std::pow(r, s.m) - 1.0);
}

// Expected steps to reach the absorbing barrier m from state i when 0 is
// reflecting:
// mu_i = (1 + 1/(q-p)) * (r^m - r^i)/(r - 1) - (m - i)/(q - p), r = q/p.
// (The weight 1/(p(r-1)) is the same quantity as 1/(q-p).)
inline double expected_time_reflecting(const BirthDeathSpec& s,
                                       std::uint32_t i) {
  detail::check_bd(s, i);
  if (s.barrier0 != Barrier::reflecting || s.barrier_m != Barrier::absorbing)
    throw std::invalid_argument(
        "expected_time_reflecting needs reflecting 0 and absorbing m");
  const double r = s.q / s.p;
  const double a = 1.0 / (s.q - s.p);
  return (1.0 + a) * (std::pow(r, s.m) - std::pow(r, i)) / (r - 1.0) -
         a * (static_cast<double>(s.m) - i);
}

// p == q limits, exposed separately so the degenerate bias is an explicit
// caller choice.
inline double symmetric_absorption_probability(std::uint32_t m,
                                               std::uint32_t i) {
  if (m < 1 || i > m) throw std::invalid_argument("need 0 <= i <= m, m >= 1");
  return static_cast<double>(i) / m;
}

inline double symmetric_expected_time_reflecting(std::uint32_t m,
                                                 std::uint32_t i, double p) {
  if (m < 1 || i > m) throw std::invalid_argument("need 0 <= i <= m, m >= 1");
  if (p <= 0 || 2 * p > 1 + 1e-15)
    throw std::invalid_argument("need 0 < p <= 1/2");
  const double md = m, id = i;
  return (md * md - id * id) / (2 * p) -
         (1.0 / (2 * p) - 1.0) * (md - id);
}

// Advisory magnitudes for the two drift regimes of mu_1.
inline double expected_time_upper_hint(const BirthDeathSpec& s,
                                       std::uint32_t i) {
  detail::check_bd(s, i);
  if (s.q >= s.p) throw std::invalid_argument("hint applies when q < p");
  return (static_cast<double>(s.m) - i) / (s.p - s.q);
}

inline double expected_time_lower_hint(const BirthDeathSpec& s) {
  detail::check_bd(s, 1);
  if (s.q <= s.p) throw std::invalid_argument("hint applies when q > p");
  const double r = s.q / s.p;
  return std::pow(r, s.m) / (r - 1.0);
}

// State-dependent chains, solved directly from the recurrences. up[k] and
// down[k] are the move probabilities out of interior state k+1, so both
// vectors have length m-1. Returned vectors are indexed by state 0..m.
inline std::vector<double> absorption_probability_general(
    const std::vector<double>& up, const std::vector<double>& down) {
  const std::size_t m = up.size() + 1;
  if (down.size() != up.size())
    throw std::invalid_argument("up/down length mismatch");
  std::vector<double> h(m + 1);
  double rho = 1.0, total = 1.0;
  std::vector<double> prefix(m + 1, 0.0);
  prefix[1] = 1.0;
  for (std::size_t k = 1; k < m; ++k) {
    if (up[k - 1] <= 0) throw std::invalid_argument("need up[k] > 0");
    rho *= down[k - 1] / up[k - 1];
    total += rho;
    prefix[k + 1] = prefix[k] + rho;
  }
  for (std::size_t i = 0; i <= m; ++i) h[i] = prefix[i] / total;
  h[m] = 1.0;
  return h;
}

inline std::vector<double> expected_time_reflecting_general(
    const std::vector<double>& up, const std::vector<double>& down) {
  const std::size_t m = up.size() + 1;
  if (down.size() != up.size())
    throw std::invalid_argument("up/down length mismatch");
  // e_i = mu_i - mu_{i+1}; e_0 = 1 from the reflecting step.
  std::vector<double> e(m, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k < m; ++k) {
    if (up[k - 1] <= 0) throw std::invalid_argument("need up[k] > 0");
    e[k] = (1.0 + down[k - 1] * e[k - 1]) / up[k - 1];
  }
  std::vector<double> mu(m + 1, 0.0);
  for (std::size_t i = m; i-- > 0;) mu[i] = mu[i + 1] + e[i];
  return mu;
}

struct BdSimResult {
  std::optional<std::uint32_t> absorbed_at;
  std::uint64_t steps = 0;
};

inline BdSimResult simulate_bd(const BirthDeathSpec& s, std::uint32_t i,
                               Rng& rng,
                               std::uint64_t max_steps = 100'000'000ULL) {
  if (s.m < 1 || i > s.m) throw std::invalid_argument("start state outside 0..m");
  if (s.p < 0 || s.q < 0 || s.p + s.q > 1)
    throw std::invalid_argument("need p, q >= 0, p + q <= 1");
  BdSimResult res;
  std::uint32_t x = i;
  while (res.steps < max_steps) {
    if (x == 0) {
      if (s.barrier0 == Barrier::absorbing) {
        res.absorbed_at = 0;
        return res;
      }
      x = 1;
      ++res.steps;
      continue;
    }
    if (x == s.m) {
      if (s.barrier_m == Barrier::absorbing) {
        res.absorbed_at = s.m;
        return res;
      }
      x = s.m - 1;
      ++res.steps;
      continue;
    }
    const double u = rng.uniform();
    if (u < s.p)
      ++x;
    else if (u < s.p + s.q)
      --x;
    ++res.steps;
  }
  return res;
}

// Probability that the single green left end converts the whole path of m
// vertices before being wiped out: 1 / (2(m - 1)).
inline double line_win_probability(std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("need m >= 2");
  return 1.0 / (2.0 * (m - 1));
}

}  // namespace popmaj
