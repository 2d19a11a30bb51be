#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace popmaj {

struct WilsonInterval {
  double freq = 0;
  double lo = 0;
  double hi = 0;

  bool contains(double p) const { return lo <= p && p <= hi; }
};

inline constexpr double kZ95 = 1.959963984540054;
inline constexpr double kZ99 = 2.5758293035489004;

inline WilsonInterval wilson_interval(std::uint64_t successes,
                                      std::uint64_t trials, double z = kZ95) {
  if (trials == 0) throw std::invalid_argument("wilson needs trials > 0");
  if (successes > trials)
    throw std::invalid_argument("successes exceed trials");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4 * n * n)) / denom;
  // At the boundaries the defining quadratic has an exact root; pinning it
  // avoids cancellation residue in center - half.
  const double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
  const double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
  return {phat, lo, hi};
}

inline double mean(const std::vector<double>& xs) {
  if (xs.empty()) throw std::invalid_argument("mean of empty sample");
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

inline double sample_stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) throw std::invalid_argument("stddev needs >= 2 samples");
  const double m = mean(xs);
  double s = 0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

// Empirical quantile: the sample at index ceil(q * N) - 1 of the sorted
// values, except the even-size median which averages the middle pair.
inline double quantile(std::vector<double> xs, double q) {
  if (xs.empty()) throw std::invalid_argument("quantile of empty sample");
  if (q < 0 || q > 1) throw std::invalid_argument("quantile level outside [0,1]");
  std::sort(xs.begin(), xs.end());
  if (q == 0.5 && xs.size() % 2 == 0)
    return 0.5 * (xs[xs.size() / 2 - 1] + xs[xs.size() / 2]);
  const std::size_t rank =
      q == 0 ? 1
             : static_cast<std::size_t>(
                   std::ceil(q * static_cast<double>(xs.size())));
  return xs[std::min(rank, xs.size()) - 1];
}

inline double median(const std::vector<double>& xs) { return quantile(xs, 0.5); }

namespace detail {

// Regularized lower incomplete gamma P(a, x), series/continued-fraction
// split as in Numerical Recipes.
inline double gamma_p(double a, double x) {
  if (a <= 0 || x < 0) throw std::invalid_argument("gamma_p domain");
  if (x == 0) return 0;
  const double lg = std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, del = sum;
    for (int n = 0; n < 500; ++n) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::fabs(del) < std::fabs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - lg);
  }
  double b = x + 1.0 - a, c = 1e300, d = 1.0 / b, h = d;
  for (int n = 1; n < 500; ++n) {
    const double an = -n * (n - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < 1e-300) d = 1e-300;
    c = b + an / c;
    if (std::fabs(c) < 1e-300) c = 1e-300;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < 1e-15) break;
  }
  return 1.0 - std::exp(-x + a * std::log(x) - lg) * h;
}

}  // namespace detail

inline double chi_square_cdf(double dof, double x) {
  return detail::gamma_p(dof / 2.0, x / 2.0);
}

inline double chi_square_critical(double dof, double significance) {
  if (dof <= 0 || significance <= 0 || significance >= 1)
    throw std::invalid_argument("bad chi-square parameters");
  const double target = 1.0 - significance;
  double lo = 0, hi = dof + 10;
  while (chi_square_cdf(dof, hi) < target) hi *= 2;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (chi_square_cdf(dof, mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct ChiSquareResult {
  double statistic = 0;
  double dof = 0;
  double critical = 0;
  bool reject = false;
};

// Goodness of fit against the uniform distribution over the cells.
inline ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts,
                                          double significance) {
  if (counts.size() < 2) throw std::invalid_argument("need >= 2 cells");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total == 0) throw std::invalid_argument("empty sample");
  const double expected =
      static_cast<double>(total) / static_cast<double>(counts.size());
  ChiSquareResult res;
  for (auto c : counts) {
    const double d = static_cast<double>(c) - expected;
    res.statistic += d * d / expected;
  }
  res.dof = static_cast<double>(counts.size() - 1);
  res.critical = chi_square_critical(res.dof, significance);
  res.reject = res.statistic > res.critical;
  return res;
}

// Two-sample homogeneity test on categorical outcomes. Categories whose
// pooled count is too small for the chi-square approximation are merged;
// if fewer than two categories remain the samples are trivially compatible.
inline ChiSquareResult chi_square_two_sample(
    const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
    double significance, std::uint64_t min_pooled_count = 10) {
  if (a.size() != b.size())
    throw std::invalid_argument("category count mismatch");
  std::vector<std::pair<double, double>> cells;
  double rare_a = 0, rare_b = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] + b[i] == 0) continue;
    if (a[i] + b[i] < min_pooled_count) {
      rare_a += static_cast<double>(a[i]);
      rare_b += static_cast<double>(b[i]);
    } else {
      cells.push_back({static_cast<double>(a[i]), static_cast<double>(b[i])});
    }
  }
  if (rare_a + rare_b > 0) cells.push_back({rare_a, rare_b});
  ChiSquareResult res;
  if (cells.size() < 2) return res;  // nothing to distinguish
  double sum_a = 0, sum_b = 0;
  for (const auto& [ca, cb] : cells) {
    sum_a += ca;
    sum_b += cb;
  }
  const double total = sum_a + sum_b;
  for (const auto& [ca, cb] : cells) {
    const double row = ca + cb;
    const double ea = row * sum_a / total;
    const double eb = row * sum_b / total;
    if (ea > 0) res.statistic += (ca - ea) * (ca - ea) / ea;
    if (eb > 0) res.statistic += (cb - eb) * (cb - eb) / eb;
  }
  res.dof = static_cast<double>(cells.size() - 1);
  res.critical = chi_square_critical(res.dof, significance);
  res.reject = res.statistic > res.critical;
  return res;
}

// Least-squares scale c for observed ~ c * model under log loss, i.e. the
// geometric mean of the pointwise ratios.
inline double fit_scale(const std::vector<double>& observed,
                        const std::vector<double>& model) {
  if (observed.size() != model.size() || observed.empty())
    throw std::invalid_argument("fit_scale needs matching nonempty series");
  double acc = 0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (observed[i] <= 0 || model[i] <= 0)
      throw std::invalid_argument("fit_scale needs positive values");
    acc += std::log(observed[i] / model[i]);
  }
  return std::exp(acc / static_cast<double>(observed.size()));
}

}  // namespace popmaj
