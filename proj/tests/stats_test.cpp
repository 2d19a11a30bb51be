#include "popmaj/stats.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

namespace popmaj {
namespace {

// Wilson endpoints are exactly the roots of (phat - p)^2 = z^2 p(1-p)/n.
void expect_wilson_endpoint(double endpoint, double phat, double n, double z) {
  const double lhs = (phat - endpoint) * (phat - endpoint);
  const double rhs = z * z * endpoint * (1.0 - endpoint) / n;
  EXPECT_NEAR(lhs, rhs, 1e-12) << "endpoint " << endpoint;
}

TEST(Stats, WilsonEndpointsSolveDefiningEquation) {
  struct Case {
    std::uint64_t successes, trials;
  };
  for (const Case& k : {Case{7, 50}, Case{0, 100}, Case{100, 100}}) {
    for (double z : {kZ95, kZ99}) {
      const WilsonInterval w = wilson_interval(k.successes, k.trials, z);
      const double phat = double(k.successes) / double(k.trials);
      EXPECT_DOUBLE_EQ(w.freq, phat);
      expect_wilson_endpoint(w.lo, phat, double(k.trials), z);
      expect_wilson_endpoint(w.hi, phat, double(k.trials), z);
      EXPECT_LE(w.lo, phat);
      EXPECT_GE(w.hi, phat);
    }
  }
}

TEST(Stats, WilsonKnownValueAndContains) {
  const WilsonInterval w = wilson_interval(0, 100);
  EXPECT_DOUBLE_EQ(w.lo, 0.0);
  EXPECT_NEAR(w.hi, 0.0369934, 1e-6);
  EXPECT_TRUE(w.contains(0.02));
  EXPECT_FALSE(w.contains(0.05));
  EXPECT_THROW(wilson_interval(1, 0), std::invalid_argument);
  EXPECT_THROW(wilson_interval(5, 4), std::invalid_argument);
}

TEST(Stats, ChiSquareCdfDofTwoIsExponential) {
  for (double x : {0.0, 0.1, 0.5, 1.0, 2.0, 5.0, 9.21, 20.0})
    EXPECT_NEAR(chi_square_cdf(2, x), 1.0 - std::exp(-x / 2.0), 1e-12) << x;
}

TEST(Stats, ChiSquareCdfDofOneIsErf) {
  for (double x : {0.0, 0.1, 0.5, 1.0, 2.0, 3.84, 6.63, 15.0})
    EXPECT_NEAR(chi_square_cdf(1, x), std::erf(std::sqrt(x / 2.0)), 1e-12)
        << x;
}

TEST(Stats, ChiSquareCriticalValues) {
  EXPECT_NEAR(chi_square_critical(1, 0.01), 6.63489660102121, 1e-9);
  EXPECT_NEAR(chi_square_critical(2, 0.01), 9.21034037197618, 1e-9);
  EXPECT_NEAR(chi_square_critical(1, 0.05), 3.84145882069412, 1e-9);
  for (double dof : {1.0, 2.0, 5.0, 17.0})
    for (double sig : {0.05, 0.01})
      EXPECT_NEAR(chi_square_cdf(dof, chi_square_critical(dof, sig)),
                  1.0 - sig, 1e-10);
  EXPECT_THROW(chi_square_critical(0, 0.05), std::invalid_argument);
  EXPECT_THROW(chi_square_critical(2, 0.0), std::invalid_argument);
}

TEST(Stats, ChiSquareUniform) {
  const ChiSquareResult flat = chi_square_uniform({100, 100, 100, 100}, 0.01);
  EXPECT_DOUBLE_EQ(flat.statistic, 0.0);
  EXPECT_FALSE(flat.reject);
  EXPECT_DOUBLE_EQ(flat.dof, 3.0);
  const ChiSquareResult skew = chi_square_uniform({400, 10, 10, 10}, 0.01);
  EXPECT_TRUE(skew.reject);
  EXPECT_THROW(chi_square_uniform({5}, 0.05), std::invalid_argument);
  EXPECT_THROW(chi_square_uniform({0, 0}, 0.05), std::invalid_argument);
}

TEST(Stats, ChiSquareTwoSample) {
  const ChiSquareResult same =
      chi_square_two_sample({500, 480, 20}, {510, 470, 20}, 0.01);
  EXPECT_FALSE(same.reject);
  const ChiSquareResult diff =
      chi_square_two_sample({800, 200}, {200, 800}, 0.01);
  EXPECT_TRUE(diff.reject);
  EXPECT_THROW(chi_square_two_sample({1, 2}, {1}, 0.05),
               std::invalid_argument);
}

TEST(Stats, ChiSquareTwoSamplePoolsRareCells) {
  // The two rare categories merge into one pooled cell: dof counts three
  // cells, not four.
  const ChiSquareResult pooled =
      chi_square_two_sample({100, 100, 3, 2}, {100, 100, 2, 3}, 0.01);
  EXPECT_DOUBLE_EQ(pooled.dof, 2.0);
  EXPECT_FALSE(pooled.reject);
  // All rare: nothing left to distinguish.
  const ChiSquareResult trivial =
      chi_square_two_sample({2, 1}, {1, 2}, 0.01);
  EXPECT_FALSE(trivial.reject);
  EXPECT_DOUBLE_EQ(trivial.dof, 0.0);
}

TEST(Stats, Quantiles) {
  const std::vector<double> ten = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  EXPECT_DOUBLE_EQ(median(ten), 5.5);
  EXPECT_DOUBLE_EQ(quantile(ten, 0.95), 10.0);
  EXPECT_DOUBLE_EQ(quantile(ten, 0.25), 3.0);
  EXPECT_DOUBLE_EQ(quantile(ten, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(quantile(ten, 1.0), 10.0);
  EXPECT_DOUBLE_EQ(median({3, 1, 2}), 2.0);
  EXPECT_THROW(quantile({}, 0.5), std::invalid_argument);
  EXPECT_THROW(quantile({1.0}, 1.5), std::invalid_argument);
}

TEST(Stats, MeanAndStddev) {
  const std::vector<double> xs = {1, 2, 3, 4};
  EXPECT_DOUBLE_EQ(mean(xs), 2.5);
  EXPECT_NEAR(sample_stddev(xs), std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_THROW(mean({}), std::invalid_argument);
  EXPECT_THROW(sample_stddev({1.0}), std::invalid_argument);
}

TEST(Stats, FitScale) {
  EXPECT_NEAR(fit_scale({2, 4, 6}, {1, 2, 3}), 2.0, 1e-12);
  EXPECT_NEAR(fit_scale({1, 8}, {2, 1}), 2.0, 1e-12);  // geometric mean of 1/2, 8
  EXPECT_THROW(fit_scale({1, 2}, {1}), std::invalid_argument);
  EXPECT_THROW(fit_scale({}, {}), std::invalid_argument);
  EXPECT_THROW(fit_scale({0, 1}, {1, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace popmaj
