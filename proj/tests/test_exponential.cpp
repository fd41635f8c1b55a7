#include <gtest/gtest.h>

#include <cmath>

#include "mele/errors.hpp"
#include "mele/exponential.hpp"
#include "mele/numerics.hpp"

using namespace mele::exponential;

TEST(ExponentialEstimators, ClosedForms) {
  const ExponentialData d(10, 5);
  EXPECT_DOUBLE_EQ(mle_mu(d), 2.0);
  EXPECT_DOUBLE_EQ(mele_mu(d), 10.0 / 3);
  EXPECT_DOUBLE_EQ(bayes_mu(d), 2.5);
}

TEST(ExponentialEstimators, MinimumSampleSizes) {
  EXPECT_THROW(mele_mu({4, 2}), mele::DomainError);
  EXPECT_THROW(bayes_mu({4, 1}), mele::DomainError);
  EXPECT_NO_THROW(bayes_mu({4, 2}));
  EXPECT_THROW(ExponentialData(0, 3), mele::DomainError);
  EXPECT_THROW(ExponentialData(1, 0), mele::DomainError);
  EXPECT_THROW(rel_eff_mele(2), mele::DomainError);
  EXPECT_THROW(rel_eff_bayes(1), mele::DomainError);
  EXPECT_THROW(pmc_vs_mle(Alternative::mele, 2), mele::DomainError);
}

TEST(ExponentialEstimators, LargeNConverge) {
  for (long n : {100L, 1000L, 10000L}) {
    const ExponentialData d(3.0 * static_cast<double>(n), n);
    const double scale = 3.0 / static_cast<double>(n);
    EXPECT_LE(std::abs(mele_mu(d) - mle_mu(d)), 3 * scale);
    EXPECT_LE(std::abs(bayes_mu(d) - mle_mu(d)), 2 * scale);
  }
}

TEST(ScaledGammaMse, GammaMomentValues) {
  for (long n : {1L, 4L, 25L}) {
    EXPECT_NEAR(mse_scaled_gamma(static_cast<double>(n), n, 2.0), 4.0 / static_cast<double>(n), 1e-14);
  }
  EXPECT_NEAR(mse_scaled_gamma(8, 10, 1), 14.0 / 64, 1e-15);
  EXPECT_NEAR(mse_scaled_gamma(9, 10, 1), 11.0 / 81, 1e-15);
  // Scales as mu^2.
  EXPECT_NEAR(mse_scaled_gamma(7, 9, 3.0), 9 * mse_scaled_gamma(7, 9, 1.0), 1e-13);
  EXPECT_THROW(mse_scaled_gamma(0, 3, 1), mele::DomainError);
}

TEST(RelativeEfficiency, Values) {
  EXPECT_NEAR(rel_eff_mele(10), 64.0 / 140, 1e-15);
  EXPECT_NEAR(rel_eff_bayes(10), 81.0 / 110, 1e-15);
  const double n = 1000;
  EXPECT_NEAR(rel_eff_mele(1000), 1 - 8 / n + 36 / (n * n), 2e-7);
}

TEST(RelativeEfficiency, AgreesWithMseRatio) {
  for (long n = 3; n <= 60; ++n) {
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(rel_eff_mele(n), mse_scaled_gamma(nn, n, 1) / mse_scaled_gamma(nn - 2, n, 1), 1e-13);
    EXPECT_NEAR(rel_eff_bayes(n), mse_scaled_gamma(nn, n, 1) / mse_scaled_gamma(nn - 1, n, 1), 1e-13);
  }
}

TEST(RelativeEfficiency, Ordering) {
  for (long n = 3; n <= 500; ++n) {
    EXPECT_LT(rel_eff_mele(n), rel_eff_bayes(n));
    EXPECT_LT(rel_eff_bayes(n), 1.0);
  }
}

TEST(ExponentialPmc, HandExpandedValues) {
  EXPECT_NEAR(pmc_vs_mle(Alternative::mele, 3), 1 - std::exp(-1.5) * (1 + 1.5 + 1.125), 1e-12);
  const double x = 4.0 / 3;
  EXPECT_NEAR(pmc_vs_mle(Alternative::bayes, 2), 1 - std::exp(-x) * (1 + x), 1e-12);
  EXPECT_NEAR(pmc_vs_mle(Alternative::bayes, 2), 0.384940011063, 1e-11);
}

TEST(ExponentialPmc, BelowHalf) {
  for (long n = 3; n <= 100; ++n) {
    EXPECT_LT(pmc_vs_mle(Alternative::mele, n), 0.5);
    EXPECT_LT(pmc_vs_mle(Alternative::bayes, n), 0.5);
  }
  EXPECT_LT(pmc_vs_mle(Alternative::bayes, 2), 0.5);
}

TEST(ExponentialPmc, ThresholdIsTheClosenessBoundary) {
  // Just below b the alternative is closer to mu = 1, just above the MLE is.
  for (long n : {3L, 8L, 40L}) {
    for (auto which : {Alternative::mele, Alternative::bayes}) {
      const double b = pmc_threshold(which, n);
      const double nn = static_cast<double>(n);
      const double c = which == Alternative::mele ? nn - 2 : nn - 1;
      for (double t : {b * (1 - 1e-9), b * (1 + 1e-9)}) {
        const bool alt_closer = std::abs(t / c - 1) < std::abs(t / nn - 1);
        EXPECT_EQ(alt_closer, t < b);
      }
    }
  }
}
