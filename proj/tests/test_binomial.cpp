#include <gtest/gtest.h>

#include <cmath>

#include "mele/binomial.hpp"
#include "mele/errors.hpp"

using namespace mele::binomial;

TEST(BinomialEstimators, ClosedForms) {
  EXPECT_DOUBLE_EQ(mle_p({5, 10}), 0.5);
  EXPECT_DOUBLE_EQ(mle_p({0, 10}), 0.0);
  EXPECT_DOUBLE_EQ(mle_p({10, 10}), 1.0);
  EXPECT_DOUBLE_EQ(mele_p({5, 10}), 0.5);
  EXPECT_DOUBLE_EQ(mele_p({0, 10}), 1.0 / 12);
  EXPECT_DOUBLE_EQ(mele_p({10, 10}), 11.0 / 12);
  EXPECT_DOUBLE_EQ(bayes_p({5, 10}), 0.5);
  EXPECT_DOUBLE_EQ(bayes_p({0, 10}), 1.0 / 42);
  EXPECT_DOUBLE_EQ(bayes_p({10, 10}), 41.0 / 42);
  EXPECT_DOUBLE_EQ(bayes_p({3, 10}), 13.0 / 42);
}

TEST(BinomialEstimators, InvalidData) {
  EXPECT_THROW(BinomialData(0, 0), mele::DomainError);
  EXPECT_THROW(BinomialData(-1, 5), mele::DomainError);
  EXPECT_THROW(BinomialData(6, 5), mele::DomainError);
}

TEST(BinomialEstimators, MeleAndBayesStayInterior) {
  for (long n : {1L, 2L, 10L, 1000L}) {
    for (long x = 0; x <= n; ++x) {
      EXPECT_GT(mele_p({x, n}), 0.0);
      EXPECT_LT(mele_p({x, n}), 1.0);
      EXPECT_GT(bayes_p({x, n}), 0.0);
      EXPECT_LT(bayes_p({x, n}), 1.0);
    }
  }
}

TEST(BinomialEstimators, ReflectionSymmetry) {
  for (long n : {3L, 10L, 31L}) {
    for (long x = 0; x <= n; ++x) {
      EXPECT_NEAR(mle_p({n - x, n}), 1 - mle_p({x, n}), 1e-15);
      EXPECT_NEAR(mele_p({n - x, n}), 1 - mele_p({x, n}), 1e-15);
      EXPECT_NEAR(bayes_p({n - x, n}), 1 - bayes_p({x, n}), 1e-15);
    }
  }
}

TEST(BinomialMse, SmallEnumerations) {
  EXPECT_NEAR(mse_exact(mle_p, 2, 0.5), 0.125, 1e-15);
  // Outcomes {0,1,2} with probabilities {1/4,1/2,1/4}; MELE {1/4,1/2,3/4}.
  EXPECT_NEAR(mse_exact(mele_p, 2, 0.5), 0.03125, 1e-15);
  for (long n : {1L, 7L, 40L}) {
    EXPECT_NEAR(mse_exact(mle_p, n, 0.3), 0.3 * 0.7 / static_cast<double>(n), 1e-14);
  }
}

TEST(BinomialMse, DegenerateP) {
  for (long n : {1L, 10L, 100L}) {
    EXPECT_DOUBLE_EQ(mse_exact(mele_p, n, 0.0), std::pow(mele_p({0, n}), 2));
    EXPECT_DOUBLE_EQ(mse_exact(bayes_p, n, 1.0), std::pow(bayes_p({n, n}) - 1, 2));
    EXPECT_EQ(mse_exact(mle_p, n, 0.0), 0.0);
  }
  EXPECT_THROW(mse_exact(mle_p, 10, 1.1), mele::DomainError);
}

TEST(BinomialMse, LargeNStaysFinite) {
  const double v = mse_exact(mle_p, 10000, 0.37);
  EXPECT_NEAR(v, 0.37 * 0.63 / 10000, 1e-14);
}

TEST(BinomialMse, SymmetricAboutHalf) {
  for (double p : {0.05, 0.2, 0.41}) {
    EXPECT_NEAR(mse_exact(mele_p, 30, p), mse_exact(mele_p, 30, 1 - p), 1e-14);
    EXPECT_NEAR(mse_exact(bayes_p, 30, p), mse_exact(bayes_p, 30, 1 - p), 1e-14);
  }
}

TEST(BinomialPmc, Examples) {
  EXPECT_NEAR(pmc_exact(mele_p, mle_p, 1, 0.5), 1.0, 1e-15);
  EXPECT_EQ(pmc_exact(mele_p, mle_p, 10, 1.0), 0.0);
  EXPECT_EQ(pmc_exact(mele_p, mle_p, 10, 0.0), 0.0);
  for (long n : {1L, 5L, 30L}) {
    for (double p : {0.0, 0.13, 0.5, 0.77, 1.0}) {
      EXPECT_EQ(pmc_exact(mele_p, mele_p, n, p), 0.5);
      EXPECT_EQ(pmc_exact(mle_p, mle_p, n, p), 0.5);
    }
  }
}

TEST(BinomialPmc, Complementarity) {
  for (long n : {2L, 9L, 30L}) {
    for (double p = 0.0; p <= 1.0; p += 0.0625) {
      EXPECT_NEAR(pmc_exact(mele_p, mle_p, n, p) + pmc_exact(mle_p, mele_p, n, p), 1.0, 1e-12);
      EXPECT_NEAR(pmc_exact(bayes_p, mle_p, n, p) + pmc_exact(mle_p, bayes_p, n, p), 1.0, 1e-12);
      EXPECT_NEAR(pmc_exact(bayes_p, mele_p, n, p) + pmc_exact(mele_p, bayes_p, n, p), 1.0, 1e-12);
    }
  }
}

TEST(BinomialPmc, SymmetricAboutHalf) {
  for (double p : {0.1, 0.33}) {
    EXPECT_NEAR(pmc_exact(mele_p, mle_p, 10, p), pmc_exact(mele_p, mle_p, 10, 1 - p), 1e-12);
  }
}

TEST(EfficiencyInterval, MeleValuesAndSymmetry) {
  const auto iv = efficiency_interval_mele(10);
  EXPECT_NEAR(iv.lo, 0.138126567772, 1e-11);
  EXPECT_NEAR(iv.hi, 0.861873432228, 1e-11);
  for (long n : {1L, 2L, 10L, 30L, 1000L}) {
    const auto i = efficiency_interval_mele(n);
    EXPECT_NEAR(i.lo + i.hi, 1.0, 1e-14);
  }
  const auto far = efficiency_interval_mele(100000000);
  EXPECT_NEAR(far.lo, 0.5 - std::sqrt(2.0) / 4, 1e-8);
  EXPECT_NEAR(far.hi, 0.5 + std::sqrt(2.0) / 4, 1e-8);
}

TEST(EfficiencyInterval, BayesValuesAndLimit) {
  // (51 -/+ sqrt(2091)) / 102.
  const auto iv = efficiency_interval_bayes(10);
  EXPECT_NEAR(iv.lo, 0.0516916327383, 1e-11);
  EXPECT_NEAR(iv.hi, 0.948308367262, 1e-11);
  for (long n : {1L, 2L, 10L, 30L, 1000L}) {
    const auto i = efficiency_interval_bayes(n);
    EXPECT_NEAR(i.lo + i.hi, 1.0, 1e-14);
  }
  // sqrt((4n+1)/(5n+1)) -> 2/sqrt(5).
  const auto far = efficiency_interval_bayes(100000000);
  EXPECT_NEAR(far.lo, 0.5 * (1 - 2 / std::sqrt(5.0)), 1e-8);
  EXPECT_NEAR(far.hi, 0.5 * (1 + 2 / std::sqrt(5.0)), 1e-8);
}

TEST(EfficiencyInterval, SignChangeMatchesEnumeration) {
  auto check = [](long n, const Estimator& alt, Interval iv) {
    for (double p = 0.001; p < 1.0; p += 0.001) {
      const double r = mse_exact(mle_p, n, p) / mse_exact(alt, n, p);
      const bool inside = p > iv.lo && p < iv.hi;
      if (std::abs(p - iv.lo) < 1e-3 || std::abs(p - iv.hi) < 1e-3) continue;
      EXPECT_EQ(r > 1.0, inside) << "n=" << n << " p=" << p;
    }
  };
  for (long n : {1L, 4L, 10L, 30L}) {
    check(n, mele_p, efficiency_interval_mele(n));
    check(n, bayes_p, efficiency_interval_bayes(n));
  }
}
