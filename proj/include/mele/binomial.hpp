#pragma once

// Bernoulli trials: closed-form estimators of p and exact risk / closeness
// comparisons by enumerating every outcome x = 0..n.

#include <functional>
#include <utility>

namespace mele::binomial {

struct BinomialData {
  long x;
  long n;

  // Throws DomainError unless 0 <= x <= n and n >= 1.
  BinomialData(long successes, long trials);
};

using Estimator = std::function<double(const BinomialData&)>;

double mle_p(const BinomialData& d);    // x / n
double mele_p(const BinomialData& d);   // (x + 1) / (n + 2)
double bayes_p(const BinomialData& d);  // (1 + 4x) / (2 + 4n)

/// Probability of x successes in n trials, via lgamma in the log domain.
/// p = 0 and p = 1 are handled as point masses.
double binomial_pmf(long x, long n, double p);

double mse_exact(const Estimator& est, long n, double p);

/// Modified Pitman closeness: P(|a - p| < |b - p|) + P(tie) / 2, where
/// |a - p| and |b - p| count as tied within 1e-12.
double pmc_exact(const Estimator& est_a, const Estimator& est_b, long n, double p);

inline constexpr double kTieTolerance = 1e-12;

struct Interval {
  double lo;
  double hi;
};

/// Open interval of p on which mse(mle) / mse(mele) > 1.
Interval efficiency_interval_mele(long n);
/// Open interval of p on which mse(mle) / mse(bayes_p) > 1.
Interval efficiency_interval_bayes(long n);

}  // namespace mele::binomial
