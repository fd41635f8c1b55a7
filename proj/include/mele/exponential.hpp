#pragma once

// Exponential lifetimes with mean mu. Everything depends on the data only
// through T = sum X_i, which is Gamma(n, mu).

namespace mele::exponential {

struct ExponentialData {
  double t;  // sum of observations
  long n;

  // Throws DomainError unless t > 0 and n >= 1.
  ExponentialData(double total, long count);
};

enum class Alternative { mele, bayes };

// Smallest n for which each estimator is defined.
inline constexpr long kMinMleN = 1;
inline constexpr long kMinBayesN = 2;
inline constexpr long kMinMeleN = 3;

double mle_mu(const ExponentialData& d);    // T / n
double mele_mu(const ExponentialData& d);   // T / (n - 2)
double bayes_mu(const ExponentialData& d);  // T / (n - 1)

/// E[(T/c - mu)^2] for T ~ Gamma(n, mu):
/// mu^2 (n (n + 1) / c^2 - 2 n / c + 1).
double mse_scaled_gamma(double divisor, long n, double mu);

double rel_eff_mele(long n);   // (n - 2)^2 / (n (n + 4))
double rel_eff_bayes(long n);  // (n - 1)^2 / (n (n + 1))

/// Threshold b such that the alternative is closer than T/n exactly when
/// T < b mu.
double pmc_threshold(Alternative which, long n);

/// PMC(alternative, mle) = P(n, b); free of mu.
double pmc_vs_mle(Alternative which, long n);

}  // namespace mele::exponential
