#pragma once

// First-order moving-average model Z_t = A_t - theta A_{t-1}, A_t iid
// N(0, sigma_a^2), |theta| <= 1, mean fixed at zero.
//
// Sign convention: the "plus" form Z_t = A_t + theta' A_{t-1} corresponds
// to theta' = -theta. Every likelihood below uses the minus form.

#include <functional>
#include <span>
#include <vector>

#include "mele/mele_core.hpp"
#include "mele/numerics.hpp"

namespace mele::ma1 {

struct Ma1Series {
  std::vector<double> z;
  double theta_true = 0.0;
  double sigma_a = 1.0;
};

// W = -Z1 Z2 / (Z1^2 + Z2^2); |W| <= 1/2.
struct WStat {
  double w = 0.0;
};

WStat w_statistic(double z1, double z2);

/// Exact n = 2 concentrated likelihood (not log), up to a constant:
/// sqrt(1 + theta^2 + theta^4) / (1 + theta^2 - 2 theta W).
double conc_lik_n2(double theta, WStat w);

/// Closed-form n = 2 MLE; equals -1 for W <= -1/4 and +1 for W >= 1/4.
double mle_n2(WStat w);

/// Density of W under theta on |x| < 1/2.
double density_w(double x, double theta);

/// P(W <= x) under theta, in closed form.
double cdf_w(double x, double theta);

double mele_n2(WStat w, const QuadratureRule& rule);
double bayes_n2(WStat w, const QuadratureRule& rule);

/// Piecewise-cubic table of an n = 2 estimator over W, 401 equally spaced
/// nodes on [-1/2, 1/2]; each evaluation uses the local 4-point cubic.
class WInterpolant {
 public:
  static constexpr std::size_t kNodes = 401;

  explicit WInterpolant(const std::function<double(double)>& estimator);

  double operator()(double w) const;

 private:
  std::vector<double> values_;
};

WInterpolant mele_n2_interp(const QuadratureRule& rule);
WInterpolant bayes_n2_interp(const QuadratureRule& rule);

enum class RiskMetric { mse, abs };

using WEstimator = std::function<double(double)>;

/// E[(est(W) - theta)^2] (or E|est(W) - theta|) under the exact W law.
double risk_n2(const WEstimator& est, double theta, RiskMetric metric = RiskMetric::mse);

/// P(|a - theta| < |b - theta|) + P(tie) / 2 under the exact W law.
double pmc_n2(const WEstimator& est_a, const WEstimator& est_b, double theta);

/// Exact concentrated log-likelihood
///   -(n/2) log(S(theta)/n) - (1/2) log D
/// with D = 1 + theta^2 + ... + theta^(2n), evaluated in O(n) by the
/// forward recursion alpha_j = theta alpha_{j-1} + Z_j and Horner's rule.
double newbold_loglik(double theta, std::span<const double> z);

LikelihoodCurve newbold_curve(std::span<const double> z);

inline constexpr double kBoundaryTolerance = 1e-6;
inline constexpr double kMleTolerance = 1e-8;

struct Ma1Estimates {
  double mle = 0.0;
  bool mle_on_boundary = false;
  double mele = 0.0;
  double bayes = 0.0;
};

Ma1Estimates estimate_ma1(std::span<const double> z, const QuadratureRule& rule,
                          const PriorSpec& prior);

/// Draws A_0..A_n from the stream (scaled by sigma_a) and returns
/// Z_t = A_t - theta A_{t-1}, t = 1..n, optionally demeaned.
Ma1Series simulate_ma1(double theta, long n, double sigma_a, RngStream stream,
                       bool estimate_mean = false);

}  // namespace mele::ma1
