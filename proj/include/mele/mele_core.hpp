#pragma once

// Mean-likelihood and posterior-mean estimation for a scalar parameter on a
// closed interval, evaluated on a fixed Simpson rule.

#include <functional>
#include <string_view>

#include "mele/numerics.hpp"

namespace mele {

/// Log-likelihood over [a, b]. exp(loglik) must be integrable; -inf is
/// allowed (zero likelihood), NaN and +inf are not.
struct LikelihoodCurve {
  std::function<double(double)> loglik;
  double a = 0.0;
  double b = 1.0;
};

enum class PriorKind {
  uniform,
  jeffreys_binomial,     // 1 / sqrt(p (1 - p))
  jeffreys_exponential,  // 1 / mu
  jeffreys_ma1,          // 1 / sqrt(1 - theta^2)
  custom,
};

std::string_view to_string(PriorKind kind);

/// Prior density up to a constant, as a log weight.
///
/// The two arcsine-type kinds (jeffreys_binomial, jeffreys_ma1) diverge at
/// the interval ends; posterior_mean integrates them in the angle phi with
/// theta = c + h sin(phi), which cancels the singularity exactly.
struct PriorSpec {
  PriorKind kind = PriorKind::uniform;
  std::function<double(double)> log_weight;

  bool arcsine_type() const {
    return kind == PriorKind::jeffreys_binomial || kind == PriorKind::jeffreys_ma1;
  }
};

PriorSpec uniform_prior();
PriorSpec jeffreys_binomial_prior();
PriorSpec jeffreys_exponential_prior();
PriorSpec jeffreys_ma1_prior();
PriorSpec custom_prior(std::function<double(double)> log_weight);

/// sum w_i theta_i L_i / sum w_i L_i with L_i = exp(loglik_i - max loglik).
/// Throws DomainError if the rule does not span the curve's domain and
/// DegenerateError if no interior node carries likelihood.
double mele_estimate(const LikelihoodCurve& curve, const QuadratureRule& rule);

double posterior_mean(const LikelihoodCurve& curve, const PriorSpec& prior,
                      const QuadratureRule& rule);

/// int (candidate - theta)^2 L(theta) dtheta with L stabilized as in mele_estimate().
double mean_squared_risk(const LikelihoodCurve& curve, const QuadratureRule& rule,
                         double candidate);

// int L(theta) dtheta with the same stabilization; the normalizing mass
// that links mean_squared_risk at two candidates.
double likelihood_mass(const LikelihoodCurve& curve, const QuadratureRule& rule);

}  // namespace mele
