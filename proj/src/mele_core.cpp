#include "mele/mele_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "mele/errors.hpp"

namespace mele {

std::string_view to_string(PriorKind kind) {
  switch (kind) {
    case PriorKind::uniform: return "uniform";
    case PriorKind::jeffreys_binomial: return "jeffreys_binomial";
    case PriorKind::jeffreys_exponential: return "jeffreys_exponential";
    case PriorKind::jeffreys_ma1: return "jeffreys_ma1";
    case PriorKind::custom: return "custom";
  }
  return "unknown";
}

PriorSpec uniform_prior() {
  return {PriorKind::uniform, [](double) { return 0.0; }};
}

PriorSpec jeffreys_binomial_prior() {
  return {PriorKind::jeffreys_binomial, [](double p) { return -0.5 * std::log(p * (1.0 - p)); }};
}

PriorSpec jeffreys_exponential_prior() {
  return {PriorKind::jeffreys_exponential, [](double mu) { return -std::log(mu); }};
}

PriorSpec jeffreys_ma1_prior() {
  return {PriorKind::jeffreys_ma1,
          [](double theta) { return -0.5 * std::log1p(-theta * theta); }};
}

PriorSpec custom_prior(std::function<double(double)> log_weight) {
  return {PriorKind::custom, std::move(log_weight)};
}

namespace {

void require_matching_domain(const LikelihoodCurve& curve, const QuadratureRule& rule) {
  if (rule.a() != curve.a || rule.b() != curve.b) {
    throw DomainError("quadrature rule interval does not match the curve domain");
  }
}

// Log weights at every node of `rule`, with theta = map(node), shifted so the
// largest is zero.
template <class Map, class LogWeight>
std::vector<double> stabilized_weights(const QuadratureRule& rule, Map map, LogWeight log_w,
                                       std::vector<double>& thetas) {
  const auto x = rule.nodes();
  std::vector<double> logs(x.size());
  thetas.resize(x.size());
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < x.size(); ++i) {
    thetas[i] = map(x[i]);
    const double v = log_w(thetas[i]);
    if (std::isnan(v) || v == std::numeric_limits<double>::infinity()) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "log-likelihood is " << v << " at node " << i << " (theta = " << thetas[i] << ")";
      throw EvaluationError(msg.str());
    }
    logs[i] = v;
    top = std::max(top, v);
  }
  if (!std::isfinite(top)) throw DegenerateError("likelihood is zero at every quadrature node");
  const auto w = rule.weights();
  bool interior_mass = false;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    logs[i] = w[i] * std::exp(logs[i] - top);
    if (i > 0 && i + 1 < logs.size() && logs[i] > 0.0) interior_mass = true;
  }
  if (!interior_mass) {
    throw DegenerateError("likelihood vanishes at every interior quadrature node");
  }
  return logs;
}

double weighted_mean(const std::vector<double>& weights, const std::vector<double>& thetas) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    num += weights[i] * thetas[i];
    den += weights[i];
  }
  return num / den;
}

}  // namespace

double mele_estimate(const LikelihoodCurve& curve, const QuadratureRule& rule) {
  require_matching_domain(curve, rule);
  std::vector<double> thetas;
  const auto w = stabilized_weights(rule, [](double t) { return t; }, curve.loglik, thetas);
  return weighted_mean(w, thetas);
}

double posterior_mean(const LikelihoodCurve& curve, const PriorSpec& prior,
                      const QuadratureRule& rule) {
  require_matching_domain(curve, rule);
  if (prior.kind == PriorKind::uniform) return mele_estimate(curve, rule);

  std::vector<double> thetas;
  if (prior.arcsine_type()) {
    // 1/sqrt((theta-a)(b-theta)) dtheta = dphi under theta = c + h sin(phi).
    const double c = 0.5 * (curve.a + curve.b);
    const double h = 0.5 * (curve.b - curve.a);
    const QuadratureRule angle_rule(rule.panels(), -std::numbers::pi / 2, std::numbers::pi / 2);
    auto map = [&](double phi) {
      return std::clamp(c + h * std::sin(phi), curve.a, curve.b);
    };
    const auto w = stabilized_weights(angle_rule, map, curve.loglik, thetas);
    return weighted_mean(w, thetas);
  }
  auto log_post = [&](double t) {
    const double ll = curve.loglik(t);
    if (ll == -std::numeric_limits<double>::infinity()) return ll;
    return ll + prior.log_weight(t);
  };
  const auto w = stabilized_weights(rule, [](double t) { return t; }, log_post, thetas);
  return weighted_mean(w, thetas);
}

double mean_squared_risk(const LikelihoodCurve& curve, const QuadratureRule& rule,
                         double candidate) {
  require_matching_domain(curve, rule);
  if (candidate < curve.a || candidate > curve.b) {
    throw DomainError("mean_squared_risk: candidate outside the curve domain");
  }
  std::vector<double> thetas;
  const auto w = stabilized_weights(rule, [](double t) { return t; }, curve.loglik, thetas);
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double e = candidate - thetas[i];
    sum += w[i] * e * e;
  }
  return rule.scale() * sum;
}

double likelihood_mass(const LikelihoodCurve& curve, const QuadratureRule& rule) {
  require_matching_domain(curve, rule);
  std::vector<double> thetas;
  const auto w = stabilized_weights(rule, [](double t) { return t; }, curve.loglik, thetas);
  double sum = 0.0;
  for (double v : w) sum += v;
  return rule.scale() * sum;
}

}  // namespace mele
