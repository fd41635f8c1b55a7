#include "mele/ma1.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mele/errors.hpp"

namespace mele::ma1 {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

void require_theta(double theta, const char* what) {
  if (!(std::abs(theta) <= 1.0)) throw DomainError(std::string(what) + ": require |theta| <= 1");
}

void require_w(WStat w, const char* what) {
  if (!(std::abs(w.w) <= 0.5)) throw DomainError(std::string(what) + ": require |W| <= 1/2");
}

double quartic_sum(double theta) {
  const double t2 = theta * theta;
  return 1.0 + t2 + t2 * t2;
}

// Density of U where W = sin(U) / 2, U in [-pi/2, pi/2]; smooth and bounded.
double density_u(double u, double theta) {
  return std::sqrt(quartic_sum(theta)) /
         (std::numbers::pi * (1.0 + theta * theta - theta * std::sin(u)));
}

// P(U <= u).
double cdf_u(double u, double theta) {
  const double root = std::sqrt(quartic_sum(theta));
  const double at = std::atan(((1.0 + theta * theta) * std::tan(u / 2) - theta) / root);
  const double lo = std::atan((-(1.0 + theta * theta) - theta) / root);
  return (at - lo) * 2.0 / std::numbers::pi;
}

double integrate_u(const std::function<double(double)>& g, double lo, double hi) {
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 31>::integrate(g, lo, hi, 12, 1e-10);
}

}  // namespace

WStat w_statistic(double z1, double z2) {
  const double ss = z1 * z1 + z2 * z2;
  if (ss == 0.0) throw DegenerateError("w_statistic: both observations are zero");
  return {std::clamp(-z1 * z2 / ss, -0.5, 0.5)};
}

double conc_lik_n2(double theta, WStat w) {
  require_theta(theta, "conc_lik_n2");
  require_w(w, "conc_lik_n2");
  return std::sqrt(quartic_sum(theta)) / (1.0 + theta * theta - 2.0 * theta * w.w);
}

double mle_n2(WStat w) {
  require_w(w, "mle_n2");
  if (w.w <= -0.25) return -1.0;
  if (w.w >= 0.25) return 1.0;
  // (1 - sqrt(1 - 16 W^2)) / (4 W), rewritten without the cancellation at 0.
  return 4.0 * w.w / (1.0 + std::sqrt(1.0 - 16.0 * w.w * w.w));
}

double density_w(double x, double theta) {
  require_theta(theta, "density_w");
  if (!(std::abs(x) < 0.5)) throw DomainError("density_w: x outside the support |x| < 1/2");
  return 2.0 * std::sqrt(quartic_sum(theta)) /
         (std::numbers::pi * std::sqrt(1.0 - 4.0 * x * x) * (1.0 + theta * theta - 2.0 * theta * x));
}

double cdf_w(double x, double theta) {
  require_theta(theta, "cdf_w");
  if (x <= -0.5) return 0.0;
  if (x >= 0.5) return 1.0;
  return std::clamp(cdf_u(std::asin(2.0 * x), theta), 0.0, 1.0);
}

namespace {

LikelihoodCurve n2_curve(WStat w) {
  return {[w](double theta) { return std::log(conc_lik_n2(theta, w)); }, -1.0, 1.0};
}

}  // namespace

double mele_n2(WStat w, const QuadratureRule& rule) {
  require_w(w, "mele_n2");
  return mele_estimate(n2_curve(w), rule);
}

double bayes_n2(WStat w, const QuadratureRule& rule) {
  require_w(w, "bayes_n2");
  return posterior_mean(n2_curve(w), jeffreys_ma1_prior(), rule);
}

WInterpolant::WInterpolant(const std::function<double(double)>& estimator) : values_(kNodes) {
  for (std::size_t i = 0; i < kNodes; ++i) {
    const double w = -0.5 + static_cast<double>(i) / static_cast<double>(kNodes - 1);
    values_[i] = estimator(std::clamp(w, -0.5, 0.5));
  }
}

double WInterpolant::operator()(double w) const {
  constexpr double h = 1.0 / static_cast<double>(kNodes - 1);
  const double pos = (std::clamp(w, -0.5, 0.5) + 0.5) / h;
  const auto cell = static_cast<std::ptrdiff_t>(std::floor(pos));
  const std::ptrdiff_t first =
      std::clamp<std::ptrdiff_t>(cell - 1, 0, static_cast<std::ptrdiff_t>(kNodes) - 4);
  const double s = pos - static_cast<double>(first);
  // Lagrange cubic through nodes first..first+3, local coordinate s.
  std::array<double, 4> basis{};
  for (int j = 0; j < 4; ++j) {
    double b = 1.0;
    for (int m = 0; m < 4; ++m) {
      if (m != j) b *= (s - m) / static_cast<double>(j - m);
    }
    basis[j] = b;
  }
  double out = 0.0;
  for (int j = 0; j < 4; ++j) out += basis[j] * values_[static_cast<std::size_t>(first + j)];
  return out;
}

WInterpolant mele_n2_interp(const QuadratureRule& rule) {
  return WInterpolant([&rule](double w) { return mele_n2({w}, rule); });
}

WInterpolant bayes_n2_interp(const QuadratureRule& rule) {
  return WInterpolant([&rule](double w) { return bayes_n2({w}, rule); });
}

double risk_n2(const WEstimator& est, double theta, RiskMetric metric) {
  require_theta(theta, "risk_n2");
  auto g = [&](double u) {
    const double e = est(0.5 * std::sin(u)) - theta;
    const double loss = metric == RiskMetric::mse ? e * e : std::abs(e);
    return loss * density_u(u, theta);
  };
  // Split where the closed-form MLE changes branch (W = -1/4, 0, 1/4).
  constexpr std::array<double, 5> cuts{-kHalfPi, -std::numbers::pi / 6, 0.0, std::numbers::pi / 6,
                                       kHalfPi};
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += integrate_u(g, cuts[i], cuts[i + 1]);
  return total;
}

double pmc_n2(const WEstimator& est_a, const WEstimator& est_b, double theta) {
  require_theta(theta, "pmc_n2");
  // 1 when a is strictly closer, 1/2 on a tie, 0 otherwise.
  auto score = [&](double u) {
    const double w = 0.5 * std::sin(u);
    const double da = std::abs(est_a(w) - theta);
    const double db = std::abs(est_b(w) - theta);
    if (std::abs(da - db) <= 1e-12) return 0.5;
    return da < db ? 1.0 : 0.0;
  };

  constexpr int kScan = 4000;
  auto grid = [](int i) { return -kHalfPi + std::numbers::pi * i / kScan; };

  double total = 0.0;
  double seg_start = -kHalfPi;
  double state = score(seg_start);
  double prev_u = seg_start;
  for (int i = 1; i <= kScan; ++i) {
    const double u = i == kScan ? kHalfPi : grid(i);
    const double s = score(u);
    if (s != state) {
      // Locate the switch inside (prev_u, u] by bisection.
      double lo = prev_u;
      double hi = u;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (score(mid) == state) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      const double cut = 0.5 * (lo + hi);
      total += state * (cdf_u(cut, theta) - cdf_u(seg_start, theta));
      seg_start = cut;
      state = s;
    }
    prev_u = u;
  }
  total += state * (cdf_u(kHalfPi, theta) - cdf_u(seg_start, theta));
  return std::clamp(total, 0.0, 1.0);
}

double newbold_loglik(double theta, std::span<const double> z) {
  require_theta(theta, "newbold_loglik");
  const std::size_t n = z.size();
  if (n == 0) throw DomainError("newbold_loglik: empty series");

  // alpha_0 = 0, alpha_j = theta alpha_{j-1} + z_j.
  thread_local std::vector<double> alpha;
  alpha.resize(n + 1);
  alpha[0] = 0.0;
  for (std::size_t j = 1; j <= n; ++j) alpha[j] = theta * alpha[j - 1] + z[j - 1];

  const double t2 = theta * theta;
  double det = 0.0;
  double power = 1.0;
  for (std::size_t j = 0; j <= n; ++j) {
    det += power;
    power *= t2;
  }

  // h'alpha = sum_j theta^j alpha_j by Horner's rule.
  double h_alpha = 0.0;
  for (std::size_t j = n + 1; j-- > 0;) h_alpha = h_alpha * theta + alpha[j];
  const double u = -h_alpha / det;

  double sumsq = 0.0;
  double tj = 1.0;
  for (std::size_t j = 0; j <= n; ++j) {
    const double r = alpha[j] + tj * u;
    sumsq += r * r;
    tj *= theta;
  }
  if (!(sumsq > 0.0)) throw DegenerateError("newbold_loglik: zero residual sum of squares");
  const double nn = static_cast<double>(n);
  return -0.5 * nn * std::log(sumsq / nn) - 0.5 * std::log(det);
}

LikelihoodCurve newbold_curve(std::span<const double> z) {
  return {[z](double theta) { return newbold_loglik(theta, z); }, -1.0, 1.0};
}

Ma1Estimates estimate_ma1(std::span<const double> z, const QuadratureRule& rule,
                          const PriorSpec& prior) {
  if (z.size() < 2) throw DomainError("estimate_ma1: need at least two observations");
  if (std::all_of(z.begin(), z.end(), [](double v) { return v == 0.0; })) {
    throw DegenerateError("estimate_ma1: all observations are zero");
  }
  const LikelihoodCurve curve = newbold_curve(z);
  Ma1Estimates out;
  out.mle = maximize_scalar(curve.loglik, -1.0, 1.0, kMleTolerance).argmax;
  out.mle_on_boundary = std::abs(out.mle) >= 1.0 - kBoundaryTolerance;
  if (out.mle_on_boundary) out.mle = std::copysign(1.0, out.mle);
  out.mele = mele_estimate(curve, rule);
  out.bayes = posterior_mean(curve, prior, rule);
  return out;
}

Ma1Series simulate_ma1(double theta, long n, double sigma_a, RngStream stream,
                       bool estimate_mean) {
  require_theta(theta, "simulate_ma1");
  if (n < 1) throw DomainError("simulate_ma1: n must be >= 1");
  if (!(sigma_a > 0.0)) throw DomainError("simulate_ma1: sigma_a must be > 0");
  GaussianStream gen(stream);
  Ma1Series out;
  out.theta_true = theta;
  out.sigma_a = sigma_a;
  out.z.resize(static_cast<std::size_t>(n));
  double prev = sigma_a * gen.next();
  for (auto& zt : out.z) {
    const double a = sigma_a * gen.next();
    zt = a - theta * prev;
    prev = a;
  }
  if (estimate_mean) {
    const double mean = std::accumulate(out.z.begin(), out.z.end(), 0.0) / static_cast<double>(n);
    for (auto& zt : out.z) zt -= mean;
  }
  return out;
}

}  // namespace mele::ma1
