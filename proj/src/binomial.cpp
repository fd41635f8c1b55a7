#include "mele/binomial.hpp"

#include <cmath>

#include "mele/errors.hpp"

namespace mele::binomial {

BinomialData::BinomialData(long successes, long trials) : x(successes), n(trials) {
  if (n < 1) throw DomainError("binomial: trial count must be >= 1");
  if (x < 0 || x > n) throw DomainError("binomial: require 0 <= x <= n");
}

double mle_p(const BinomialData& d) {
  return static_cast<double>(d.x) / static_cast<double>(d.n);
}

double mele_p(const BinomialData& d) {
  return static_cast<double>(d.x + 1) / static_cast<double>(d.n + 2);
}

double bayes_p(const BinomialData& d) {
  return static_cast<double>(1 + 4 * d.x) / static_cast<double>(2 + 4 * d.n);
}

namespace {

void check_args(long n, double p) {
  if (n < 1) throw DomainError("binomial: n must be >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("binomial: p must lie in [0, 1]");
}

}  // namespace

double binomial_pmf(long x, long n, double p) {
  if (x < 0 || x > n) return 0.0;
  if (p == 0.0) return x == 0 ? 1.0 : 0.0;
  if (p == 1.0) return x == n ? 1.0 : 0.0;
  const double nn = static_cast<double>(n);
  const double xx = static_cast<double>(x);
  const double log_choose = std::lgamma(nn + 1) - std::lgamma(xx + 1) - std::lgamma(nn - xx + 1);
  return std::exp(log_choose + xx * std::log(p) + (nn - xx) * std::log1p(-p));
}

double mse_exact(const Estimator& est, long n, double p) {
  check_args(n, p);
  double sum = 0.0;
  for (long x = 0; x <= n; ++x) {
    const double prob = binomial_pmf(x, n, p);
    if (prob == 0.0) continue;
    const double e = est(BinomialData(x, n)) - p;
    sum += prob * e * e;
  }
  return sum;
}

double pmc_exact(const Estimator& est_a, const Estimator& est_b, long n, double p) {
  check_args(n, p);
  double closer = 0.0;
  double tied = 0.0;
  double total = 0.0;
  for (long x = 0; x <= n; ++x) {
    const double prob = binomial_pmf(x, n, p);
    if (prob == 0.0) continue;
    total += prob;
    const BinomialData d(x, n);
    const double da = std::abs(est_a(d) - p);
    const double db = std::abs(est_b(d) - p);
    if (std::abs(da - db) <= kTieTolerance) {
      tied += prob;
    } else if (da < db) {
      closer += prob;
    }
  }
  // Normalized so that rounding in the pmf cannot break reflexivity.
  return (closer + 0.5 * tied) / total;
}

Interval efficiency_interval_mele(long n) {
  if (n < 1) throw DomainError("efficiency_interval_mele: n must be >= 1");
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(2 * nn * nn + 3 * nn + 1);
  const double denom = 2 * (2 * nn + 1);
  return {(2 * nn + 1 - root) / denom, (2 * nn + 1 + root) / denom};
}

Interval efficiency_interval_bayes(long n) {
  if (n < 1) throw DomainError("efficiency_interval_bayes: n must be >= 1");
  const double nn = static_cast<double>(n);
  const double root = std::sqrt(1 + 9 * nn + 20 * nn * nn);
  const double denom = 2 * (1 + 5 * nn);
  return {(1 + 5 * nn - root) / denom, (1 + 5 * nn + root) / denom};
}

}  // namespace mele::binomial
