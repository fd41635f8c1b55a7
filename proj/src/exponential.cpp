#include "mele/exponential.hpp"

#include <cmath>
#include <string>

#include "mele/errors.hpp"
#include "mele/numerics.hpp"

namespace mele::exponential {

namespace {

void require_n(long n, long min_n, const char* what) {
  if (n < min_n) {
    throw DomainError(std::string(what) + ": requires n >= " + std::to_string(min_n));
  }
}

long min_n(Alternative which) { return which == Alternative::mele ? kMinMeleN : kMinBayesN; }

}  // namespace

ExponentialData::ExponentialData(double total, long count) : t(total), n(count) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("exponential: T must be > 0");
  if (n < 1) throw DomainError("exponential: n must be >= 1");
}

double mle_mu(const ExponentialData& d) { return d.t / static_cast<double>(d.n); }

double mele_mu(const ExponentialData& d) {
  require_n(d.n, kMinMeleN, "mele_mu");
  return d.t / static_cast<double>(d.n - 2);
}

double bayes_mu(const ExponentialData& d) {
  require_n(d.n, kMinBayesN, "bayes_mu");
  return d.t / static_cast<double>(d.n - 1);
}

double mse_scaled_gamma(double divisor, long n, double mu) {
  if (!(divisor > 0.0)) throw DomainError("mse_scaled_gamma: divisor must be > 0");
  require_n(n, 1, "mse_scaled_gamma");
  const double nn = static_cast<double>(n);
  return mu * mu * (nn * (nn + 1) / (divisor * divisor) - 2 * nn / divisor + 1);
}

double rel_eff_mele(long n) {
  require_n(n, kMinMeleN, "rel_eff_mele");
  const double nn = static_cast<double>(n);
  return (nn - 2) * (nn - 2) / (nn * (nn + 4));
}

double rel_eff_bayes(long n) {
  require_n(n, kMinBayesN, "rel_eff_bayes");
  const double nn = static_cast<double>(n);
  return (nn - 1) * (nn - 1) / (nn * (nn + 1));
}

double pmc_threshold(Alternative which, long n) {
  require_n(n, min_n(which), "pmc_vs_mle");
  const double nn = static_cast<double>(n);
  if (which == Alternative::mele) return nn * (nn - 2) / (nn - 1);
  return 2 * nn * (nn - 1) / (2 * nn - 1);
}

double pmc_vs_mle(Alternative which, long n) {
  return reg_incomplete_gamma_p(static_cast<double>(n), pmc_threshold(which, n));
}

}  // namespace mele::exponential
