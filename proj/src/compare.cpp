#include "mele/compare.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/normal.hpp>
#include <omp.h>

#include "mele/errors.hpp"

namespace mele::compare {

void PairedErrors::add(double ref_estimate, double alt_estimate) {
  const double er = ref_estimate - theta;
  const double ea = alt_estimate - theta;
  sq_ref.push_back(er * er);
  sq_alt.push_back(ea * ea);
  abs_ref.push_back(std::abs(er));
  abs_alt.push_back(std::abs(ea));
}

double z_quantile(double conf) {
  if (!(conf > 0.0 && conf < 1.0)) throw DomainError("confidence level must lie in (0, 1)");
  return boost::math::quantile(boost::math::normal(), 1.0 - (1.0 - conf) / 2.0);
}

namespace {

void check_lengths(const PairedErrors& pe) {
  const std::size_t n = pe.sq_ref.size();
  if (pe.sq_alt.size() != n || pe.abs_ref.size() != n || pe.abs_alt.size() != n) {
    throw DomainError("paired errors: vectors differ in length");
  }
  if (n < kMinReplications) throw DomainError("paired errors: need at least 30 replications");
}

double mean(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

}  // namespace

Estimate relative_efficiency(const PairedErrors& pe, double conf) {
  check_lengths(pe);
  const double m_ref = mean(pe.sq_ref);
  const double m_alt = mean(pe.sq_alt);
  if (!(m_alt > 0.0)) throw DegenerateError("relative_efficiency: alternative has zero MSE");
  if (m_ref == 0.0) return {0.0, 0.0, 0.0};

  const auto n = static_cast<double>(pe.n_rep());
  double v_ref = 0.0;
  double v_alt = 0.0;
  double cov = 0.0;
  for (std::size_t i = 0; i < pe.n_rep(); ++i) {
    const double dr = pe.sq_ref[i] - m_ref;
    const double da = pe.sq_alt[i] - m_alt;
    v_ref += dr * dr;
    v_alt += da * da;
    cov += dr * da;
  }
  v_ref /= n - 1;
  v_alt /= n - 1;
  cov /= n - 1;
  // Delta method for log(m_ref / m_alt).
  const double var_log =
      std::max(0.0, (v_ref / (m_ref * m_ref) + v_alt / (m_alt * m_alt) - 2 * cov / (m_ref * m_alt)) / n);
  const double r = m_ref / m_alt;
  const double half = z_quantile(conf) * std::sqrt(var_log);
  return {r, r * std::exp(-half), r * std::exp(half)};
}

Estimate pmc_empirical(const PairedErrors& pe, double conf) {
  check_lengths(pe);
  double closer = 0.0;
  double ties = 0.0;
  for (std::size_t i = 0; i < pe.n_rep(); ++i) {
    const double da = pe.abs_alt[i];
    const double dr = pe.abs_ref[i];
    if (std::abs(da - dr) <= 1e-12) {
      ties += 1.0;
    } else if (da < dr) {
      closer += 1.0;
    }
  }
  const auto n = static_cast<double>(pe.n_rep());
  const double p = (closer + 0.5 * ties) / n;
  const double half = z_quantile(conf) * std::sqrt(p * (1.0 - p) / n);
  return {p, std::max(0.0, p - half), std::min(1.0, p + half)};
}

ComparisonPoint summarize(const PairedErrors& pe, double conf) {
  const auto r = relative_efficiency(pe, conf);
  const auto pmc = pmc_empirical(pe, conf);
  ComparisonPoint out;
  out.theta = pe.theta;
  out.mse_mle = mean(pe.sq_ref);
  out.mse_alt = mean(pe.sq_alt);
  out.r = r.value;
  out.r_lo = r.lo;
  out.r_hi = r.hi;
  out.pmc = pmc.value;
  out.pmc_lo = pmc.lo;
  out.pmc_hi = pmc.hi;
  out.n_rep = pe.n_rep();
  out.seed = pe.seed;
  return out;
}

void SimConfig::validate() const {
  if (theta_grid.empty()) throw DomainError("sim config: empty theta grid");
  for (double t : theta_grid) {
    if (!(std::abs(t) <= 1.0)) throw DomainError("sim config: theta grid must lie in [-1, 1]");
  }
  if (n < 2) throw DomainError("sim config: series length must be >= 2");
  if (n_rep < kMinReplications) throw DomainError("sim config: n_rep must be >= 30");
  if (panels < 1) throw DomainError("sim config: quadrature panels must be >= 1");
  if (!(conf > 0.0 && conf < 1.0)) throw DomainError("sim config: conf must lie in (0, 1)");
  if (threads < 0) throw DomainError("sim config: threads must be >= 0");
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  for (int i = -20; i <= 20; ++i) grid.push_back(i / 20.0);
  return grid;
}

SimConfig default_sim_config() {
  SimConfig cfg;
  cfg.theta_grid = default_theta_grid();
  return cfg;
}

RngStream replication_stream(const SimConfig& cfg, std::size_t grid_index, std::size_t rep) {
  return {cfg.seed, static_cast<std::uint64_t>(grid_index) * cfg.n_rep + rep};
}

std::vector<ma1::Ma1Estimates> simulate_estimates(const SimConfig& cfg, Execution exec) {
  cfg.validate();
  const QuadratureRule rule(cfg.panels, -1.0, 1.0);
  const std::size_t per_theta = cfg.n_rep;
  const auto total = static_cast<std::ptrdiff_t>(cfg.theta_grid.size() * per_theta);
  std::vector<ma1::Ma1Estimates> out(static_cast<std::size_t>(total));

  auto run_one = [&](std::ptrdiff_t k) {
    const auto idx = static_cast<std::size_t>(k);
    const std::size_t g = idx / per_theta;
    const std::size_t rep = idx % per_theta;
    const auto series = ma1::simulate_ma1(cfg.theta_grid[g], cfg.n, 1.0,
                                          replication_stream(cfg, g, rep), cfg.estimate_mean);
    out[idx] = ma1::estimate_ma1(series.z, rule, cfg.bayes_prior);
  };

  if (exec == Execution::serial) {
    for (std::ptrdiff_t k = 0; k < total; ++k) run_one(k);
    return out;
  }
  const int threads = cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
  for (std::ptrdiff_t k = 0; k < total; ++k) run_one(k);
  return out;
}

std::vector<SweepPoint> summarize_sweep(const SimConfig& cfg,
                                        std::span<const ma1::Ma1Estimates> estimates) {
  if (estimates.size() != cfg.theta_grid.size() * cfg.n_rep) {
    throw DomainError("summarize_sweep: estimate count does not match the configuration");
  }
  std::vector<SweepPoint> points;
  points.reserve(cfg.theta_grid.size());
  for (std::size_t g = 0; g < cfg.theta_grid.size(); ++g) {
    const double theta = cfg.theta_grid[g];
    PairedErrors mele_pe;
    mele_pe.theta = theta;
    mele_pe.seed = cfg.seed;
    PairedErrors bayes_pe = mele_pe;
    std::size_t plus = 0;
    std::size_t minus = 0;
    for (std::size_t rep = 0; rep < cfg.n_rep; ++rep) {
      const auto& e = estimates[g * cfg.n_rep + rep];
      mele_pe.add(e.mle, e.mele);
      bayes_pe.add(e.mle, e.bayes);
      if (e.mle_on_boundary) ++(e.mle > 0 ? plus : minus);
    }
    SweepPoint p;
    p.theta = theta;
    p.mele_vs_mle = summarize(mele_pe, cfg.conf);
    p.bayes_vs_mle = summarize(bayes_pe, cfg.conf);
    p.pileup_plus = static_cast<double>(plus) / static_cast<double>(cfg.n_rep);
    p.pileup_minus = static_cast<double>(minus) / static_cast<double>(cfg.n_rep);
    points.push_back(p);
  }
  return points;
}

std::vector<SweepPoint> sweep(const SimConfig& cfg, Execution exec) {
  const auto estimates = simulate_estimates(cfg, exec);
  return summarize_sweep(cfg, estimates);
}

}  // namespace mele::compare
