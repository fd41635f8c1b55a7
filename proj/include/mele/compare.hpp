#pragma once

// Estimator comparison from paired simulation: relative efficiency with a
// delta-method interval on log R, modified Pitman closeness with a Wald
// interval, and the MA(1) sweep that produces both.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mele/ma1.hpp"
#include "mele/mele_core.hpp"

namespace mele::compare {

/// Errors of a reference estimator (the MLE) and an alternative on the
/// same simulated data sets.
struct PairedErrors {
  std::vector<double> sq_ref;
  std::vector<double> sq_alt;
  std::vector<double> abs_ref;
  std::vector<double> abs_alt;
  double theta = 0.0;
  std::uint64_t seed = 0;

  std::size_t n_rep() const { return sq_ref.size(); }
  void add(double ref_estimate, double alt_estimate);
};

struct Estimate {
  double value;
  double lo;
  double hi;
};

inline constexpr double kDefaultConfidence = 0.999;
inline constexpr std::size_t kMinReplications = 30;

/// Two-sided standard normal quantile: 3.2905... at conf = 0.999.
double z_quantile(double conf);

/// R = mean(sq_ref) / mean(sq_alt); R > 1 favours the alternative.
Estimate relative_efficiency(const PairedErrors& pe, double conf = kDefaultConfidence);

/// PMC(alt, ref) = (#{abs_alt < abs_ref} + #{ties} / 2) / n_rep, ties
/// within 1e-12; the Wald interval is clipped to [0, 1].
Estimate pmc_empirical(const PairedErrors& pe, double conf = kDefaultConfidence);

struct ComparisonPoint {
  double theta = 0.0;
  double mse_mle = 0.0;
  double mse_alt = 0.0;
  double r = 0.0;
  double r_lo = 0.0;
  double r_hi = 0.0;
  double pmc = 0.0;
  double pmc_lo = 0.0;
  double pmc_hi = 0.0;
  std::size_t n_rep = 0;
  std::uint64_t seed = 0;
};

ComparisonPoint summarize(const PairedErrors& pe, double conf = kDefaultConfidence);

inline constexpr std::uint64_t kDefaultSeed = 19990401;

struct SimConfig {
  std::vector<double> theta_grid;
  long n = 50;
  std::size_t n_rep = 10000;
  std::uint64_t seed = kDefaultSeed;
  PriorSpec bayes_prior = jeffreys_ma1_prior();
  bool estimate_mean = false;
  std::size_t panels = 100;
  double conf = kDefaultConfidence;
  int threads = 0;  // 0: OpenMP default

  // Throws DomainError on an invalid configuration.
  void validate() const;
};

// theta = -1, -0.95, ..., 0.95, 1.
std::vector<double> default_theta_grid();

SimConfig default_sim_config();

// Replication `rep` at grid index `i` draws from stream i * n_rep + rep.
RngStream replication_stream(const SimConfig& cfg, std::size_t grid_index, std::size_t rep);

enum class Execution { serial, parallel };

/// Estimates for every (grid point, replication), grid-major. The parallel
/// path produces bit-identical output to the serial one.
std::vector<ma1::Ma1Estimates> simulate_estimates(const SimConfig& cfg,
                                                  Execution exec = Execution::parallel);

struct SweepPoint {
  double theta = 0.0;
  ComparisonPoint mele_vs_mle;
  ComparisonPoint bayes_vs_mle;
  double pileup_plus = 0.0;   // fraction with mle = +1
  double pileup_minus = 0.0;  // fraction with mle = -1
};

std::vector<SweepPoint> summarize_sweep(const SimConfig& cfg,
                                        std::span<const ma1::Ma1Estimates> estimates);

std::vector<SweepPoint> sweep(const SimConfig& cfg, Execution exec = Execution::parallel);

}  // namespace mele::compare
