#pragma once

// Subcommand implementations for the mele CLI. Each writes CSV (or the fit
// report) to the given stream so tests can drive them without a process.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mele/compare.hpp"

namespace mele::cli {

// Column order of every CSV the CLI writes.
inline constexpr const char* kCsvHeader =
    "model,comparison,x,n,mse_mle,mse_alt,r,r_lo,r_hi,pmc,pmc_lo,pmc_hi,n_rep,seed,"
    "pileup_plus,pileup_minus";

// Fixed-width rendering: 12 significant digits.
std::string format_real(double v);

// lo, lo + step, ... with hi appended when the steps fall short of it.
std::vector<double> make_grid(double lo, double hi, double step);

struct BinomialOptions {
  std::vector<long> n{10, 30};
  double step = 0.005;
};

struct ExponentialOptions {
  std::vector<long> n;  // empty: 3..100
};

struct Ma1Exact2Options {
  double step = 0.05;
  std::size_t panels = 100;
};

struct Ma1SimOptions {
  long n = 50;
  std::size_t n_rep = 10000;
  std::uint64_t seed = compare::kDefaultSeed;
  std::string prior = "jeffreys";
  bool estimate_mean = false;
  double step = 0.05;
  int threads = 0;
};

struct FitOptions {
  std::string path;
  std::string model;
  std::string prior = "jeffreys";
  bool csv = false;
};

void cmd_binomial(const BinomialOptions& opt, std::ostream& out);
void cmd_exponential(const ExponentialOptions& opt, std::ostream& out);
void cmd_ma1_exact2(const Ma1Exact2Options& opt, std::ostream& out);
void cmd_ma1_sim(const Ma1SimOptions& opt, std::ostream& out);
void cmd_fit(const FitOptions& opt, std::ostream& out);

// Rows for an already computed sweep.
void write_sweep(const compare::SimConfig& cfg, long n,
                 const std::vector<compare::SweepPoint>& points, std::ostream& out);

// Reads `path` as whitespace/newline separated reals, skipping blank lines
// and '#' comments. Parse failures raise DomainError naming the line.
std::vector<double> read_reals(const std::string& path);

}  // namespace mele::cli
