#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>

#include "mele/binomial.hpp"
#include "mele/errors.hpp"
#include "mele/exponential.hpp"
#include "mele/ma1.hpp"

namespace mele::cli {

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  std::vector<double> grid;
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
  for (long i = 0; i <= count; ++i) grid.push_back(lo + static_cast<double>(i) * step);
  if (hi - grid.back() > 1e-12) {
    grid.push_back(hi);
  } else {
    grid.back() = hi;
  }
  return grid;
}

namespace {

struct Row {
  std::string model;
  std::string comparison;
  double x = 0.0;
  std::optional<long> n;
  double mse_mle = 0.0;
  double mse_alt = 0.0;
  double r = 0.0;
  std::optional<double> r_lo, r_hi;
  double pmc = 0.0;
  std::optional<double> pmc_lo, pmc_hi;
  std::optional<std::size_t> n_rep;
  std::optional<std::uint64_t> seed;
  std::optional<double> pileup_plus, pileup_minus;
};

template <class T>
std::string cell(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_floating_point_v<T>) {
    return format_real(*v);
  } else {
    return std::to_string(*v);
  }
}

void write_row(const Row& row, std::ostream& out) {
  out << row.model << ',' << row.comparison << ',' << format_real(row.x) << ',' << cell(row.n)
      << ',' << format_real(row.mse_mle) << ',' << format_real(row.mse_alt) << ','
      << format_real(row.r) << ',' << cell(row.r_lo) << ',' << cell(row.r_hi) << ','
      << format_real(row.pmc) << ',' << cell(row.pmc_lo) << ',' << cell(row.pmc_hi) << ','
      << cell(row.n_rep) << ',' << cell(row.seed) << ',' << cell(row.pileup_plus) << ','
      << cell(row.pileup_minus) << '\n';
}

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

void check_step(double step) {
  if (!(step > 0.0 && step <= 0.5)) throw DomainError("--grid-step must lie in (0, 0.5]");
}

PriorSpec parse_prior(const std::string& name) {
  if (name == "jeffreys") return jeffreys_ma1_prior();
  if (name == "uniform") return uniform_prior();
  throw DomainError("unknown prior '" + name + "' (expected uniform or jeffreys)");
}

}  // namespace

void cmd_binomial(const BinomialOptions& opt, std::ostream& out) {
  check_step(opt.step);
  if (opt.n.empty()) throw DomainError("binomial: at least one --n is required");
  for (long n : opt.n) {
    if (n < 1) throw DomainError("binomial: --n must be >= 1");
  }
  const auto grid = make_grid(0.0, 1.0, opt.step);
  out << kCsvHeader << '\n';
  const binomial::Estimator mle = binomial::mle_p;
  const std::pair<const char*, binomial::Estimator> alternatives[] = {
      {"mele_vs_mle", binomial::mele_p}, {"bayes_vs_mle", binomial::bayes_p}};
  for (const auto& [label, alt] : alternatives) {
    for (long n : opt.n) {
      for (double p : grid) {
        Row row{.model = "binomial", .comparison = label, .x = p, .n = n};
        row.mse_mle = binomial::mse_exact(mle, n, p);
        row.mse_alt = binomial::mse_exact(alt, n, p);
        row.r = ratio(row.mse_mle, row.mse_alt);
        row.pmc = binomial::pmc_exact(alt, mle, n, p);
        write_row(row, out);
      }
    }
  }
  for (long n : opt.n) {
    const auto m = binomial::efficiency_interval_mele(n);
    const auto b = binomial::efficiency_interval_bayes(n);
    out << "# efficiency_interval mele n=" << n << " lo=" << format_real(m.lo)
        << " hi=" << format_real(m.hi) << '\n';
    out << "# efficiency_interval bayes n=" << n << " lo=" << format_real(b.lo)
        << " hi=" << format_real(b.hi) << '\n';
  }
}

void cmd_exponential(const ExponentialOptions& opt, std::ostream& out) {
  std::vector<long> ns = opt.n;
  if (ns.empty()) {
    ns.resize(98);
    std::iota(ns.begin(), ns.end(), 3L);
  }
  for (long n : ns) {
    if (n < exponential::kMinBayesN) throw DomainError("exponential: --n must be >= 2");
  }
  using exponential::Alternative;
  out << kCsvHeader << '\n';
  const std::tuple<const char*, Alternative, long> alternatives[] = {
      {"mele_vs_mle", Alternative::mele, exponential::kMinMeleN},
      {"bayes_vs_mle", Alternative::bayes, exponential::kMinBayesN}};
  for (const auto& [label, which, min_n] : alternatives) {
    for (long n : ns) {
      if (n < min_n) continue;
      const double nn = static_cast<double>(n);
      const double divisor = which == Alternative::mele ? nn - 2 : nn - 1;
      Row row{.model = "exponential", .comparison = label, .x = nn, .n = n};
      row.mse_mle = exponential::mse_scaled_gamma(nn, n, 1.0);
      row.mse_alt = exponential::mse_scaled_gamma(divisor, n, 1.0);
      row.r = which == Alternative::mele ? exponential::rel_eff_mele(n)
                                         : exponential::rel_eff_bayes(n);
      row.pmc = exponential::pmc_vs_mle(which, n);
      write_row(row, out);
    }
  }
}

void cmd_ma1_exact2(const Ma1Exact2Options& opt, std::ostream& out) {
  check_step(opt.step);
  const QuadratureRule rule(opt.panels, -1.0, 1.0);
  const ma1::WInterpolant mele_w = ma1::mele_n2_interp(rule);
  const ma1::WInterpolant bayes_w = ma1::bayes_n2_interp(rule);
  const ma1::WEstimator mle = [](double w) { return ma1::mle_n2({w}); };
  const auto grid = make_grid(-1.0, 1.0, opt.step);

  out << kCsvHeader << '\n';
  const std::pair<const char*, ma1::WEstimator> alternatives[] = {
      {"mele_vs_mle", std::cref(mele_w)}, {"bayes_vs_mle", std::cref(bayes_w)}};
  for (const auto& [label, alt] : alternatives) {
    // All three estimators are odd in W, so each metric is even in theta;
    // evaluate at |theta| once and reuse it for the mirrored grid point.
    std::map<double, Row> at_abs;
    for (double theta : grid) {
      const double a = std::abs(theta);
      auto it = at_abs.find(a);
      if (it == at_abs.end()) {
        Row row{.model = "ma1_exact2", .comparison = label, .x = a, .n = 2};
        row.mse_mle = ma1::risk_n2(mle, a);
        row.mse_alt = ma1::risk_n2(alt, a);
        row.r = ratio(row.mse_mle, row.mse_alt);
        row.pmc = ma1::pmc_n2(alt, mle, a);
        it = at_abs.emplace(a, row).first;
      }
      Row row = it->second;
      row.x = theta;
      write_row(row, out);
    }
  }
}

void write_sweep(const compare::SimConfig& cfg, long n,
                 const std::vector<compare::SweepPoint>& points, std::ostream& out) {
  out << kCsvHeader << '\n';
  auto emit = [&](const char* label, const compare::ComparisonPoint& c,
                  const compare::SweepPoint& p) {
    Row row{.model = "ma1_sim", .comparison = label, .x = c.theta, .n = n};
    row.mse_mle = c.mse_mle;
    row.mse_alt = c.mse_alt;
    row.r = c.r;
    row.r_lo = c.r_lo;
    row.r_hi = c.r_hi;
    row.pmc = c.pmc;
    row.pmc_lo = c.pmc_lo;
    row.pmc_hi = c.pmc_hi;
    row.n_rep = c.n_rep;
    row.seed = cfg.seed;
    row.pileup_plus = p.pileup_plus;
    row.pileup_minus = p.pileup_minus;
    write_row(row, out);
  };
  for (const auto& p : points) emit("mele_vs_mle", p.mele_vs_mle, p);
  for (const auto& p : points) emit("bayes_vs_mle", p.bayes_vs_mle, p);
}

void cmd_ma1_sim(const Ma1SimOptions& opt, std::ostream& out) {
  check_step(opt.step);
  compare::SimConfig cfg;
  cfg.theta_grid = make_grid(-1.0, 1.0, opt.step);
  cfg.n = opt.n;
  cfg.n_rep = opt.n_rep;
  cfg.seed = opt.seed;
  cfg.bayes_prior = parse_prior(opt.prior);
  cfg.estimate_mean = opt.estimate_mean;
  cfg.threads = opt.threads;
  write_sweep(cfg, opt.n, compare::sweep(cfg), out);
}

std::vector<double> read_reals(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open data file '" + path + "'");
  std::vector<double> values;
  std::string line;
  for (long lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& c : line) {
      if (c == ',') c = ' ';
    }
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || !std::isfinite(v)) {
        throw DomainError(path + ":" + std::to_string(lineno) + ": cannot parse '" + tok +
                          "' as a real number");
      }
      values.push_back(v);
    }
  }
  return values;
}

namespace {

struct FitReport {
  std::string model;
  long n = 0;
  double mle = 0.0;
  std::optional<double> mele;
  std::optional<double> bayes;
  std::optional<bool> boundary;
};

void print_report(const FitReport& r, bool csv, std::ostream& out) {
  if (csv) {
    out << "model,n,mle,mele,bayes,mle_on_boundary\n"
        << r.model << ',' << r.n << ',' << format_real(r.mle) << ','
        << (r.mele ? format_real(*r.mele) : "") << ',' << (r.bayes ? format_real(*r.bayes) : "")
        << ',' << (r.boundary ? (*r.boundary ? "1" : "0") : "") << '\n';
    return;
  }
  auto text = [](const std::optional<double>& v) { return v ? format_real(*v) : "undefined"; };
  out << std::left << std::setw(16) << "model" << r.model << '\n'
      << std::setw(16) << "n" << r.n << '\n'
      << std::setw(16) << "mle" << format_real(r.mle) << '\n';
  if (r.boundary) out << std::setw(16) << "mle_on_boundary" << (*r.boundary ? "yes" : "no") << '\n';
  out << std::setw(16) << "mele" << text(r.mele) << '\n'
      << std::setw(16) << "bayes" << text(r.bayes) << '\n';
}

long as_count(double v, const char* what) {
  if (v != std::floor(v) || std::abs(v) > 1e15) {
    throw DomainError(std::string("binomial input: ") + what + " must be an integer");
  }
  return static_cast<long>(v);
}

}  // namespace

void cmd_fit(const FitOptions& opt, std::ostream& out) {
  const auto values = read_reals(opt.path);
  FitReport report;
  report.model = opt.model;
  if (opt.model == "binomial") {
    if (values.size() != 2) throw DomainError("binomial input must hold exactly 'x n'");
    const binomial::BinomialData d(as_count(values[0], "x"), as_count(values[1], "n"));
    report.n = d.n;
    report.mle = binomial::mle_p(d);
    report.mele = binomial::mele_p(d);
    report.bayes = binomial::bayes_p(d);
  } else if (opt.model == "exponential") {
    if (values.empty()) throw DomainError("exponential input is empty");
    for (double v : values) {
      if (!(v > 0.0)) throw DomainError("exponential input: lifetimes must be positive");
    }
    const exponential::ExponentialData d(std::accumulate(values.begin(), values.end(), 0.0),
                                         static_cast<long>(values.size()));
    report.n = d.n;
    report.mle = exponential::mle_mu(d);
    if (d.n >= exponential::kMinMeleN) report.mele = exponential::mele_mu(d);
    if (d.n >= exponential::kMinBayesN) report.bayes = exponential::bayes_mu(d);
  } else if (opt.model == "ma1") {
    if (values.size() < 2) throw DomainError("ma1 input needs at least two observations");
    const auto est = ma1::estimate_ma1(values, default_theta_rule(), parse_prior(opt.prior));
    report.n = static_cast<long>(values.size());
    report.mle = est.mle;
    report.boundary = est.mle_on_boundary;
    report.mele = est.mele;
    report.bayes = est.bayes;
  } else {
    throw DomainError("unknown model '" + opt.model + "' (expected binomial, exponential, ma1)");
  }
  print_report(report, opt.csv, out);
}

}  // namespace mele::cli
