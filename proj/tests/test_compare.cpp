#include <gtest/gtest.h>

#include <cmath>

#include "mele/compare.hpp"
#include "mele/errors.hpp"

using namespace mele;
using namespace mele::compare;

namespace {

PairedErrors from_squares(const std::vector<double>& sq_ref, const std::vector<double>& sq_alt) {
  PairedErrors pe;
  pe.sq_ref = sq_ref;
  pe.sq_alt = sq_alt;
  for (double v : sq_ref) pe.abs_ref.push_back(std::sqrt(v));
  for (double v : sq_alt) pe.abs_alt.push_back(std::sqrt(v));
  return pe;
}

SimConfig small_config() {
  SimConfig cfg;
  cfg.theta_grid = {-0.5, 0.0, 0.9};
  cfg.n = 20;
  cfg.n_rep = 40;
  cfg.seed = 4242;
  return cfg;
}

}  // namespace

TEST(ZQuantile, NinetyNinePointNine) {
  EXPECT_NEAR(z_quantile(0.999), 3.2905267, 1e-6);
  EXPECT_NEAR(z_quantile(0.95), 1.9599640, 1e-6);
  EXPECT_THROW(z_quantile(1.0), DomainError);
}

TEST(RelativeEfficiency, IdenticalErrors) {
  std::vector<double> sq;
  for (int i = 0; i < 50; ++i) sq.push_back(0.01 * (i % 7 + 1));
  const auto r = relative_efficiency(from_squares(sq, sq));
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_NEAR(r.hi - r.lo, 0.0, 1e-12);
}

TEST(RelativeEfficiency, ProportionalErrors) {
  std::vector<double> a, b;
  for (int i = 0; i < 50; ++i) {
    b.push_back(0.02 * (i % 5 + 1));
    a.push_back(2 * b.back());
  }
  const auto r = relative_efficiency(from_squares(a, b));
  EXPECT_NEAR(r.value, 2.0, 1e-14);
  EXPECT_NEAR(r.hi - r.lo, 0.0, 1e-12);
}

TEST(RelativeEfficiency, Errors) {
  std::vector<double> few(10, 1.0);
  EXPECT_THROW(relative_efficiency(from_squares(few, few)), DomainError);
  std::vector<double> ones(40, 1.0), zeros(40, 0.0);
  EXPECT_THROW(relative_efficiency(from_squares(ones, zeros)), DegenerateError);
}

TEST(RelativeEfficiency, CoverageOfIndependentExponentials) {
  // R = 1; the 99.9% interval should miss about once in 1000 trials.
  int misses = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    GaussianStream g({31337, static_cast<std::uint64_t>(t)});
    std::vector<double> a(10000), b(10000);
    for (auto& v : a) v = -std::log(g.next_uniform());
    for (auto& v : b) v = -std::log(g.next_uniform());
    const auto r = relative_efficiency(from_squares(a, b));
    misses += (r.lo > 1.0 || r.hi < 1.0);
  }
  EXPECT_LE(misses, 5);
}

TEST(PmcEmpirical, TiesAndDominance) {
  std::vector<double> sq(40, 0.25);
  EXPECT_EQ(pmc_empirical(from_squares(sq, sq)).value, 0.5);

  std::vector<double> big(40, 1.0), small(40, 0.01);
  const auto dom = pmc_empirical(from_squares(big, small));
  EXPECT_EQ(dom.value, 1.0);
  EXPECT_LE(dom.hi, 1.0);
  EXPECT_EQ(dom.lo, 1.0);
  const auto rev = pmc_empirical(from_squares(small, big));
  EXPECT_EQ(rev.value, 0.0);
  EXPECT_GE(rev.lo, 0.0);
}

TEST(PmcEmpirical, Complementarity) {
  GaussianStream g({5, 5});
  std::vector<double> a, b;
  for (int i = 0; i < 500; ++i) {
    a.push_back(std::pow(g.next(), 2));
    b.push_back(i % 10 == 0 ? a.back() : std::pow(g.next(), 2));
  }
  const double ab = pmc_empirical(from_squares(a, b)).value;
  const double ba = pmc_empirical(from_squares(b, a)).value;
  EXPECT_NEAR(ab + ba, 1.0, 1e-15);
  const auto ci = pmc_empirical(from_squares(a, b));
  EXPECT_LE(ci.lo, ci.value);
  EXPECT_GE(ci.hi, ci.value);
}

TEST(PairedErrors, AddRecordsBothLosses) {
  PairedErrors pe;
  pe.theta = 0.5;
  pe.add(1.0, 0.4);
  EXPECT_DOUBLE_EQ(pe.sq_ref[0], 0.25);
  EXPECT_NEAR(pe.sq_alt[0], 0.01, 1e-15);
  EXPECT_DOUBLE_EQ(pe.abs_ref[0], 0.5);
  EXPECT_NEAR(pe.abs_alt[0], 0.1, 1e-15);
}

TEST(Sweep, DefaultGridHas41Points) {
  const auto grid = default_theta_grid();
  ASSERT_EQ(grid.size(), 41u);
  EXPECT_EQ(grid.front(), -1.0);
  EXPECT_EQ(grid.back(), 1.0);
  EXPECT_EQ(grid[20], 0.0);
  EXPECT_EQ(grid[36], 0.8);
}

TEST(Sweep, ParallelMatchesSerialBitForBit) {
  auto cfg = small_config();
  const auto serial = simulate_estimates(cfg, Execution::serial);
  for (int threads : {1, 2, 3}) {
    cfg.threads = threads;
    const auto par = simulate_estimates(cfg, Execution::parallel);
    ASSERT_EQ(par.size(), serial.size());
    for (std::size_t i = 0; i < par.size(); ++i) {
      EXPECT_EQ(par[i].mle, serial[i].mle);
      EXPECT_EQ(par[i].mele, serial[i].mele);
      EXPECT_EQ(par[i].bayes, serial[i].bayes);
    }
  }
}

TEST(Sweep, DeterministicAndSeedSensitive) {
  const auto cfg = small_config();
  const auto a = sweep(cfg);
  const auto b = sweep(cfg);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].mele_vs_mle.r, b[i].mele_vs_mle.r);
    EXPECT_EQ(a[i].bayes_vs_mle.pmc, b[i].bayes_vs_mle.pmc);
  }
  auto other = cfg;
  other.seed += 1;
  EXPECT_NE(sweep(other)[0].mele_vs_mle.r, a[0].mele_vs_mle.r);
}

TEST(Sweep, PointsAreConsistent) {
  const auto cfg = small_config();
  for (const auto& p : sweep(cfg)) {
    for (const auto* c : {&p.mele_vs_mle, &p.bayes_vs_mle}) {
      EXPECT_LE(c->r_lo, c->r);
      EXPECT_GE(c->r_hi, c->r);
      EXPECT_LE(c->pmc_lo, c->pmc);
      EXPECT_GE(c->pmc_hi, c->pmc);
      EXPECT_GE(c->pmc, 0.0);
      EXPECT_LE(c->pmc, 1.0);
      EXPECT_EQ(c->n_rep, cfg.n_rep);
      EXPECT_EQ(c->seed, cfg.seed);
      EXPECT_NEAR(c->r, c->mse_mle / c->mse_alt, 1e-14);
    }
    EXPECT_GE(p.pileup_plus + p.pileup_minus, 0.0);
    EXPECT_LE(p.pileup_plus + p.pileup_minus, 1.0);
  }
}

TEST(Sweep, PileupCountsBoundaryMles) {
  const auto cfg = small_config();
  const auto est = simulate_estimates(cfg);
  const auto pts = summarize_sweep(cfg, est);
  for (std::size_t g = 0; g < cfg.theta_grid.size(); ++g) {
    int plus = 0;
    for (std::size_t r = 0; r < cfg.n_rep; ++r) plus += est[g * cfg.n_rep + r].mle == 1.0;
    EXPECT_DOUBLE_EQ(pts[g].pileup_plus, plus / static_cast<double>(cfg.n_rep));
  }
  // theta = 0.9 with n = 20 piles up at +1 often.
  EXPECT_GT(pts[2].pileup_plus, 0.1);
}

TEST(Sweep, CiWidthHalvesWhenReplicationsQuadruple) {
  double ratio_sum = 0;
  const int seeds = 6;
  for (int s = 0; s < seeds; ++s) {
    SimConfig cfg;
    cfg.theta_grid = {0.3};
    cfg.n = 20;
    cfg.seed = 1000 + s;
    cfg.n_rep = 200;
    const auto small = sweep(cfg)[0].mele_vs_mle;
    cfg.n_rep = 800;
    const auto large = sweep(cfg)[0].mele_vs_mle;
    ratio_sum += (large.r_hi - large.r_lo) / (small.r_hi - small.r_lo);
  }
  EXPECT_NEAR(ratio_sum / seeds, 0.5, 0.1);
}

TEST(Sweep, ConfigValidation) {
  auto cfg = small_config();
  cfg.n = 1;
  EXPECT_THROW(cfg.validate(), DomainError);
  cfg = small_config();
  cfg.n_rep = 10;
  EXPECT_THROW(sweep(cfg), DomainError);
  cfg = small_config();
  cfg.theta_grid = {1.5};
  EXPECT_THROW(sweep(cfg), DomainError);
  cfg.theta_grid.clear();
  EXPECT_THROW(sweep(cfg), DomainError);
}

TEST(Sweep, StreamIndexLayout) {
  SimConfig cfg = small_config();
  EXPECT_EQ(replication_stream(cfg, 0, 7).stream_index, 7u);
  EXPECT_EQ(replication_stream(cfg, 2, 7).stream_index, 2u * 40 + 7);
  EXPECT_EQ(replication_stream(cfg, 2, 7).master_seed, cfg.seed);
}
