#pragma once

// Shared numerical kernels: composite Simpson quadrature, bounded scalar
// maximization, the regularized lower incomplete gamma function and
// reproducible Gaussian streams.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace mele {

/// Composite Simpson rule with k panels on [a, b].
///
/// The weights are stored as the unscaled pattern 1,4,2,4,...,2,4,1. The
/// factor (b-a)/(6k) is applied only by integrate(); ratios such as the
/// mean-likelihood estimate never need it.
class QuadratureRule {
 public:
  QuadratureRule(std::size_t panels, double a, double b);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> weights() const { return weights_; }
  double a() const { return a_; }
  double b() const { return b_; }
  std::size_t panels() const { return panels_; }
  std::size_t size() const { return nodes_.size(); }

  // (b - a) / (6k): converts a weighted sum into an integral.
  double scale() const { return (b_ - a_) / (6.0 * static_cast<double>(panels_)); }

 private:
  std::size_t panels_;
  double a_;
  double b_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

// Throws DomainError when panels < 1 or a >= b.
QuadratureRule simpson_rule(std::size_t panels, double a, double b);

// Default rule for the MA(1) parameter: 100 panels on [-1, 1], 201 nodes.
QuadratureRule default_theta_rule();

/// ((b-a)/(6k)) * sum_i w_i f(x_i). A non-finite f(x_i) raises
/// EvaluationError naming the node.
double integrate(const QuadratureRule& rule, const std::function<double(double)>& f);

struct ScalarMax {
  double argmax;
  double value;
};

inline constexpr std::size_t kScanPoints = 41;

/// Global maximizer of f on [a, b]: a 41-point scan picks the best bracket,
/// golden-section refinement narrows it to `tol`, and the endpoints are
/// kept when they beat the refined interior point.
ScalarMax maximize_scalar(const std::function<double(double)>& f, double a, double b,
                          double tol = 1e-8);

/// P(shape, x) = (1/Gamma(shape)) * int_0^x t^(shape-1) e^-t dt.
/// Series expansion for x < shape + 1, Lentz continued fraction otherwise.
double reg_incomplete_gamma_p(double shape, double x);

struct RngStream {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_index = 0;
};

/// Deterministic standard-normal sequence for one (seed, stream) pair.
///
/// Engine: std::mt19937_64 seeded through std::seed_seq with the four
/// 32-bit halves (seed_lo, seed_hi, index_lo, index_hi); both algorithms
/// are fixed by the C++ standard. Uniforms take the top 53 bits of each
/// draw. Normals come from the Box-Muller transform, two per pair of
/// uniforms, cosine branch first.
class GaussianStream {
 public:
  explicit GaussianStream(RngStream cfg);

  double next();
  // Uniform on (0, 1].
  double next_uniform();

  RngStream config() const { return cfg_; }

 private:
  RngStream cfg_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

GaussianStream gaussian_stream(RngStream cfg);

}  // namespace mele
