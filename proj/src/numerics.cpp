#include "mele/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mele/errors.hpp"

namespace mele {

QuadratureRule::QuadratureRule(std::size_t panels, double a, double b)
    : panels_(panels), a_(a), b_(b) {
  if (panels < 1) throw DomainError("simpson_rule: panel count must be >= 1");
  if (!(a < b)) throw DomainError("simpson_rule: require a < b");
  const std::size_t count = 2 * panels + 1;
  nodes_.resize(count);
  weights_.resize(count);
  const double denom = static_cast<double>(2 * panels);
  for (std::size_t i = 0; i < count; ++i) {
    nodes_[i] = a + (b - a) * static_cast<double>(i) / denom;
    weights_[i] = (i % 2 == 1) ? 4.0 : 2.0;
  }
  nodes_.back() = b;
  weights_.front() = 1.0;
  weights_.back() = 1.0;
}

QuadratureRule simpson_rule(std::size_t panels, double a, double b) {
  return QuadratureRule(panels, a, b);
}

QuadratureRule default_theta_rule() { return QuadratureRule(100, -1.0, 1.0); }

double integrate(const QuadratureRule& rule, const std::function<double(double)>& f) {
  const auto x = rule.nodes();
  const auto w = rule.weights();
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double fx = f(x[i]);
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "integrate: non-finite integrand " << fx << " at node " << i << " (x = " << x[i]
          << ")";
      throw EvaluationError(msg.str());
    }
    sum += w[i] * fx;
  }
  return rule.scale() * sum;
}

ScalarMax maximize_scalar(const std::function<double(double)>& f, double a, double b,
                          double tol) {
  if (!(a < b)) throw DomainError("maximize_scalar: require a < b");
  if (!(tol > 0.0)) throw DomainError("maximize_scalar: tol must be positive");

  constexpr std::size_t last = kScanPoints - 1;
  const double step = (b - a) / static_cast<double>(last);
  auto grid = [&](std::size_t i) { return i == last ? b : a + step * static_cast<double>(i); };

  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < kScanPoints; ++i) {
    const double v = f(grid(i));
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  ScalarMax result{grid(best), best_value};

  double lo = grid(best == 0 ? 0 : best - 1);
  double hi = grid(best == last ? last : best + 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > tol) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double mid = std::clamp(0.5 * (lo + hi), a, b);
  const double fmid = f(mid);
  if (fmid > result.value) result = {mid, fmid};
  return result;
}

namespace {

double gamma_series(double shape, double x, double log_prefactor) {
  double term = 1.0 / shape;
  double sum = term;
  for (int k = 1; k < 100000; ++k) {
    term *= x / (shape + k);
    sum += term;
    if (std::abs(term) < std::abs(sum) * 1e-17) break;
  }
  return sum * std::exp(log_prefactor);
}

// Upper tail Q(shape, x) by the modified Lentz algorithm.
double gamma_continued_fraction(double shape, double x, double log_prefactor) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - shape;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 100000; ++i) {
    const double an = -i * (i - shape);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(log_prefactor) * h;
}

}  // namespace

double reg_incomplete_gamma_p(double shape, double x) {
  if (!(shape > 0.0)) throw DomainError("reg_incomplete_gamma_p: shape must be > 0");
  if (!(x >= 0.0)) throw DomainError("reg_incomplete_gamma_p: x must be >= 0");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  const double log_prefactor = -x + shape * std::log(x) - std::lgamma(shape);
  double p;
  if (x < shape + 1.0) {
    p = gamma_series(shape, x, log_prefactor);
  } else {
    p = 1.0 - gamma_continued_fraction(shape, x, log_prefactor);
  }
  return std::clamp(p, 0.0, 1.0);
}

namespace {

std::mt19937_64 seeded_engine(RngStream cfg) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.master_seed),
                    static_cast<std::uint32_t>(cfg.master_seed >> 32),
                    static_cast<std::uint32_t>(cfg.stream_index),
                    static_cast<std::uint32_t>(cfg.stream_index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

GaussianStream::GaussianStream(RngStream cfg) : cfg_(cfg), engine_(seeded_engine(cfg)) {}

double GaussianStream::next_uniform() {
  constexpr double scale = 1.0 / 9007199254740992.0;  // 2^-53
  return static_cast<double>((engine_() >> 11) + 1) * scale;
}

double GaussianStream::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = next_uniform();
  const double u2 = next_uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(angle);
  has_spare_ = true;
  return r * std::cos(angle);
}

GaussianStream gaussian_stream(RngStream cfg) { return GaussianStream(cfg); }

}  // namespace mele
