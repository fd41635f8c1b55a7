// mele: estimator comparison tables for the binomial, exponential and
// MA(1) models, plus point estimates for user data.

#include <fstream>
#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mele/errors.hpp"

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Grid steps live in (0, 0.5].
const CLI::Validator kGridStep(
    [](std::string& in) -> std::string {
      double v = 0.0;
      if (!CLI::detail::lexical_cast(in, v) || !(v > 0.0 && v <= 0.5)) {
        return "grid step must lie in (0, 0.5]";
      }
      return {};
    },
    "(0, 0.5]");

}  // namespace

int main(int argc, char** argv) {
  using namespace mele::cli;

  CLI::App app{"Maximum, mean and Jeffreys-Bayes likelihood estimator comparisons"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--out", out_path, "Write output to this file instead of stdout");

  BinomialOptions bin_opt;
  auto* bin = app.add_subcommand("binomial", "Exact R and PMC curves for Bernoulli trials");
  bin->add_option("--n", bin_opt.n, "Trial count (repeatable)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bin->add_option("--grid-step", bin_opt.step, "Step of the p grid")
      ->check(kGridStep)
      ->capture_default_str();

  ExponentialOptions exp_opt;
  auto* expo = app.add_subcommand("exponential", "Closed-form R and PMC for exponential means");
  expo->add_option("--n", exp_opt.n, "Sample size (repeatable; default 3..100)")
      ->check(CLI::Range(2L, 1000000000L));

  Ma1Exact2Options exact_opt;
  auto* exact = app.add_subcommand("ma1-exact2", "Exact n=2 MA(1) risk and PMC curves");
  exact->add_option("--grid-step", exact_opt.step, "Step of the theta grid")
      ->check(kGridStep)
      ->capture_default_str();

  Ma1SimOptions sim_opt;
  auto* sim = app.add_subcommand("ma1-sim", "Monte Carlo MA(1) comparison on the theta grid");
  sim->add_option("--n", sim_opt.n, "Series length")
      ->check(CLI::Range(2L, 100000000L))
      ->capture_default_str();
  sim->add_option("--n-rep", sim_opt.n_rep, "Replications per theta")
      ->check(CLI::Range(std::size_t{30}, std::size_t{1} << 40))
      ->capture_default_str();
  sim->add_option("--seed", sim_opt.seed, "Master seed")->capture_default_str();
  sim->add_option("--prior", sim_opt.prior, "Prior for the Bayes estimate")
      ->check(CLI::IsMember({"uniform", "jeffreys"}))
      ->capture_default_str();
  sim->add_flag("--estimate-mean", sim_opt.estimate_mean, "Demean each series by its average");
  sim->add_option("--grid-step", sim_opt.step, "Step of the theta grid")
      ->check(kGridStep)
      ->capture_default_str();
  sim->add_option("--threads", sim_opt.threads, "OpenMP threads (0: runtime default)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  FitOptions fit_opt;
  auto* fit = app.add_subcommand("fit", "Point estimates for a data file");
  fit->add_option("data-file", fit_opt.path, "Input file")->required();
  fit->add_option("--model", fit_opt.model, "binomial | exponential | ma1")
      ->required()
      ->check(CLI::IsMember({"binomial", "exponential", "ma1"}));
  fit->add_option("--prior", fit_opt.prior, "Prior for the MA(1) Bayes estimate")
      ->check(CLI::IsMember({"uniform", "jeffreys"}))
      ->capture_default_str();
  fit->add_flag("--csv", fit_opt.csv, "Print the estimates as one CSV row instead of the text report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  std::unique_ptr<std::ofstream> file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file = std::make_unique<std::ofstream>(out_path, std::ios::binary);
    if (!*file) {
      std::cerr << "error: cannot open '" << out_path << "' for writing\n";
      return kUsageError;
    }
    out = file.get();
  }

  try {
    if (*bin) cmd_binomial(bin_opt, *out);
    if (*expo) cmd_exponential(exp_opt, *out);
    if (*exact) cmd_ma1_exact2(exact_opt, *out);
    if (*sim) cmd_ma1_sim(sim_opt, *out);
    if (*fit) cmd_fit(fit_opt, *out);
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const mele::DegenerateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const mele::EvaluationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
