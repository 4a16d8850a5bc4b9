// bdris: experiment harness for the BD-RIS tree search.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <omp.h>

#include "CLI11.hpp"
#include "bdris/config.hpp"
#include "bdris/csv.hpp"
#include "bdris/errors.hpp"
#include "bdris/experiments.hpp"

namespace {

enum ExitCode : int { kOk = 0, kConfig = 2, kNumerical = 3, kSizeGuard = 4 };

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::string out;
  int threads = 0;
};

void add_common(CLI::App* sub, CommonOptions& o) {
  sub->add_option("--config", o.config, "Experiment config file (key = value)");
  sub->add_option("--seed", o.seed, "Master seed, overrides the config");
  sub->add_option("--out", o.out, "CSV output path, overrides the config; '-' for stdout");
  sub->add_option("--threads", o.threads, "OpenMP threads for realization-level work")
      ->check(CLI::NonNegativeNumber);
}

bdris::ExperimentConfig resolve(const CommonOptions& o) {
  bdris::ExperimentConfig cfg = o.config.empty() ? bdris::ExperimentConfig{}
                                                 : bdris::load_config(o.config);
  if (o.seed) cfg.scenario.seed = *o.seed;
  if (!o.out.empty()) cfg.output_path = o.out;
  if (o.threads > 0) omp_set_num_threads(o.threads);
  return cfg;
}

void emit(const bdris::ExperimentConfig& cfg, const bdris::Table& t) {
  if (cfg.output_path.empty() || cfg.output_path == "-") {
    bdris::write_csv(std::cout, t);
  } else {
    bdris::write_csv_file(cfg.output_path, t);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BD-RIS configuration by depth-first tree search: experiment harness"};
  app.require_subcommand(1);

  CommonOptions opts;
  auto* sweep = app.add_subcommand("gain-sweep", "Mean channel gain per (N, algorithm)");
  auto* bench = app.add_subcommand("runtime-bench", "Tree-search runtime scaling and log-log fit");
  auto* heat = app.add_subcommand("heatmap", "Entry usage under branch pruning (rho, d) grid");
  auto* oracle = app.add_subcommand("oracle-check", "Tree search against exhaustive enumeration");
  auto* siso = app.add_subcommand("validate-siso", "SISO gain versus the analytic bounds");
  for (auto* s : {sweep, bench, heat, oracle, siso}) add_common(s, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    const bdris::ExperimentConfig cfg = resolve(opts);
    if (sweep->parsed()) {
      emit(cfg, bdris::run_gain_sweep(cfg));
    } else if (bench->parsed()) {
      const auto res = bdris::run_runtime_bench(cfg);
      emit(cfg, res.table);
      std::cerr << "log-log slope " << res.fit.slope << " (rms residual " << res.fit.residual
                << ")\n";
    } else if (heat->parsed()) {
      emit(cfg, bdris::run_heatmap(cfg));
    } else if (oracle->parsed()) {
      emit(cfg, bdris::run_oracle_check(cfg));
    } else if (siso->parsed()) {
      emit(cfg, bdris::run_validate_siso(cfg));
    }
  } catch (const bdris::SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << '\n';
    return kSizeGuard;
  } catch (const bdris::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  } catch (const bdris::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const bdris::DegenerateChannelError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfig;
  }
  return kOk;
}
