#pragma once

#include <cstdint>
#include <optional>

#include "bdris/config.hpp"
#include "bdris/csv.hpp"
#include "bdris/search_types.hpp"
#include "bdris/stats.hpp"

namespace bdris {

/// Seed of the channel drawn for (size n, realization r).
std::uint64_t realization_seed(std::uint64_t master, int n, int r);

SearchParams search_params_from(const ExperimentConfig& cfg);

SisoChannel siso_realization(const ExperimentConfig& cfg, int n, int r);
MuMisoChannel mumiso_realization(const ExperimentConfig& cfg, int n, int r);

/// Columns: N, algorithm, mean_gain, std_gain, mean_levels_explored,
/// mean_runtime_s. SISO sweeps append bd_ris_bound and diag_ris_bound rows.
Table run_gain_sweep(const ExperimentConfig& cfg, ExecPolicy policy = ExecPolicy::openmp);

struct RuntimeBench {
  Table table;
  stats::LogLogFit fit;
};

/// Serial timing of the tree search; median of cfg.repetitions runs per N and a
/// log-log slope over all N. Columns: kind, N, repetitions, median_time_s,
/// mean_levels_explored, mean_candidates, slope, residual, machine.
RuntimeBench run_runtime_bench(const ExperimentConfig& cfg);

/// Branch-pruned MU-MISO search over the (rho, d) grid at N = N_list[0].
/// Columns: rho, d, i, j, usage_fraction (1-based indices).
Table run_heatmap(const ExperimentConfig& cfg, ExecPolicy policy = ExecPolicy::openmp);

/// Tree search against the exhaustive oracle per realization.
/// Columns: N, realization, tree_gain, oracle_gain, ratio, oracle_candidates.
Table run_oracle_check(const ExperimentConfig& cfg, ExecPolicy policy = ExecPolicy::openmp);

/// SISO validation grid over bits_list x eps_list, with the diagonal-surface
/// reference and both analytic bounds.
/// Columns: N, bits, eps, algorithm, mean_gain, std_gain, mean_levels_explored.
Table run_validate_siso(const ExperimentConfig& cfg, ExecPolicy policy = ExecPolicy::openmp);

}  // namespace bdris
