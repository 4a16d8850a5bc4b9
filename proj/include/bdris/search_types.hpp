#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Core>

namespace bdris {

enum class ExecPolicy { serial, openmp };

struct SearchParams {
  double eps = 0.1;
  double rho = 1e-4;
  int delay_d = 0;
  int bits = 4;
  bool branch_pruning_enabled = false;
  /// Assign the root entry a uniformly random phase instead of searching it.
  /// Always on for the SISO search; optional for MU-MISO.
  bool random_root = false;
  std::uint64_t rng_seed = 1;
  /// How the |Q| reciprocal projections of an off-diagonal level are run.
  ExecPolicy reciprocal_policy = ExecPolicy::serial;

  void validate() const;
};

struct SearchTrace {
  Eigen::MatrixXi entry_visits;         // committed levels per entry, mirrored
  std::vector<int> level_candidates;    // candidates evaluated, in visit order
  std::vector<double> level_r;          // committed suitability, in visit order
  std::vector<double> level_best_r;     // largest suitability evaluated at that level
  long long candidates_evaluated = 0;
  int levels_explored = 0;
  double wall_time = 0.0;               // seconds

  explicit SearchTrace(int n = 0) : entry_visits(Eigen::MatrixXi::Zero(n, n)) {}
};

}  // namespace bdris
