#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bdris/channel.hpp"

namespace bdris {

enum class SystemKind { siso, mumiso };
enum class ChannelModel { pathloss, iid };

/// Everything a CLI run needs. Parsed from flat `key = value` text.
struct ExperimentConfig {
  ScenarioConfig scenario;
  SystemKind system = SystemKind::siso;
  ChannelModel channel_model = ChannelModel::pathloss;
  std::vector<int> n_list{2, 4, 6};
  int antennas = 4;  // L
  int users = 4;     // K
  int bits = 4;
  double eps = 0.1;
  double rho = 1e-4;
  int delay_d = 0;
  bool branch_pruning = false;
  bool obstructed = false;
  bool random_root = false;
  std::vector<std::string> algorithms{"tree"};
  std::string output_path;

  // heatmap grid
  std::vector<double> rho_list{1e-2, 1e-4, 1e-9};
  std::vector<int> d_list{0, 4, 8};
  // validate-siso grid
  std::vector<int> bits_list{1, 4};
  std::vector<double> eps_list{0.1, 0.5};
  // runtime-bench
  int repetitions = 10;
  std::string machine;
  /// Wall-clock columns of gain-sweep are written as 0 unless set, so the
  /// default output is reproducible byte for byte.
  bool record_timing = false;

  bool has_algorithm(const std::string& name) const;
  void validate() const;
};

/// Parses `key = value` lines. `#` starts a comment, keys are case-sensitive,
/// lists are comma-separated. Unknown keys and malformed values raise
/// ConfigError carrying the line number.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig load_config(const std::string& path);

}  // namespace bdris
