#pragma once

#include <cstdint>

#include "bdris/channel.hpp"
#include "bdris/linalg.hpp"
#include "bdris/phase.hpp"
#include "bdris/search_types.hpp"

namespace bdris {

/// uni_sym(H G^H U^H): first-order closed-form configuration.
ComplexMatrix baseline_low_complexity(const MuMisoChannel& ch);

/// Diagonal surface with continuous phases theta_n = -arg(h_n v_n).
ComplexMatrix diagonal_ris_config(const SisoChannel& ch);

struct OracleResult {
  double best_gain = 0.0;
  DiscreteConfig best_config{1};
  ComplexMatrix best_theta;
  std::uint64_t candidates = 0;
};

/// Largest enumeration the oracle accepts.
inline constexpr std::uint64_t kOracleMaxCandidates = std::uint64_t{1} << 20;

/// Number of raw assignments the oracle enumerates: |Q|^(N^2), every entry
/// including the independently assigned reciprocals. Saturates at UINT64_MAX.
std::uint64_t oracle_candidate_count(int n, int bits);
bool oracle_fits(int n, int bits);

/// Exhaustive search over the tree search's candidate space: every discrete
/// assignment of all N^2 entries, each projected with uni_sym and scored by the
/// true gain. Ties keep the lowest enumeration index.
OracleResult oracle_exhaustive(const SisoChannel& ch, int bits,
                               ExecPolicy policy = ExecPolicy::openmp);
OracleResult oracle_exhaustive(const MuMisoChannel& ch, int bits,
                               ExecPolicy policy = ExecPolicy::openmp);

}  // namespace bdris
