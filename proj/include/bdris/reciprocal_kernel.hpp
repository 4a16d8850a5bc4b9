#pragma once

#include <functional>
#include <vector>

#include "bdris/linalg.hpp"
#include "bdris/phase.hpp"
#include "bdris/search_types.hpp"

namespace bdris {

using ScoreFn = std::function<double(const ComplexMatrix&)>;

/// Scores every reciprocal assignment of an off-diagonal level.
///
/// `base` is the materialized partial configuration with the forward entry
/// already set. For each alphabet index k, entry `reciprocal` is set to
/// phasor(k), the result is projected with uni_sym and scored. The returned
/// vector is indexed by k regardless of the execution policy.
std::vector<double> reciprocal_scores_serial(const ComplexMatrix& base, Entry reciprocal,
                                             const PhaseShiftSet& q, const ScoreFn& score);
std::vector<double> reciprocal_scores_omp(const ComplexMatrix& base, Entry reciprocal,
                                          const PhaseShiftSet& q, const ScoreFn& score);

std::vector<double> reciprocal_scores(const ComplexMatrix& base, Entry reciprocal,
                                      const PhaseShiftSet& q, const ScoreFn& score,
                                      ExecPolicy policy);

struct ArgMax {
  std::size_t index = 0;
  double value = 0.0;
};

/// Largest entry; ties go to the lowest index.
ArgMax first_argmax(const std::vector<double>& v);

}  // namespace bdris
