#pragma once

#include "bdris/channel.hpp"
#include "bdris/linalg.hpp"
#include "bdris/phase.hpp"
#include "bdris/search_types.hpp"

namespace bdris {

/// Re{hbar Theta vbar} for unit-norm hbar (1 x N) and vbar (N).
double alignment(const ComplexMatrix& hbar, const ComplexVector& vbar, const ComplexMatrix& theta);

struct SisoResult {
  ComplexMatrix theta;
  DiscreteConfig config;
  SearchTrace trace;
};

/// Depth-first search with pruning for the single-antenna cascade.
///
/// The root entry (0,0) gets a random phase. Diagonal levels accumulate the
/// unit-modulus alignment terms in m and score |m/2|^2; off-diagonal levels
/// enumerate the reciprocal entry, project, and score the alignment. The first
/// candidate scoring above eps is committed; if none does, the best one is.
/// Committed levels are never revisited.
SisoResult search_siso(const SisoChannel& ch, const SearchParams& params);

}  // namespace bdris
