#pragma once

#include "bdris/channel.hpp"
#include "bdris/linalg.hpp"
#include "bdris/phase.hpp"
#include "bdris/search_types.hpp"

namespace bdris {

/// Normalized suitability w in [0, 1] of a candidate configuration.
///
/// Obstructed direct link: w = (Re tr(Phi^H Y Phi Z) + ||Y||_F ||Z||_F) / (2 ||Y||_F ||Z||_F).
/// Otherwise:             w = (Re tr(Phi X) + ||X||_*) / (2 ||X||_*).
/// The normalizers depend only on the channel and are computed once.
class Suitability {
 public:
  explicit Suitability(const MuMisoChannel& ch);

  double operator()(const ComplexMatrix& phi) const;
  double normalizer() const { return norm_; }

 private:
  const MuMisoChannel* ch_;
  double norm_;
};

double var_calc(const MuMisoChannel& ch, const ComplexMatrix& phi);

struct MuMisoResult {
  ComplexMatrix theta;
  double gain = 0.0;
  DiscreteConfig config;
  SearchTrace trace;
};

/// Tree search for the multi-user channel-strength objective.
///
/// Same descent as search_siso, scored by Suitability: diagonal levels on the
/// raw partial matrix, off-diagonal levels on the projected reciprocal
/// candidates. With branch pruning, each eps-accepted level whose r moved less
/// than rho from the last reference r' counts as a failure; once failures
/// exceed delay_d the search stops after that level. A sufficient move resets
/// the counter and updates r'. Fallback commits do not touch the counter.
MuMisoResult search_mumiso(const MuMisoChannel& ch, const SearchParams& params);

}  // namespace bdris
