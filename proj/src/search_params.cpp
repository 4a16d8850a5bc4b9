#include "bdris/search_types.hpp"

#include <stdexcept>
#include <string>

#include "bdris/phase.hpp"

namespace bdris {

void SearchParams::validate() const {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("search: eps must lie in (0, 1), got " + std::to_string(eps));
  }
  if (branch_pruning_enabled && !(rho > 0.0)) {
    throw std::invalid_argument("search: rho must be positive when branch pruning is enabled");
  }
  if (delay_d < 0) throw std::invalid_argument("search: delay_d must be non-negative");
  if (bits < PhaseShiftSet::kMinBits || bits > PhaseShiftSet::kMaxBits) {
    throw std::invalid_argument("search: bits must lie in [1, 8]");
  }
}

}  // namespace bdris
