#pragma once

#include <stdexcept>
#include <string>

namespace bdris {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All-zero channel: the suitability normalizer vanishes.
struct DegenerateChannelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace bdris
