#include "bdris/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bdris/errors.hpp"

namespace bdris {

PhaseShiftSet::PhaseShiftSet(int bits) : bits_(bits) {
  if (bits < kMinBits || bits > kMaxBits) {
    throw std::invalid_argument("phase alphabet bit-width must lie in [1, 8], got " +
                                std::to_string(bits));
  }
  const std::size_t count = std::size_t{1} << bits;
  values_.reserve(count);
  phasors_.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double theta = -std::numbers::pi + static_cast<double>(k) * step();
    values_.push_back(theta);
    phasors_.push_back(std::polar(1.0, theta));
  }
}

double PhaseShiftSet::step() const {
  return std::numbers::pi / static_cast<double>(std::size_t{1} << (bits_ - 1));
}

std::size_t PhaseShiftSet::nearest(double theta) const {
  std::size_t best = 0;
  double best_dist = 10.0;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    const double d = std::abs(std::remainder(theta - values_[k], 2.0 * std::numbers::pi));
    if (d < best_dist - 1e-12) {
      best_dist = d;
      best = k;
    }
  }
  return best;
}

PhaseShiftSet build_phase_set(int bits) { return PhaseShiftSet(bits); }

LevelMap::LevelMap(int n) : n_(n) {
  if (n < 1) throw DimensionError("LevelMap: size must be positive");
  order_.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i + k < n; ++i) order_.push_back({i, i + k});
  }
}

Entry LevelMap::level_to_entry(int level) const {
  if (level < 1 || level > levels()) {
    throw std::out_of_range("level " + std::to_string(level) + " outside [1, " +
                            std::to_string(levels()) + "]");
  }
  return order_[static_cast<std::size_t>(levels() - level)];
}

DiscreteConfig::DiscreteConfig(int n) : n_(n) {
  if (n < 1) throw DimensionError("DiscreteConfig: size must be positive");
  levels_.resize(static_cast<std::size_t>(n) * n);
}

std::size_t DiscreteConfig::idx(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    throw std::out_of_range("DiscreteConfig: entry (" + std::to_string(i) + "," +
                            std::to_string(j) + ") outside " + std::to_string(n_) + "x" +
                            std::to_string(n_));
  }
  return static_cast<std::size_t>(i) * n_ + j;
}

std::size_t DiscreteConfig::assigned_count() const {
  std::size_t c = 0;
  for (const auto& l : levels_) c += l.has_value();
  return c;
}

bool DiscreteConfig::reciprocal_consistent() const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (assigned(i, j) != assigned(j, i)) return false;
  return true;
}

ComplexMatrix materialize(const DiscreteConfig& cfg, const PhaseShiftSet& q) {
  const int n = cfg.n();
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (auto l = cfg.level(i, j)) m(i, j) = q.phasor(*l);
  return m;
}

}  // namespace bdris
