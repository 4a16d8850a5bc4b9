#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bdris/linalg.hpp"

namespace bdris {

/// Discrete phase alphabet: 2^bits angles on a regular grid starting at -pi.
class PhaseShiftSet {
 public:
  static constexpr int kMinBits = 1;
  static constexpr int kMaxBits = 8;

  explicit PhaseShiftSet(int bits);

  int bits() const { return bits_; }
  std::size_t size() const { return values_.size(); }
  double step() const;
  double angle(std::size_t k) const { return values_[k]; }
  const std::vector<double>& angles() const { return values_; }
  /// e^{j angle(k)}
  cplx phasor(std::size_t k) const { return phasors_[k]; }

  /// Index of the grid angle closest (on the circle) to `theta`.
  std::size_t nearest(double theta) const;

 private:
  int bits_;
  std::vector<double> values_;
  std::vector<cplx> phasors_;
};

PhaseShiftSet build_phase_set(int bits);

/// Upper-triangle entry addressed by a tree level. Indices are 0-based.
struct Entry {
  int i;
  int j;
  bool diagonal() const { return i == j; }
  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Diagonal-major ordering of the upper triangle: the main diagonal
/// top-to-bottom, then each superdiagonal k = 1..n-1 top-to-bottom.
class LevelMap {
 public:
  explicit LevelMap(int n);

  int n() const { return n_; }
  /// Total number of levels, n(n+1)/2.
  int levels() const { return static_cast<int>(order_.size()); }
  const std::vector<Entry>& order() const { return order_; }

  /// Levels run from levels() (root, entry (0,0)) down to 1.
  Entry level_to_entry(int level) const;

 private:
  int n_;
  std::vector<Entry> order_;
};

/// Partially assigned discrete configuration. Each entry holds an index into
/// the phase alphabet or nothing. The reciprocal entry (j,i) carries its own
/// level; symmetry is imposed later by projection.
class DiscreteConfig {
 public:
  explicit DiscreteConfig(int n);

  int n() const { return n_; }
  bool assigned(int i, int j) const { return levels_[idx(i, j)].has_value(); }
  std::optional<std::size_t> level(int i, int j) const { return levels_[idx(i, j)]; }
  void assign(int i, int j, std::size_t q) { levels_[idx(i, j)] = q; }
  void clear(int i, int j) { levels_[idx(i, j)].reset(); }
  std::size_t assigned_count() const;

  /// True when every assigned off-diagonal entry has its reciprocal assigned.
  bool reciprocal_consistent() const;

 private:
  std::size_t idx(int i, int j) const;

  int n_;
  std::vector<std::optional<std::size_t>> levels_;
};

/// e^{j theta_ij} on assigned entries, 0 elsewhere.
ComplexMatrix materialize(const DiscreteConfig& cfg, const PhaseShiftSet& q);

}  // namespace bdris
