#pragma once

#include <cstdint>
#include <utility>

#include "bdris/linalg.hpp"

namespace bdris {

/// Single-antenna link through the surface: gain = |h Theta v|^2.
struct SisoChannel {
  ComplexMatrix h;  // 1 x N, user <-> surface
  ComplexVector v;  // N, base station <-> surface

  SisoChannel(ComplexMatrix h_row, ComplexVector v_col);
  int n() const { return static_cast<int>(v.size()); }
};

/// Multi-user MISO channel with the quadratic-form matrices precomputed.
class MuMisoChannel {
 public:
  /// g: L x K direct, h: N x K user <-> surface, u: N x L base station <-> surface.
  MuMisoChannel(ComplexMatrix g, ComplexMatrix h, ComplexMatrix u, bool direct_obstructed);

  int n() const { return static_cast<int>(h_.rows()); }
  int antennas() const { return static_cast<int>(g_.rows()); }
  int users() const { return static_cast<int>(g_.cols()); }

  const ComplexMatrix& g() const { return g_; }
  const ComplexMatrix& h() const { return h_; }
  const ComplexMatrix& u() const { return u_; }
  const ComplexMatrix& x() const { return x_; }  // U G H^H
  const ComplexMatrix& y() const { return y_; }  // H H^H
  const ComplexMatrix& z() const { return z_; }  // U U^H
  bool direct_obstructed() const { return obstructed_; }

 private:
  ComplexMatrix g_, h_, u_;
  ComplexMatrix x_, y_, z_;
  bool obstructed_;
};

/// Positions are on a line: base station at 0, surface at d_bs_ris, user disk
/// centred at d_bs_ue_center. Link distances shorter than one metre are
/// clamped to the reference distance.
struct ScenarioConfig {
  double pl_ref_db = -30.0;
  double d_bs_ue_center = 150.0;
  double ue_radius = 20.0;
  double d_bs_ris = 130.0;
  double d_ris_ue_center = 20.0;
  double gamma_direct = 3.5;
  double gamma_bs_ris = 2.2;
  double gamma_ris_ue = 2.8;
  std::uint64_t seed = 1;
  int realizations = 500;

  void validate() const;
};

double gain_siso(const SisoChannel& ch, const ComplexMatrix& theta);

/// ||G^H + H^H Theta U||_F^2, evaluated directly.
double gain_mumiso(const ComplexMatrix& g, const ComplexMatrix& h, const ComplexMatrix& u,
                   const ComplexMatrix& theta);
double gain_mumiso(const MuMisoChannel& ch, const ComplexMatrix& theta);

/// ||G||_F^2 + 2 Re tr(Theta X) + tr(Theta^H Y Theta Z).
double gain_mumiso_expanded(const MuMisoChannel& ch, const ComplexMatrix& theta);

struct SisoBounds {
  double bd_ris;
  double diagonal_ris;
};

/// Expected-gain upper bounds for unit-variance Rayleigh coefficients:
/// N^2 for a fully-connected surface, N + N(N-1) pi^2/16 for a diagonal one.
SisoBounds siso_upper_bounds(int n);

/// Reference path loss zeta(d) = zeta0 d^-gamma (power, linear scale).
double path_loss(double pl_ref_db, double distance_m, double gamma);

SisoChannel gen_siso(int n, std::uint64_t seed);

MuMisoChannel gen_mumiso(const ScenarioConfig& scn, int n, int antennas, int users,
                         bool obstructed, std::uint64_t realization_index);

/// Unit-variance i.i.d. coefficients on every link, no path loss.
MuMisoChannel gen_mumiso_iid(int n, int antennas, int users, bool obstructed,
                             std::uint64_t seed);

}  // namespace bdris
