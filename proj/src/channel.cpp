#include "bdris/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "bdris/errors.hpp"
#include "bdris/rng.hpp"

namespace bdris {

SisoChannel::SisoChannel(ComplexMatrix h_row, ComplexVector v_col)
    : h(std::move(h_row)), v(std::move(v_col)) {
  if (h.rows() != 1 || h.cols() != v.size() || v.size() == 0) {
    throw DimensionError("SisoChannel: h must be 1xN and v of length N");
  }
  linalg::require_finite(h, "SisoChannel h");
  linalg::require_finite(v, "SisoChannel v");
}

MuMisoChannel::MuMisoChannel(ComplexMatrix g, ComplexMatrix h, ComplexMatrix u,
                             bool direct_obstructed)
    : g_(std::move(g)), h_(std::move(h)), u_(std::move(u)), obstructed_(direct_obstructed) {
  if (h_.cols() != g_.cols() || u_.cols() != g_.rows() || u_.rows() != h_.rows() ||
      h_.rows() == 0 || g_.size() == 0) {
    throw DimensionError("MuMisoChannel: expected G LxK, H NxK, U NxL; got G " +
                         std::to_string(g_.rows()) + "x" + std::to_string(g_.cols()) + ", H " +
                         std::to_string(h_.rows()) + "x" + std::to_string(h_.cols()) + ", U " +
                         std::to_string(u_.rows()) + "x" + std::to_string(u_.cols()));
  }
  linalg::require_finite(g_, "MuMisoChannel G");
  linalg::require_finite(h_, "MuMisoChannel H");
  linalg::require_finite(u_, "MuMisoChannel U");
  if (obstructed_) g_.setZero();
  x_ = u_ * g_ * h_.adjoint();
  y_ = h_ * h_.adjoint();
  z_ = u_ * u_.adjoint();
}

void ScenarioConfig::validate() const {
  if (!(d_bs_ue_center > 0 && ue_radius > 0 && d_bs_ris > 0 && d_ris_ue_center > 0)) {
    throw ConfigError("scenario distances must be positive");
  }
  if (!(gamma_direct > 0 && gamma_bs_ris > 0 && gamma_ris_ue > 0)) {
    throw ConfigError("path-loss exponents must be positive");
  }
  if (realizations < 1) throw ConfigError("realizations must be at least 1");
  const double d = d_bs_ue_center;
  if (d_bs_ris + d_ris_ue_center < d - 1e-9 || std::abs(d_bs_ris - d_ris_ue_center) > d + 1e-9) {
    throw ConfigError("surface distances are incompatible with the base station to user distance");
  }
}

double gain_siso(const SisoChannel& ch, const ComplexMatrix& theta) {
  if (theta.rows() != ch.n() || theta.cols() != ch.n()) {
    throw DimensionError("gain_siso: configuration size does not match channel");
  }
  const cplx s = (ch.h * theta * ch.v)(0, 0);
  return std::norm(s);
}

double gain_mumiso(const ComplexMatrix& g, const ComplexMatrix& h, const ComplexMatrix& u,
                   const ComplexMatrix& theta) {
  if (theta.rows() != h.rows() || theta.cols() != u.rows()) {
    throw DimensionError("gain_mumiso: configuration size does not match channel");
  }
  return (g.adjoint() + h.adjoint() * theta * u).squaredNorm();
}

double gain_mumiso(const MuMisoChannel& ch, const ComplexMatrix& theta) {
  return gain_mumiso(ch.g(), ch.h(), ch.u(), theta);
}

double gain_mumiso_expanded(const MuMisoChannel& ch, const ComplexMatrix& theta) {
  if (theta.rows() != ch.n() || theta.cols() != ch.n()) {
    throw DimensionError("gain_mumiso_expanded: configuration size does not match channel");
  }
  const cplx cross = linalg::trace_of_product(theta, ch.x());
  const cplx quad = linalg::trace_of_product(theta.adjoint() * ch.y() * theta, ch.z());
  return ch.g().squaredNorm() + 2.0 * cross.real() + quad.real();
}

SisoBounds siso_upper_bounds(int n) {
  const double nn = n;
  return {nn * nn, nn + nn * (nn - 1.0) * std::numbers::pi * std::numbers::pi / 16.0};
}

double path_loss(double pl_ref_db, double distance_m, double gamma) {
  if (!(distance_m > 0)) throw ConfigError("path_loss: distance must be positive");
  return std::pow(10.0, pl_ref_db / 10.0) * std::pow(distance_m, -gamma);
}

SisoChannel gen_siso(int n, std::uint64_t seed) {
  if (n < 1) throw DimensionError("gen_siso: N must be positive");
  CounterRng rng(derive_seed(seed, 0));
  ComplexMatrix h(1, n);
  ComplexVector v(n);
  for (int k = 0; k < n; ++k) h(0, k) = rng.complex_normal();
  for (int k = 0; k < n; ++k) v(k) = rng.complex_normal();
  return {std::move(h), std::move(v)};
}

MuMisoChannel gen_mumiso(const ScenarioConfig& scn, int n, int antennas, int users,
                         bool obstructed, std::uint64_t realization_index) {
  scn.validate();
  if (n < 1 || antennas < 1 || users < 1) throw DimensionError("gen_mumiso: sizes must be positive");

  // Surface placed from the two distances by the law of cosines; collinear
  // when they add up to the base station to disk-centre distance.
  const double dc = scn.d_bs_ue_center;
  const double ris_x = (scn.d_bs_ris * scn.d_bs_ris - scn.d_ris_ue_center * scn.d_ris_ue_center +
                        dc * dc) /
                       (2.0 * dc);
  const double ris_y = std::sqrt(std::max(0.0, scn.d_bs_ris * scn.d_bs_ris - ris_x * ris_x));

  CounterRng rng(derive_seed(scn.seed, realization_index));
  std::vector<double> d_direct(users), d_ris_ue(users);
  for (int k = 0; k < users; ++k) {
    const double r = scn.ue_radius * std::sqrt(rng.uniform());
    const double phi = 2.0 * std::numbers::pi * rng.uniform();
    const double ux = dc + r * std::cos(phi);
    const double uy = r * std::sin(phi);
    d_direct[k] = std::max(1.0, std::hypot(ux, uy));
    d_ris_ue[k] = std::max(1.0, std::hypot(ux - ris_x, uy - ris_y));
  }

  ComplexMatrix g(antennas, users), h(n, users), u(n, antennas);
  for (int k = 0; k < users; ++k) {
    const double a = std::sqrt(path_loss(scn.pl_ref_db, d_direct[k], scn.gamma_direct));
    for (int l = 0; l < antennas; ++l) g(l, k) = a * rng.complex_normal();
  }
  for (int k = 0; k < users; ++k) {
    const double a = std::sqrt(path_loss(scn.pl_ref_db, d_ris_ue[k], scn.gamma_ris_ue));
    for (int i = 0; i < n; ++i) h(i, k) = a * rng.complex_normal();
  }
  const double a_bs_ris =
      std::sqrt(path_loss(scn.pl_ref_db, std::max(1.0, scn.d_bs_ris), scn.gamma_bs_ris));
  for (int l = 0; l < antennas; ++l)
    for (int i = 0; i < n; ++i) u(i, l) = a_bs_ris * rng.complex_normal();

  return {std::move(g), std::move(h), std::move(u), obstructed};
}

MuMisoChannel gen_mumiso_iid(int n, int antennas, int users, bool obstructed,
                             std::uint64_t seed) {
  if (n < 1 || antennas < 1 || users < 1) {
    throw DimensionError("gen_mumiso_iid: sizes must be positive");
  }
  CounterRng rng(derive_seed(seed, 1));
  ComplexMatrix g(antennas, users), h(n, users), u(n, antennas);
  for (Eigen::Index k = 0; k < g.size(); ++k) g(k) = rng.complex_normal();
  for (Eigen::Index k = 0; k < h.size(); ++k) h(k) = rng.complex_normal();
  for (Eigen::Index k = 0; k < u.size(); ++k) u(k) = rng.complex_normal();
  return {std::move(g), std::move(h), std::move(u), obstructed};
}

}  // namespace bdris
