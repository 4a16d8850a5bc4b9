#include "bdris/projection.hpp"

namespace bdris {

namespace {
// Singular values below this fraction of the largest are treated as null.
constexpr double kRankTol = 1e-10;
}  // namespace

ComplexMatrix uni_sym(const ComplexMatrix& t) {
  linalg::require_square(t, "uni_sym");
  const ComplexMatrix sym = 0.5 * (t + t.transpose());
  linalg::Svd dec = linalg::svd(sym);

  const double smax = dec.s.size() ? dec.s(0) : 0.0;
  const Eigen::Index n = sym.rows();
  Eigen::Index rank = 0;
  while (rank < n && dec.s(rank) > kRankTol * smax) ++rank;

  if (rank < n) {
    dec.u.rightCols(n - rank) = dec.v.rightCols(n - rank).conjugate();
  }
  return dec.u * dec.v.adjoint();
}

}  // namespace bdris
