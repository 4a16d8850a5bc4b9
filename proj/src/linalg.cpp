#include "bdris/linalg.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "bdris/errors.hpp"

#include <lapacke.h>

namespace bdris::linalg {

namespace {

std::string shape(const ComplexMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

std::string echo(const ComplexMatrix& a) {
  std::ostringstream os;
  os.precision(17);
  os << a;
  return os.str();
}

}  // namespace

void require_square(const ComplexMatrix& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         shape(a));
  }
}

void require_finite(const ComplexMatrix& a, const char* what) {
  if (!a.allFinite()) {
    throw NumericalError(std::string(what) + ": non-finite entry in input\n" + echo(a));
  }
}

Svd svd(const ComplexMatrix& a) {
  require_square(a, "svd");
  require_finite(a, "svd");

  const Eigen::Index n = a.rows();
  const auto ld = static_cast<lapack_int>(n);
  Svd out{ComplexMatrix(n, n), RealVector(n), ComplexMatrix(n, n)};
  ComplexMatrix vh(n, n);
  auto* pu = reinterpret_cast<lapack_complex_double*>(out.u.data());
  auto* pvh = reinterpret_cast<lapack_complex_double*>(vh.data());

  // Divide and conquer first; the QR-iteration driver is the fallback when it
  // fails to converge.
  ComplexMatrix work = a;
  lapack_int info = LAPACKE_zgesdd(LAPACK_COL_MAJOR, 'A', ld, ld,
                                   reinterpret_cast<lapack_complex_double*>(work.data()), ld,
                                   out.s.data(), pu, ld, pvh, ld);
  if (info > 0) {
    work = a;
    RealVector superb(n > 1 ? n - 1 : 1);
    info = LAPACKE_zgesvd(LAPACK_COL_MAJOR, 'A', 'A', ld, ld,
                          reinterpret_cast<lapack_complex_double*>(work.data()), ld, out.s.data(),
                          pu, ld, pvh, ld, superb.data());
  }
  if (info != 0) {
    throw NumericalError("svd: decomposition did not converge (info " + std::to_string(info) +
                         ") for input\n" + echo(a));
  }
  out.v = vh.adjoint();

  for (Eigen::Index k = 0; k < n; ++k) {
    for (Eigen::Index i = 0; i < n; ++i) {
      const cplx c = out.u(i, k);
      if (std::abs(c) > 1e-12) {
        const cplx rot = std::conj(c) / std::abs(c);
        out.u.col(k) *= rot;
        out.v.col(k) *= rot;
        break;
      }
    }
  }
  if (!out.u.allFinite() || !out.v.allFinite()) {
    throw NumericalError("svd: non-finite factors for input\n" + echo(a));
  }
  return out;
}

double nuclear_norm(const ComplexMatrix& a) { return svd(a).s.sum(); }

double fro_norm(const ComplexMatrix& a) { return a.norm(); }

cplx trace(const ComplexMatrix& a) {
  require_square(a, "trace");
  return a.trace();
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matmul: cannot multiply " + shape(a) + " by " + shape(b));
  }
  return a * b;
}

ComplexMatrix conj_transpose(const ComplexMatrix& a) { return a.adjoint(); }

cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_of_product: " + shape(a) + " and " + shape(b) +
                         " do not form a square product");
  }
  // tr(AB) = sum_ij A_ij B_ji
  return (a.array() * b.transpose().array()).sum();
}

double unitarity_residual(const ComplexMatrix& a) {
  require_square(a, "unitarity_residual");
  return (a.adjoint() * a - ComplexMatrix::Identity(a.rows(), a.cols())).norm();
}

double symmetry_residual(const ComplexMatrix& a) {
  require_square(a, "symmetry_residual");
  return (a - a.transpose()).norm();
}

}  // namespace bdris::linalg
