#pragma once

#include <complex>

#include <Eigen/Dense>

namespace bdris {

using cplx = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

namespace linalg {

struct Svd {
  ComplexMatrix u;
  RealVector s;  // descending
  ComplexMatrix v;
};

/// Full SVD of a square matrix, A = U diag(S) V^H.
///
/// Singular values are sorted descending. Each left singular vector is
/// rotated so that its first component with modulus above 1e-12 is real
/// positive; the matching right vector gets the same rotation, which keeps
/// the factorization intact and makes U V^H reproducible.
Svd svd(const ComplexMatrix& a);

double nuclear_norm(const ComplexMatrix& a);
double fro_norm(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix conj_transpose(const ComplexMatrix& a);

/// tr(A B) without forming the product.
cplx trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// ||A^H A - I||_F
double unitarity_residual(const ComplexMatrix& a);
/// ||A - A^T||_F (plain transpose)
double symmetry_residual(const ComplexMatrix& a);

void require_finite(const ComplexMatrix& a, const char* what);
void require_square(const ComplexMatrix& a, const char* what);

}  // namespace linalg
}  // namespace bdris
