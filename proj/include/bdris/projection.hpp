#pragma once

#include "bdris/linalg.hpp"

namespace bdris {

/// Closest symmetric-unitary matrix to T, taken in two steps: the symmetric
/// part S = (T + T^T)/2, then the unitary polar factor U V^H of S.
///
/// When S is rank deficient the null-space block of U is taken as conj(V_null),
/// which is a valid left singular basis for a complex-symmetric S and keeps
/// the completion symmetric.
ComplexMatrix uni_sym(const ComplexMatrix& t);

}  // namespace bdris
