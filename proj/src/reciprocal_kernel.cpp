#include "bdris/reciprocal_kernel.hpp"

#include <exception>
#include <stdexcept>

#include "bdris/projection.hpp"

namespace bdris {

std::vector<double> reciprocal_scores_serial(const ComplexMatrix& base, Entry reciprocal,
                                             const PhaseShiftSet& q, const ScoreFn& score) {
  std::vector<double> out(q.size());
  ComplexMatrix work = base;
  for (std::size_t k = 0; k < q.size(); ++k) {
    work(reciprocal.i, reciprocal.j) = q.phasor(k);
    out[k] = score(uni_sym(work));
  }
  return out;
}

std::vector<double> reciprocal_scores_omp(const ComplexMatrix& base, Entry reciprocal,
                                          const PhaseShiftSet& q, const ScoreFn& score) {
  const long count = static_cast<long>(q.size());
  std::vector<double> out(q.size());
  std::exception_ptr failure;
#pragma omp parallel
  {
    ComplexMatrix work = base;
#pragma omp for schedule(static)
    for (long k = 0; k < count; ++k) {
      try {
        work(reciprocal.i, reciprocal.j) = q.phasor(static_cast<std::size_t>(k));
        out[static_cast<std::size_t>(k)] = score(uni_sym(work));
      } catch (...) {
#pragma omp critical(bdris_reciprocal_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<double> reciprocal_scores(const ComplexMatrix& base, Entry reciprocal,
                                      const PhaseShiftSet& q, const ScoreFn& score,
                                      ExecPolicy policy) {
  if (policy == ExecPolicy::openmp) return reciprocal_scores_omp(base, reciprocal, q, score);
  return reciprocal_scores_serial(base, reciprocal, q, score);
}

ArgMax first_argmax(const std::vector<double>& v) {
  if (v.empty()) throw std::invalid_argument("first_argmax: empty input");
  ArgMax best{0, v[0]};
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k] > best.value) best = {k, v[k]};
  }
  return best;
}

}  // namespace bdris
