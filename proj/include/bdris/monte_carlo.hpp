#pragma once

#include <exception>
#include <vector>

#include "bdris/search_types.hpp"

namespace bdris {

/// Evaluates fn(0..count-1) and returns the results in index order.
///
/// The serial loop is the reference; the OpenMP loop must produce the same
/// vector since every realization seeds itself from its index.
template <typename R, typename F>
std::vector<R> map_realizations(int count, F&& fn, ExecPolicy policy) {
  std::vector<R> out(static_cast<std::size_t>(count > 0 ? count : 0));
  if (policy == ExecPolicy::serial) {
    for (int k = 0; k < count; ++k) out[k] = fn(k);
    return out;
  }
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < count; ++k) {
    try {
      out[k] = fn(k);
    } catch (...) {
#pragma omp critical(bdris_mc_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace bdris
