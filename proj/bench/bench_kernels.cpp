// Serial reference vs OpenMP kernels: reciprocal enumeration, Monte Carlo
// realizations and oracle enumeration. Prints one line per kernel.

#include <chrono>
#include <cstdio>
#include <functional>

#include <omp.h>

#include "bdris/baselines.hpp"
#include "bdris/channel.hpp"
#include "bdris/monte_carlo.hpp"
#include "bdris/reciprocal_kernel.hpp"
#include "bdris/search_mumiso.hpp"

using namespace bdris;

namespace {

double seconds(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int k = 0; k < reps; ++k) fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void report(const char* name, double serial, double parallel) {
  std::printf("%-28s serial %10.6f s  openmp %10.6f s  speedup %5.2fx\n", name, serial, parallel,
              serial / parallel);
}

}  // namespace

int main() {
  std::printf("threads: %d\n", omp_get_max_threads());

  {
    const int n = 24;
    const MuMisoChannel ch = gen_mumiso_iid(n, 4, 4, false, 7);
    const Suitability w(ch);
    const ScoreFn score = [&](const ComplexMatrix& t) { return w(t); };
    const PhaseShiftSet q(4);
    ComplexMatrix base = ComplexMatrix::Identity(n, n);
    base(0, 1) = q.phasor(3);
    const Entry recip{1, 0};
    report("reciprocal_scores N=24",
           seconds([&] { reciprocal_scores_serial(base, recip, q, score); }, 20),
           seconds([&] { reciprocal_scores_omp(base, recip, q, score); }, 20));
  }

  {
    SearchParams p;
    p.eps = 0.1;
    p.branch_pruning_enabled = true;
    auto one = [&](int r) {
      return search_mumiso(gen_mumiso_iid(12, 4, 4, true, static_cast<std::uint64_t>(r)), p).gain;
    };
    report("realizations N=12 x64",
           seconds([&] { map_realizations<double>(64, one, ExecPolicy::serial); }, 1),
           seconds([&] { map_realizations<double>(64, one, ExecPolicy::openmp); }, 1));
  }

  {
    const MuMisoChannel ch = gen_mumiso_iid(2, 4, 4, false, 3);
    report("oracle N=2 bits=3",
           seconds([&] { oracle_exhaustive(ch, 3, ExecPolicy::serial); }, 1),
           seconds([&] { oracle_exhaustive(ch, 3, ExecPolicy::openmp); }, 1));
  }
  return 0;
}
