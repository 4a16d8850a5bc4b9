#include "bdris/baselines.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bdris/errors.hpp"
#include "bdris/projection.hpp"

namespace bdris {

ComplexMatrix baseline_low_complexity(const MuMisoChannel& ch) {
  return uni_sym(ch.h() * ch.g().adjoint() * ch.u().adjoint());
}

ComplexMatrix diagonal_ris_config(const SisoChannel& ch) {
  const int n = ch.n();
  ComplexMatrix theta = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    theta(k, k) = std::polar(1.0, -std::arg(ch.h(0, k) * ch.v(k)));
  }
  return theta;
}

std::uint64_t oracle_candidate_count(int n, int bits) {
  if (n < 1 || bits < 1) return 0;
  const std::uint64_t entries = static_cast<std::uint64_t>(n) * n;
  if (entries * static_cast<std::uint64_t>(bits) >= 64) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return std::uint64_t{1} << (entries * bits);
}

bool oracle_fits(int n, int bits) { return oracle_candidate_count(n, bits) <= kOracleMaxCandidates; }

namespace {

struct Best {
  double gain = -std::numeric_limits<double>::infinity();
  std::uint64_t index = 0;
};

// Entry order for digit decoding: upper triangle in level order, then the
// strict lower triangle mirrored in the same order.
std::vector<Entry> enumeration_order(int n) {
  const LevelMap map(n);
  std::vector<Entry> order = map.order();
  for (const Entry& e : map.order()) {
    if (!e.diagonal()) order.push_back({e.j, e.i});
  }
  return order;
}

DiscreteConfig decode(std::uint64_t index, const std::vector<Entry>& order, int n,
                      std::size_t base) {
  DiscreteConfig cfg(n);
  for (const Entry& e : order) {
    cfg.assign(e.i, e.j, index % base);
    index /= base;
  }
  return cfg;
}

OracleResult run_oracle(int n, int bits, ExecPolicy policy,
                        const std::function<double(const ComplexMatrix&)>& gain) {
  if (!oracle_fits(n, bits)) {
    throw SizeGuardError("oracle: |Q|^(N^2) for N=" + std::to_string(n) +
                         ", bits=" + std::to_string(bits) + " exceeds 2^20 candidates");
  }
  const PhaseShiftSet qset(bits);
  const auto order = enumeration_order(n);
  const std::uint64_t total = oracle_candidate_count(n, bits);

  auto evaluate = [&](std::uint64_t idx) {
    return gain(uni_sym(materialize(decode(idx, order, n, qset.size()), qset)));
  };

  Best best;
  if (policy == ExecPolicy::openmp) {
    const long long count = static_cast<long long>(total);
#pragma omp parallel
    {
      Best local;
#pragma omp for schedule(static)
      for (long long idx = 0; idx < count; ++idx) {
        const double g = evaluate(static_cast<std::uint64_t>(idx));
        if (g > local.gain) local = {g, static_cast<std::uint64_t>(idx)};
      }
#pragma omp critical(bdris_oracle_reduce)
      if (local.gain > best.gain || (local.gain == best.gain && local.index < best.index)) {
        best = local;
      }
    }
  } else {
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const double g = evaluate(idx);
      if (g > best.gain) best = {g, idx};
    }
  }

  OracleResult out;
  out.best_gain = best.gain;
  out.best_config = decode(best.index, order, n, qset.size());
  out.best_theta = uni_sym(materialize(out.best_config, qset));
  out.candidates = total;
  return out;
}

}  // namespace

OracleResult oracle_exhaustive(const SisoChannel& ch, int bits, ExecPolicy policy) {
  return run_oracle(ch.n(), bits, policy,
                    [&](const ComplexMatrix& theta) { return gain_siso(ch, theta); });
}

OracleResult oracle_exhaustive(const MuMisoChannel& ch, int bits, ExecPolicy policy) {
  return run_oracle(ch.n(), bits, policy,
                    [&](const ComplexMatrix& theta) { return gain_mumiso(ch, theta); });
}

}  // namespace bdris
