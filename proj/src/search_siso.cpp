#include "bdris/search_siso.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

#include "bdris/errors.hpp"
#include "bdris/projection.hpp"
#include "bdris/reciprocal_kernel.hpp"
#include "bdris/rng.hpp"

namespace bdris {

namespace {

constexpr std::uint64_t kRootStream = 0x726F6F74ULL;

cplx unit_or_zero(cplx z) {
  const double a = std::abs(z);
  return a > 0.0 ? z / a : cplx{0.0, 0.0};
}

}  // namespace

double alignment(const ComplexMatrix& hbar, const ComplexVector& vbar, const ComplexMatrix& theta) {
  if (std::abs(hbar.norm() - 1.0) > 1e-10 || std::abs(vbar.norm() - 1.0) > 1e-10) {
    throw std::invalid_argument("alignment: channel vectors must have unit norm");
  }
  if (hbar.rows() != 1 || hbar.cols() != theta.rows() || vbar.size() != theta.cols()) {
    throw DimensionError("alignment: dimension mismatch");
  }
  return (hbar * theta * vbar)(0, 0).real();
}

SisoResult search_siso(const SisoChannel& ch, const SearchParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();

  const int n = ch.n();
  const PhaseShiftSet qset(params.bits);
  const LevelMap map(n);
  DiscreteConfig cfg(n);
  ComplexMatrix current = ComplexMatrix::Zero(n, n);
  SearchTrace trace(n);

  const double hn = ch.h.norm();
  const double vn = ch.v.norm();
  const ComplexMatrix hbar = hn > 0 ? ComplexMatrix(ch.h / hn) : ch.h;
  const ComplexVector vbar = vn > 0 ? ComplexVector(ch.v / vn) : ch.v;
  const ScoreFn score = [&](const ComplexMatrix& theta) {
    return (hbar * theta * vbar)(0, 0).real();
  };

  auto commit = [&](Entry e, std::size_t q, int evaluated, double r, double best_r) {
    cfg.assign(e.i, e.j, q);
    current(e.i, e.j) = qset.phasor(q);
    trace.entry_visits(e.i, e.j) += 1;
    if (!e.diagonal()) trace.entry_visits(e.j, e.i) += 1;
    trace.level_candidates.push_back(evaluated);
    trace.level_r.push_back(r);
    trace.level_best_r.push_back(best_r);
    trace.candidates_evaluated += evaluated;
    trace.levels_explored += 1;
  };

  // Root: random phase on the top-level entry.
  CounterRng rng(derive_seed(params.rng_seed, kRootStream));
  const Entry root = map.level_to_entry(map.levels());
  const std::size_t q0 = rng.below(qset.size());
  const cplx z0 = ch.h(0, root.i) * ch.v(root.j);
  cplx m = unit_or_zero(z0) * qset.phasor(q0);
  commit(root, q0, 1, std::norm(m / 2.0), std::norm(m / 2.0));

  for (int level = map.levels() - 1; level >= 1; --level) {
    const Entry e = map.level_to_entry(level);

    if (e.diagonal()) {
      const cplx zu = unit_or_zero(ch.h(0, e.i) * ch.v(e.j));
      std::size_t chosen = 0;
      double chosen_r = -std::numeric_limits<double>::infinity();
      double best_r = chosen_r;
      int evaluated = 0;
      for (std::size_t q = 0; q < qset.size(); ++q) {
        const cplx cand = m + zu * qset.phasor(q);
        const double r = std::norm(cand / 2.0);
        ++evaluated;
        best_r = std::max(best_r, r);
        if (r > params.eps) {
          chosen = q;
          chosen_r = r;
          break;
        }
        if (r > chosen_r) {
          chosen = q;
          chosen_r = r;
        }
      }
      m += zu * qset.phasor(chosen);
      commit(e, chosen, evaluated, chosen_r, best_r);
      continue;
    }

    const Entry recip{e.j, e.i};
    std::size_t chosen = 0, chosen_recip = 0;
    double chosen_r = -std::numeric_limits<double>::infinity();
    double best_r = chosen_r;
    int evaluated = 0;
    for (std::size_t q = 0; q < qset.size(); ++q) {
      current(e.i, e.j) = qset.phasor(q);
      const auto scores = reciprocal_scores(current, recip, qset, score, params.reciprocal_policy);
      const ArgMax best = first_argmax(scores);
      evaluated += static_cast<int>(qset.size());
      best_r = std::max(best_r, *std::max_element(scores.begin(), scores.end()));
      if (best.value > params.eps) {
        chosen = q;
        chosen_recip = best.index;
        chosen_r = best.value;
        break;
      }
      if (best.value > chosen_r) {
        chosen = q;
        chosen_recip = best.index;
        chosen_r = best.value;
      }
    }
    cfg.assign(recip.i, recip.j, chosen_recip);
    current(recip.i, recip.j) = qset.phasor(chosen_recip);
    commit(e, chosen, evaluated, chosen_r, best_r);
  }

  ComplexMatrix theta = uni_sym(current);
  trace.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(theta), std::move(cfg), std::move(trace)};
}

}  // namespace bdris
