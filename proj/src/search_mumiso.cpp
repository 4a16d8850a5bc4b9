#include "bdris/search_mumiso.hpp"

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
}  // namespace

Suitability::Suitability(const MuMisoChannel& ch) : ch_(&ch) {
  if (ch.direct_obstructed()) {
    norm_ = ch.y().norm() * ch.z().norm();
  } else {
    norm_ = linalg::nuclear_norm(ch.x());
  }
  if (!(norm_ > 0.0) || !std::isfinite(norm_)) {
    throw DegenerateChannelError(ch.direct_obstructed()
                                     ? "suitability: ||Y||_F ||Z||_F is zero"
                                     : "suitability: ||X||_* is zero");
  }
}

double Suitability::operator()(const ComplexMatrix& phi) const {
  if (phi.rows() != ch_->n() || phi.cols() != ch_->n()) {
    throw DimensionError("suitability: configuration size does not match channel");
  }
  double m;
  if (ch_->direct_obstructed()) {
    m = linalg::trace_of_product(phi.adjoint() * ch_->y() * phi, ch_->z()).real();
  } else {
    m = linalg::trace_of_product(phi, ch_->x()).real();
  }
  return (m + norm_) / (2.0 * norm_);
}

double var_calc(const MuMisoChannel& ch, const ComplexMatrix& phi) {
  return Suitability(ch)(phi);
}

MuMisoResult search_mumiso(const MuMisoChannel& ch, const SearchParams& params) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();

  const int n = ch.n();
  const PhaseShiftSet qset(params.bits);
  const LevelMap map(n);
  const Suitability suitability(ch);
  const ScoreFn score = [&](const ComplexMatrix& theta) { return suitability(theta); };

  DiscreteConfig cfg(n);
  ComplexMatrix current = ComplexMatrix::Zero(n, n);
  SearchTrace trace(n);

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

  double r_ref = 0.0;
  int failures = 0;
  int level = map.levels();

  if (params.random_root) {
    CounterRng rng(derive_seed(params.rng_seed, kRootStream));
    const Entry root = map.level_to_entry(level);
    const std::size_t q0 = rng.below(qset.size());
    current(root.i, root.j) = qset.phasor(q0);
    const double r0 = suitability(current);
    commit(root, q0, 1, r0, r0);
    --level;
  }

  for (; level >= 1; --level) {
    const Entry e = map.level_to_entry(level);
    std::size_t chosen = 0, chosen_recip = 0;
    double chosen_r = -std::numeric_limits<double>::infinity();
    double best_r = chosen_r;
    bool accepted = false;
    int evaluated = 0;

    if (e.diagonal()) {
      for (std::size_t q = 0; q < qset.size(); ++q) {
        current(e.i, e.i) = qset.phasor(q);
        const double r = suitability(current);
        ++evaluated;
        best_r = std::max(best_r, r);
        if (r > params.eps) {
          chosen = q;
          chosen_r = r;
          accepted = true;
          break;
        }
        if (r > chosen_r) {
          chosen = q;
          chosen_r = r;
        }
      }
    } else {
      const Entry recip{e.j, e.i};
      for (std::size_t q = 0; q < qset.size(); ++q) {
        current(e.i, e.j) = qset.phasor(q);
        const auto scores =
            reciprocal_scores(current, recip, qset, score, params.reciprocal_policy);
        const ArgMax best = first_argmax(scores);
        evaluated += static_cast<int>(qset.size());
        best_r = std::max(best_r, *std::max_element(scores.begin(), scores.end()));
        if (best.value > params.eps) {
          chosen = q;
          chosen_recip = best.index;
          chosen_r = best.value;
          accepted = true;
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
    }
    commit(e, chosen, evaluated, chosen_r, best_r);

    if (params.branch_pruning_enabled && accepted) {
      if (std::abs(chosen_r - r_ref) < params.rho) {
        if (++failures > params.delay_d) break;
      } else {
        failures = 0;
        r_ref = chosen_r;
      }
    }
  }

  MuMisoResult out{uni_sym(current), 0.0, std::move(cfg), std::move(trace)};
  out.gain = gain_mumiso(ch, out.theta);
  out.trace.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace bdris
