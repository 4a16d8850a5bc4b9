#include "bdris/experiments.hpp"

#include <string>
#include <vector>

#include "bdris/baselines.hpp"
#include "bdris/errors.hpp"
#include "bdris/monte_carlo.hpp"
#include "bdris/rng.hpp"
#include "bdris/search_mumiso.hpp"
#include "bdris/search_siso.hpp"

namespace bdris {

namespace {

constexpr std::uint64_t kSearchStream = 0x5EA4C4ULL;
constexpr double kTimerFloor = 1e-6;

struct Sample {
  double gain = 0.0;
  double levels = 0.0;
  double runtime = 0.0;
  double candidates = 0.0;
};

struct Summary {
  double mean_gain, std_gain, mean_levels, mean_runtime;
};

Summary summarize(const std::vector<Sample>& s) {
  std::vector<double> g, l, t;
  for (const auto& x : s) {
    g.push_back(x.gain);
    l.push_back(x.levels);
    t.push_back(x.runtime);
  }
  return {stats::mean(g), stats::stddev(g), stats::mean(l), stats::mean(t)};
}

std::string str(int v) { return std::to_string(v); }

}  // namespace

std::uint64_t realization_seed(std::uint64_t master, int n, int r) {
  return derive_seed(derive_seed(master, static_cast<std::uint64_t>(n)),
                     static_cast<std::uint64_t>(r));
}

SearchParams search_params_from(const ExperimentConfig& cfg) {
  SearchParams p;
  p.eps = cfg.eps;
  p.rho = cfg.rho;
  p.delay_d = cfg.delay_d;
  p.bits = cfg.bits;
  p.branch_pruning_enabled = cfg.branch_pruning;
  p.random_root = cfg.random_root;
  p.rng_seed = cfg.scenario.seed;
  return p;
}

SisoChannel siso_realization(const ExperimentConfig& cfg, int n, int r) {
  return gen_siso(n, realization_seed(cfg.scenario.seed, n, r));
}

MuMisoChannel mumiso_realization(const ExperimentConfig& cfg, int n, int r) {
  if (cfg.channel_model == ChannelModel::iid) {
    return gen_mumiso_iid(n, cfg.antennas, cfg.users, cfg.obstructed,
                          realization_seed(cfg.scenario.seed, n, r));
  }
  ScenarioConfig scn = cfg.scenario;
  scn.seed = derive_seed(cfg.scenario.seed, static_cast<std::uint64_t>(n));
  return gen_mumiso(scn, n, cfg.antennas, cfg.users, cfg.obstructed,
                    static_cast<std::uint64_t>(r));
}

namespace {

SearchParams per_realization(SearchParams p, int n, int r) {
  p.rng_seed = derive_seed(realization_seed(p.rng_seed, n, r), kSearchStream);
  return p;
}

Sample run_one(const ExperimentConfig& cfg, const SearchParams& base, const std::string& algo,
               int n, int r) {
  const SearchParams params = per_realization(base, n, r);
  Sample s;
  if (cfg.system == SystemKind::siso) {
    const SisoChannel ch = siso_realization(cfg, n, r);
    if (algo == "tree") {
      const auto res = search_siso(ch, params);
      s = {gain_siso(ch, res.theta), static_cast<double>(res.trace.levels_explored),
           res.trace.wall_time, static_cast<double>(res.trace.candidates_evaluated)};
    } else if (algo == "diag_ris") {
      s.gain = gain_siso(ch, diagonal_ris_config(ch));
    } else if (algo == "oracle") {
      s.gain = oracle_exhaustive(ch, params.bits, ExecPolicy::serial).best_gain;
    }
  } else {
    const MuMisoChannel ch = mumiso_realization(cfg, n, r);
    if (algo == "tree") {
      const auto res = search_mumiso(ch, params);
      s = {res.gain, static_cast<double>(res.trace.levels_explored), res.trace.wall_time,
           static_cast<double>(res.trace.candidates_evaluated)};
    } else if (algo == "baseline") {
      s.gain = gain_mumiso(ch, baseline_low_complexity(ch));
    } else if (algo == "oracle") {
      s.gain = oracle_exhaustive(ch, params.bits, ExecPolicy::serial).best_gain;
    }
  }
  return s;
}

}  // namespace

Table run_gain_sweep(const ExperimentConfig& cfg, ExecPolicy policy) {
  cfg.validate();
  const SearchParams base = search_params_from(cfg);
  Table t{{"N", "algorithm", "mean_gain", "std_gain", "mean_levels_explored", "mean_runtime_s"},
          {}};
  for (int n : cfg.n_list) {
    for (const auto& algo : cfg.algorithms) {
      const auto samples = map_realizations<Sample>(
          cfg.scenario.realizations, [&](int r) { return run_one(cfg, base, algo, n, r); },
          policy);
      const Summary sm = summarize(samples);
      t.add({str(n), algo, format_double(sm.mean_gain), format_double(sm.std_gain),
             format_double(sm.mean_levels),
             format_double(cfg.record_timing ? sm.mean_runtime : 0.0)});
    }
    if (cfg.system == SystemKind::siso) {
      const auto b = siso_upper_bounds(n);
      t.add({str(n), "bd_ris_bound", format_double(b.bd_ris), "0", "0", "0"});
      t.add({str(n), "diag_ris_bound", format_double(b.diagonal_ris), "0", "0", "0"});
    }
  }
  return t;
}

RuntimeBench run_runtime_bench(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.n_list.size() < 4) throw ConfigError("runtime-bench needs at least 4 sizes in N_list");
  const SearchParams base = search_params_from(cfg);
  const int reps = std::max(cfg.repetitions, 10);

  RuntimeBench out{{{"kind", "N", "repetitions", "median_time_s", "mean_levels_explored",
                     "mean_candidates", "slope", "residual", "machine"},
                    {}},
                   {}};
  std::vector<double> ns, ts;
  for (int n : cfg.n_list) {
    std::vector<double> times, levels, cands;
    for (int r = 0; r < reps; ++r) {
      const Sample s = run_one(cfg, base, "tree", n, r);
      times.push_back(s.runtime);
      levels.push_back(s.levels);
      cands.push_back(s.candidates);
    }
    const double med = stats::median(times);
    const bool resolved = med >= kTimerFloor;
    out.table.add({resolved ? "point" : "warning", str(n), str(reps), format_double(med),
                   format_double(stats::mean(levels)), format_double(stats::mean(cands)), "", "",
                   cfg.machine});
    if (resolved) {
      ns.push_back(n);
      ts.push_back(med);
    }
  }
  if (ns.size() < 2) throw NumericalError("runtime-bench: too few resolvable timings to fit");
  out.fit = stats::fit_loglog(ns, ts);
  out.table.add({"fit", "", "", "", "", "", format_double(out.fit.slope),
                 format_double(out.fit.residual), cfg.machine});
  return out;
}

Table run_heatmap(const ExperimentConfig& cfg, ExecPolicy policy) {
  cfg.validate();
  if (cfg.system != SystemKind::mumiso) throw ConfigError("heatmap requires system = mumiso");
  const int n = cfg.n_list.front();
  Table t{{"rho", "d", "i", "j", "usage_fraction"}, {}};
  for (double rho : cfg.rho_list) {
    for (int d : cfg.d_list) {
      SearchParams base = search_params_from(cfg);
      base.branch_pruning_enabled = true;
      base.rho = rho;
      base.delay_d = d;
      const auto visits = map_realizations<Eigen::MatrixXi>(
          cfg.scenario.realizations,
          [&](int r) {
            return search_mumiso(mumiso_realization(cfg, n, r), per_realization(base, n, r))
                .trace.entry_visits;
          },
          policy);
      Eigen::MatrixXi total = Eigen::MatrixXi::Zero(n, n);
      for (const auto& v : visits) total += v;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          t.add({format_double(rho), str(d), str(i + 1), str(j + 1),
                 format_double(static_cast<double>(total(i, j)) / cfg.scenario.realizations)});
        }
      }
    }
  }
  return t;
}

Table run_oracle_check(const ExperimentConfig& cfg, ExecPolicy policy) {
  cfg.validate();
  for (int n : cfg.n_list) {
    if (!oracle_fits(n, cfg.bits)) {
      throw SizeGuardError("oracle-check: N=" + str(n) + ", bits=" + str(cfg.bits) +
                           " exceeds 2^20 candidates");
    }
  }
  const SearchParams base = search_params_from(cfg);
  Table t{{"N", "realization", "tree_gain", "oracle_gain", "ratio", "oracle_candidates"}, {}};
  struct Row {
    double tree, oracle;
    std::uint64_t cands;
  };
  for (int n : cfg.n_list) {
    const auto rows = map_realizations<Row>(
        cfg.scenario.realizations,
        [&](int r) {
          const SearchParams p = per_realization(base, n, r);
          if (cfg.system == SystemKind::siso) {
            const auto ch = siso_realization(cfg, n, r);
            const auto o = oracle_exhaustive(ch, p.bits, ExecPolicy::serial);
            return Row{gain_siso(ch, search_siso(ch, p).theta), o.best_gain, o.candidates};
          }
          const auto ch = mumiso_realization(cfg, n, r);
          const auto o = oracle_exhaustive(ch, p.bits, ExecPolicy::serial);
          return Row{search_mumiso(ch, p).gain, o.best_gain, o.candidates};
        },
        policy);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const double ratio = rows[r].oracle > 0 ? rows[r].tree / rows[r].oracle : 1.0;
      t.add({str(n), std::to_string(r), format_double(rows[r].tree),
             format_double(rows[r].oracle), format_double(ratio),
             std::to_string(rows[r].cands)});
    }
  }
  return t;
}

Table run_validate_siso(const ExperimentConfig& cfg, ExecPolicy policy) {
  cfg.validate();
  Table t{{"N", "bits", "eps", "algorithm", "mean_gain", "std_gain", "mean_levels_explored"}, {}};
  ExperimentConfig siso = cfg;
  siso.system = SystemKind::siso;
  for (int n : cfg.n_list) {
    for (int bits : cfg.bits_list) {
      for (double eps : cfg.eps_list) {
        siso.bits = bits;
        siso.eps = eps;
        const SearchParams base = search_params_from(siso);
        const auto samples = map_realizations<Sample>(
            cfg.scenario.realizations, [&](int r) { return run_one(siso, base, "tree", n, r); },
            policy);
        const Summary sm = summarize(samples);
        t.add({str(n), str(bits), format_double(eps), "tree", format_double(sm.mean_gain),
               format_double(sm.std_gain), format_double(sm.mean_levels)});
      }
    }
    const SearchParams base = search_params_from(siso);
    const Summary diag = summarize(map_realizations<Sample>(
        cfg.scenario.realizations, [&](int r) { return run_one(siso, base, "diag_ris", n, r); },
        policy));
    t.add({str(n), "0", "0", "diag_ris", format_double(diag.mean_gain),
           format_double(diag.std_gain), "0"});
    const auto b = siso_upper_bounds(n);
    t.add({str(n), "0", "0", "bd_ris_bound", format_double(b.bd_ris), "0", "0"});
    t.add({str(n), "0", "0", "diag_ris_bound", format_double(b.diagonal_ris), "0", "0"});
  }
  return t;
}

}  // namespace bdris
