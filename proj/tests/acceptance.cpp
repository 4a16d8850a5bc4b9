// Acceptance suite: one PASS/FAIL line per criterion with the measured values.
// Exit status is non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bdris/baselines.hpp"
#include "bdris/channel.hpp"
#include "bdris/config.hpp"
#include "bdris/csv.hpp"
#include "bdris/experiments.hpp"
#include "bdris/linalg.hpp"
#include "bdris/monte_carlo.hpp"
#include "bdris/projection.hpp"
#include "bdris/rng.hpp"
#include "bdris/search_mumiso.hpp"
#include "bdris/search_siso.hpp"
#include "bdris/stats.hpp"

using namespace bdris;

namespace {

constexpr std::uint64_t kMaster = 20250417;

int failures = 0;
std::map<int, std::string> verdicts;

// Constraint residuals of every configuration returned by a search in this run.
struct ResidualLog {
  double unitarity = 0.0;
  double symmetry = 0.0;
  long long count = 0;
} residuals;

struct Run {
  double gain = 0.0;
  double unitarity = 0.0;
  double symmetry = 0.0;
};

Run observe(const ComplexMatrix& theta, double gain) {
  return {gain, linalg::unitarity_residual(theta), linalg::symmetry_residual(theta)};
}

std::vector<double> absorb(const std::vector<Run>& runs) {
  std::vector<double> gains;
  for (const Run& r : runs) {
    residuals.unitarity = std::max(residuals.unitarity, r.unitarity);
    residuals.symmetry = std::max(residuals.symmetry, r.symmetry);
    ++residuals.count;
    gains.push_back(r.gain);
  }
  return gains;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

void report(int id, const std::string& name, bool pass, const std::string& detail) {
  const std::string line = std::string(pass ? "[PASS]" : "[FAIL]") + " criterion " +
                           std::to_string(id) + " (" + name + "): " + detail;
  std::printf("%s\n", line.c_str());
  std::fflush(stdout);
  verdicts[id] = line;
  if (!pass) ++failures;
}

void info(const std::string& name, const std::string& detail) {
  std::printf("[INFO] %s: %s\n", name.c_str(), detail.c_str());
  std::fflush(stdout);
}

double mean_of(const std::vector<double>& x) { return stats::mean(x); }

ComplexMatrix normal_matrix(int rows, int cols, CounterRng& rng) {
  ComplexMatrix m(rows, cols);
  for (Eigen::Index k = 0; k < m.size(); ++k) m(k) = rng.complex_normal();
  return m;
}

ComplexMatrix random_sym_unitary(int n, CounterRng& rng) {
  Eigen::HouseholderQR<ComplexMatrix> qr(normal_matrix(n, n, rng));
  const ComplexMatrix q = qr.householderQ();
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) d(k, k) = std::polar(1.0, 2.0 * 3.141592653589793 * rng.uniform());
  return q.transpose() * d * q;
}

ComplexMatrix random_discrete_projected(int n, const PhaseShiftSet& qs, CounterRng& rng) {
  DiscreteConfig cfg(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) cfg.assign(i, j, rng.below(qs.size()));
  }
  return uni_sym(materialize(cfg, qs));
}

ComplexMatrix random_diagonal_partial(int n, const PhaseShiftSet& qs, CounterRng& rng) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    if (rng.uniform() < 0.7) m(i, i) = qs.phasor(rng.below(qs.size()));
  }
  return m;
}

MuMisoChannel pathloss_channel(int n, bool obstructed, std::uint64_t stream, int r) {
  ScenarioConfig scn;
  scn.seed = derive_seed(kMaster, stream);
  return gen_mumiso(scn, n, 4, 4, obstructed, static_cast<std::uint64_t>(r));
}

std::vector<double> siso_tree_gains(int n, int bits, double eps, int count) {
  return absorb(map_realizations<Run>(
      count,
      [&](int r) {
        const std::uint64_t seed = derive_seed(derive_seed(kMaster, 100 + n), r);
        const SisoChannel ch = gen_siso(n, seed);
        SearchParams p;
        p.bits = bits;
        p.eps = eps;
        p.rng_seed = derive_seed(seed, 7);
        const SisoResult res = search_siso(ch, p);
        return observe(res.theta, gain_siso(ch, res.theta));
      },
      ExecPolicy::openmp));
}

std::string csv_of(const Table& t) {
  std::ostringstream os;
  write_csv(os, t);
  return os.str();
}

double elapsed(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

// ---------------------------------------------------------------------------

void criteria_1_and_2() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass1 = true;
  std::string d1;
  std::vector<double> bits4_means;
  for (int n : {2, 3, 4, 6}) {
    const double m = mean_of(siso_tree_gains(n, 4, 0.1, 200));
    bits4_means.push_back(m);
    const double need = 0.9 * n * n;
    pass1 = pass1 && m >= need;
    d1 += "N=" + std::to_string(n) + " mean " + fmt("%.3f", m) + " (need >= " +
          fmt("%.1f", need) + ", ratio to N^2 " + fmt("%.3f", m / (n * n)) + "); ";
  }
  report(1, "siso near-bound, bits=4, eps=0.1, 200 realizations", pass1,
         d1 + fmt("%.1fs", elapsed(t0)));

  bool pass2 = true;
  std::string d2;
  const int idx[] = {2, 3};
  const int sizes[] = {4, 6};
  for (int k = 0; k < 2; ++k) {
    const int n = sizes[k];
    const double m1 = mean_of(siso_tree_gains(n, 1, 0.1, 200));
    const double m4 = bits4_means[idx[k]];
    pass2 = pass2 && m1 <= 0.95 * m4;
    d2 += "N=" + std::to_string(n) + " bits=1 " + fmt("%.3f", m1) + " vs bits=4 " +
          fmt("%.3f", m4) + " (" + fmt("%.1f", 100.0 * (1.0 - m1 / m4)) + "% lower); ";
  }
  report(2, "alphabet sensitivity, need >= 5% lower with bits=1", pass2, d2);

  for (double eps : {0.5, 1.0 - 1e-9}) {
    std::string d;
    for (int n : {2, 4, 6}) {
      const double m = mean_of(siso_tree_gains(n, 4, eps, 200));
      d += "N=" + std::to_string(n) + " ratio " + fmt("%.3f", m / (n * n)) + "; ";
    }
    info("siso mean gain / N^2 at eps=" + fmt("%.9g", eps), d);
  }
}

void criterion_3() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto runs = map_realizations<Run>(
      1000,
      [](int r) {
        const int n = 1 + r % 8;
        const std::uint64_t seed = derive_seed(kMaster, 3000000 + r);
        SearchParams p;
        p.bits = 1 + r % 4;
        p.eps = (r / 2) % 3 == 0 ? 0.1 : ((r / 2) % 3 == 1 ? 0.5 : 0.9);
        p.rng_seed = seed;
        if (r % 2 == 0) {
          const SisoChannel ch = gen_siso(n, seed);
          const SisoResult res = search_siso(ch, p);
          return observe(res.theta, 0.0);
        }
        p.branch_pruning_enabled = r % 3 == 0;
        p.delay_d = r % 5;
        const bool obstructed = r % 4 == 1;
        const MuMisoChannel ch = r % 8 < 4 ? gen_mumiso_iid(n, 1 + r % 4, 1 + r % 3, obstructed, seed)
                                           : pathloss_channel(n, obstructed, 3, r);
        const MuMisoResult res = search_mumiso(ch, p);
        return observe(res.theta, res.gain);
      },
      ExecPolicy::openmp);
  absorb(runs);
  double u = 0.0, s = 0.0;
  for (const Run& r : runs) {
    u = std::max(u, r.unitarity);
    s = std::max(s, r.symmetry);
  }
  info("constraint suite", "1000 random searches, max ||T^H T - I||_F " + fmt("%.3g", u) +
                               ", max ||T - T^T||_F " + fmt("%.3g", s) + ", " +
                               fmt("%.1fs", elapsed(t0)));
}

void report_criterion_3() {
  const bool pass = residuals.unitarity <= 1e-8 && residuals.symmetry <= 1e-8;
  report(3, "constraint satisfaction over every returned configuration", pass,
         std::to_string(residuals.count) + " configurations, max unitarity residual " +
             fmt("%.3g", residuals.unitarity) + ", max symmetry residual " +
             fmt("%.3g", residuals.symmetry) + " (limit 1e-8)");
}

void criterion_4() {
  const PhaseShiftSet qs(4);
  bool pass = true;
  std::string d;
  for (bool obstructed : {true, false}) {
    double lo = 1.0, hi = 0.0;
    CounterRng rng(derive_seed(kMaster, obstructed ? 41 : 42));
    for (int k = 0; k < 10000; ++k) {
      const int n = 1 + k % 10;
      const MuMisoChannel ch =
          k % 2 == 0 ? gen_mumiso_iid(n, 1 + k % 5, 1 + k % 3, obstructed, rng.next_u64())
                     : pathloss_channel(n, obstructed, 40, k);
      const Suitability w(ch);
      ComplexMatrix phi;
      switch (k % 3) {
        case 0: phi = random_sym_unitary(n, rng); break;
        case 1: phi = random_discrete_projected(n, qs, rng); break;
        default: phi = random_diagonal_partial(n, qs, rng); break;
      }
      const double v = w(phi);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    pass = pass && lo >= -1e-9 && hi <= 1.0 + 1e-9;
    d += std::string(obstructed ? "obstructed" : "unobstructed") + ": 10000 draws, w in [" +
         fmt("%.6g", lo) + ", " + fmt("%.6g", hi) + "]; ";
  }
  report(4, "normalization bounds, w in [-1e-9, 1+1e-9]", pass, d);
}

void criterion_5() {
  CounterRng rng(derive_seed(kMaster, 5));
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const int n = 1 + k % 12;
    const bool obstructed = k % 3 == 0;
    const MuMisoChannel ch =
        k % 2 == 0 ? gen_mumiso_iid(n, 1 + k % 6, 1 + k % 4, obstructed, rng.next_u64())
                   : pathloss_channel(n, obstructed, 50, k);
    const ComplexMatrix theta =
        k % 4 == 3 ? normal_matrix(n, n, rng) : random_sym_unitary(n, rng);
    const double direct = gain_mumiso(ch, theta);
    const double expanded = gain_mumiso_expanded(ch, theta);
    worst = std::max(worst, std::abs(direct - expanded) / std::max(std::abs(direct), 1e-300));
  }
  report(5, "direct vs expanded channel strength", worst <= 1e-8,
         "1000 instances, max relative difference " + fmt("%.3g", worst) + " (limit 1e-8)");
}

struct OracleRatios {
  int at_least_090 = 0;
  double min_ratio = 1e300;
  double mean_ratio = 0.0;
  int seeds = 0;
};

OracleRatios mumiso_oracle_ratios(int bits, const std::function<MuMisoChannel(int)>& make) {
  const auto pairs = map_realizations<std::pair<Run, double>>(
      50,
      [&](int s) {
        const MuMisoChannel ch = make(s);
        SearchParams p;
        p.bits = bits;
        p.eps = 1.0 - 1e-9;
        const MuMisoResult res = search_mumiso(ch, p);
        return std::make_pair(observe(res.theta, res.gain),
                              oracle_exhaustive(ch, bits, ExecPolicy::serial).best_gain);
      },
      ExecPolicy::openmp);
  OracleRatios out;
  for (const auto& [run, oracle] : pairs) {
    absorb({run});
    const double ratio = run.gain / oracle;
    out.at_least_090 += ratio >= 0.9 ? 1 : 0;
    out.min_ratio = std::min(out.min_ratio, ratio);
    out.mean_ratio += ratio / 50.0;
    ++out.seeds;
  }
  return out;
}

std::string describe(const OracleRatios& r) {
  return fmt("%.0f", r.at_least_090) + "/" + std::to_string(r.seeds) + " seeds >= 0.9, min " +
         fmt("%.4f", r.min_ratio) + ", mean " + fmt("%.4f", r.mean_ratio);
}

void criterion_6() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string d;
  for (int bits : {1, 2}) {
    const OracleRatios r = mumiso_oracle_ratios(
        bits, [](int s) { return pathloss_channel(2, false, 600, s); });
    pass = pass && r.at_least_090 >= 45 && r.min_ratio >= 0.75;
    d += "bits=" + std::to_string(bits) + ": " + describe(r) + "; ";
  }
  report(6, "oracle ratio, N=2, 4x4 path-loss scenario, eps=1-1e-9", pass,
         d + fmt("%.1fs", elapsed(t0)));

  for (int bits : {1, 2}) {
    info("oracle ratio, i.i.d. channels, bits=" + std::to_string(bits),
         describe(mumiso_oracle_ratios(bits, [](int s) {
           return gen_mumiso_iid(2, 4, 4, false, derive_seed(kMaster, 610 + s));
         })));
    info("oracle ratio, obstructed path-loss, bits=" + std::to_string(bits),
         describe(mumiso_oracle_ratios(
             bits, [](int s) { return pathloss_channel(2, true, 620, s); })));
  }
  std::vector<double> ratios;
  for (int s = 0; s < 50; ++s) {
    const SisoChannel ch = gen_siso(2, derive_seed(kMaster, 630 + s));
    SearchParams p;
    p.bits = 1;
    p.rng_seed = s;
    const SisoResult res = search_siso(ch, p);
    absorb({observe(res.theta, 0.0)});
    ratios.push_back(gain_siso(ch, res.theta) / oracle_exhaustive(ch, 1).best_gain);
  }
  const auto at_least = std::count_if(ratios.begin(), ratios.end(), [](double r) { return r >= 0.9; });
  info("siso oracle ratio, N=2, bits=1, eps=0.1",
       std::to_string(at_least) + "/50 seeds >= 0.9, min " +
           fmt("%.4f", *std::min_element(ratios.begin(), ratios.end())) + ", mean " +
           fmt("%.4f", stats::mean(ratios)));
}

struct Comparison {
  std::vector<double> tree, baseline;
};

Comparison tree_vs_baseline(int n, bool obstructed, const SearchParams& p, std::uint64_t stream) {
  const auto runs = map_realizations<std::pair<Run, double>>(
      100,
      [&](int r) {
        const MuMisoChannel ch = pathloss_channel(n, obstructed, stream, r);
        const MuMisoResult res = search_mumiso(ch, p);
        const ComplexMatrix base = baseline_low_complexity(ch);
        return std::make_pair(observe(res.theta, res.gain), gain_mumiso(ch, base));
      },
      ExecPolicy::openmp);
  Comparison c;
  for (const auto& [run, base] : runs) {
    absorb({run});
    c.tree.push_back(run.gain);
    c.baseline.push_back(base);
  }
  return c;
}

void criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  SearchParams p;
  p.eps = 0.1;
  p.rho = 1e-4;
  p.delay_d = 0;
  p.branch_pruning_enabled = true;
  bool pass = true;
  std::string d;
  for (int n : {9, 16, 25}) {
    const Comparison c = tree_vs_baseline(n, true, p, 700 + n);
    const double t = mean_of(c.tree), b = mean_of(c.baseline);
    pass = pass && t > b;
    std::vector<double> ratios;
    int wins = 0;
    for (std::size_t k = 0; k < c.tree.size(); ++k) {
      ratios.push_back(c.tree[k] / c.baseline[k]);
      wins += c.tree[k] > c.baseline[k] ? 1 : 0;
    }
    const double top = *std::max_element(c.baseline.begin(), c.baseline.end());
    info("obstructed, N=" + std::to_string(n) + " per realization",
         "tree wins " + std::to_string(wins) + "/100, median tree/baseline " +
             fmt("%.3f", stats::median(ratios)) + ", largest baseline draw is " +
             fmt("%.0f", 100.0 * top / (100.0 * b)) + "% of the baseline mean");
    d += "N=" + std::to_string(n) + " tree " + fmt("%.4g", t) + " vs baseline " + fmt("%.4g", b);
    if (n == 25) {
      const auto ct = stats::bootstrap_mean_ci(c.tree, 0.95, 5000, derive_seed(kMaster, 71));
      const auto cb = stats::bootstrap_mean_ci(c.baseline, 0.95, 5000, derive_seed(kMaster, 72));
      const bool disjoint = ct.lo > cb.hi;
      pass = pass && disjoint;
      d += ", 95% CI tree [" + fmt("%.4g", ct.lo) + ", " + fmt("%.4g", ct.hi) + "] baseline [" +
           fmt("%.4g", cb.lo) + ", " + fmt("%.4g", cb.hi) + "]" +
           (disjoint ? " disjoint" : " overlapping");
    }
    d += "; ";
  }
  report(7, "obstructed superiority, 4x4, rho=1e-4, 100 realizations", pass,
         d + fmt("%.1fs", elapsed(t0)));
}

void criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  SearchParams p;
  p.eps = 0.1;
  bool pass = true;
  std::string d;
  for (int n : {9, 16, 25}) {
    const Comparison c = tree_vs_baseline(n, false, p, 800 + n);
    const double ratio = mean_of(c.tree) / mean_of(c.baseline);
    pass = pass && ratio >= 0.8 && ratio <= 1.2;
    d += "N=" + std::to_string(n) + " tree/baseline " + fmt("%.4f", ratio) + "; ";
  }
  report(8, "unobstructed proximity, ratio in [0.8, 1.2], 100 realizations", pass,
         d + fmt("%.1fs", elapsed(t0)));
}

std::string bench_detail(const RuntimeBench& b) {
  std::string d;
  for (const auto& row : b.table.rows) {
    if (row[0] == "fit") continue;
    d += "N=" + row[1] + " median " + fmt("%.3g", std::stod(row[3])) + "s levels " +
         fmt("%.1f", std::stod(row[4])) + " candidates " + fmt("%.0f", std::stod(row[5])) + "; ";
  }
  return d + "slope " + fmt("%.3f", b.fit.slope) + " (rms residual " + fmt("%.3f", b.fit.residual) +
         ")";
}

void criterion_9() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig full;
  full.system = SystemKind::mumiso;
  full.n_list = {4, 6, 8, 10, 12};
  full.eps = 0.99;
  full.branch_pruning = false;
  full.repetitions = 10;
  full.scenario.seed = derive_seed(kMaster, 9);
  full.machine = "acceptance";
  const RuntimeBench a = run_runtime_bench(full);
  const bool pass_a = a.fit.slope >= 4.0 && a.fit.slope <= 6.0;

  ExperimentConfig pruned = full;
  pruned.n_list = {9, 16, 25, 36};
  pruned.eps = 0.1;
  pruned.branch_pruning = true;
  pruned.rho = 1e-4;
  pruned.delay_d = 0;
  const RuntimeBench b = run_runtime_bench(pruned);
  const bool pass_b = b.fit.slope >= 1.5 && b.fit.slope <= 3.0;

  report(9, "complexity scaling", pass_a && pass_b,
         std::string("eps=0.99 unpruned, need slope in [4, 6]: ") + (pass_a ? "ok" : "out of range") +
             ", " + bench_detail(a) + " | rho=1e-4 d=0, need slope in [1.5, 3]: " +
             (pass_b ? "ok" : "out of range") + ", " + bench_detail(b) + " | " +
             fmt("%.1fs", elapsed(t0)));
}

double mean_usage(double rho, int d) {
  ExperimentConfig cfg;
  cfg.system = SystemKind::mumiso;
  cfg.n_list = {16};
  cfg.scenario.realizations = 100;
  cfg.scenario.seed = derive_seed(kMaster, 10);
  cfg.rho_list = {rho};
  cfg.d_list = {d};
  const Table t = run_heatmap(cfg);
  double sum = 0.0;
  for (const auto& row : t.rows) sum += std::stod(row[4]);
  return sum / static_cast<double>(t.rows.size());
}

void criterion_10() {
  const auto t0 = std::chrono::steady_clock::now();
  const double tight = mean_usage(1e-9, 8);
  const double loose = mean_usage(1e-2, 0);
  report(10, "pruning instrumentation, N=16, 100 realizations", tight > loose,
         "mean usage fraction (rho=1e-9, d=8) " + fmt("%.4f", tight) + " vs (rho=1e-2, d=0) " +
             fmt("%.4f", loose) + "; " + fmt("%.1fs", elapsed(t0)));
}

void criterion_11() {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string d;
  auto check = [&](const std::string& name, const std::function<Table(ExecPolicy)>& run) {
    const std::string a = csv_of(run(ExecPolicy::openmp));
    const std::string b = csv_of(run(ExecPolicy::openmp));
    const std::string c = csv_of(run(ExecPolicy::serial));
    const bool same = a == b && a == c && !a.empty();
    pass = pass && same;
    d += name + (same ? " identical" : " DIFFERS") + "; ";
  };
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    ExperimentConfig cfg = parse_config(in);
    cfg.scenario.seed = kMaster;
    return cfg;
  };
  const ExperimentConfig siso =
      parse("system = siso\nN_list = 2, 4\nrealizations = 40\nalgorithms = tree, diag_ris\n");
  const ExperimentConfig mu =
      parse("system = mumiso\nN_list = 4, 6\nrealizations = 20\nalgorithms = tree, baseline\n");
  const ExperimentConfig heat = parse("system = mumiso\nN_list = 6\nrealizations = 20\n");
  const ExperimentConfig orc = parse("system = mumiso\nN_list = 1, 2\nbits = 1\nrealizations = 10\n");
  const ExperimentConfig val = parse("N_list = 2, 3\nrealizations = 20\n");
  check("gain-sweep siso", [&](ExecPolicy p) { return run_gain_sweep(siso, p); });
  check("gain-sweep mumiso", [&](ExecPolicy p) { return run_gain_sweep(mu, p); });
  check("heatmap", [&](ExecPolicy p) { return run_heatmap(heat, p); });
  check("oracle-check", [&](ExecPolicy p) { return run_oracle_check(orc, p); });
  check("validate-siso", [&](ExecPolicy p) { return run_validate_siso(val, p); });

  // Wall-clock columns cannot repeat; everything else must.
  const ExperimentConfig bench = parse("system = mumiso\nN_list = 2, 3, 4, 5\nrepetitions = 10\n");
  auto untimed = [&] {
    Table t = run_runtime_bench(bench).table;
    for (auto& row : t.rows) row[3] = row[6] = row[7] = "";
    return csv_of(t);
  };
  const bool bench_same = untimed() == untimed();
  pass = pass && bench_same;
  d += std::string("runtime-bench non-timing columns ") + (bench_same ? "identical" : "DIFFER");
  report(11, "determinism, repeated and serial runs", pass, d + "; " + fmt("%.1fs", elapsed(t0)));
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  criteria_1_and_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  report_criterion_3();
  std::printf("\nsummary\n");
  for (const auto& [id, line] : verdicts) std::printf("%s\n", line.c_str());
  std::printf("%d of %zu criteria failed, total %.1fs\n", failures, verdicts.size(), elapsed(t0));
  return failures == 0 ? 0 : 1;
}
