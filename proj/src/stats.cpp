#include "bdris/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "bdris/rng.hpp"

namespace bdris::stats {

double mean(std::span<const double> x) {
  if (x.empty()) return 0.0;
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

double stddev(std::span<const double> x) {
  if (x.size() < 2) return 0.0;
  const double mu = mean(x);
  double ss = 0.0;
  for (double v : x) ss += (v - mu) * (v - mu);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double median(std::span<const double> x) {
  if (x.empty()) return 0.0;
  std::vector<double> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  const std::size_t m = s.size() / 2;
  return s.size() % 2 ? s[m] : 0.5 * (s[m - 1] + s[m]);
}

LogLogFit fit_loglog(std::span<const double> n, std::span<const double> t) {
  if (n.size() != t.size() || n.size() < 2) {
    throw std::invalid_argument("fit_loglog: need at least two paired points");
  }
  std::vector<double> lx, ly;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (!(n[k] > 0 && t[k] > 0)) throw std::invalid_argument("fit_loglog: values must be positive");
    lx.push_back(std::log(n[k]));
    ly.push_back(std::log(t[k]));
  }
  const double mx = mean(lx), my = mean(ly);
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    sxy += (lx[k] - mx) * (ly[k] - my);
    sxx += (lx[k] - mx) * (lx[k] - mx);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog: all sizes identical");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double rss = 0.0;
  for (std::size_t k = 0; k < lx.size(); ++k) {
    const double r = ly[k] - (intercept + slope * lx[k]);
    rss += r * r;
  }
  return {slope, intercept, std::sqrt(rss / static_cast<double>(lx.size()))};
}

Interval bootstrap_mean_ci(std::span<const double> x, double level, int resamples,
                           std::uint64_t seed) {
  if (x.empty() || resamples < 1 || !(level > 0 && level < 1)) {
    throw std::invalid_argument("bootstrap_mean_ci: invalid arguments");
  }
  CounterRng rng(derive_seed(seed, 0xB007));
  std::vector<double> means(static_cast<std::size_t>(resamples));
  for (auto& m : means) {
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) s += x[rng.below(x.size())];
    m = s / static_cast<double>(x.size());
  }
  std::sort(means.begin(), means.end());
  const double alpha = (1.0 - level) / 2.0;
  auto at = [&](double p) {
    const auto idx = static_cast<std::size_t>(std::floor(p * static_cast<double>(resamples - 1)));
    return means[std::min(idx, means.size() - 1)];
  };
  return {at(alpha), at(1.0 - alpha)};
}

}  // namespace bdris::stats
