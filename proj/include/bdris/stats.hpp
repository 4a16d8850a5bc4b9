#pragma once

#include <cstdint>
#include <span>

namespace bdris::stats {

double mean(std::span<const double> x);
/// Sample standard deviation (n - 1); 0 for fewer than two samples.
double stddev(std::span<const double> x);
double median(std::span<const double> x);

struct LogLogFit {
  double slope;
  double intercept;
  double residual;  // RMS of log-domain residuals
};

/// Least-squares line through (log n, log t).
LogLogFit fit_loglog(std::span<const double> n, std::span<const double> t);

struct Interval {
  double lo;
  double hi;
};

/// Percentile bootstrap interval of the mean.
Interval bootstrap_mean_ci(std::span<const double> x, double level, int resamples,
                           std::uint64_t seed);

}  // namespace bdris::stats
