#pragma once

#include <cstdint>
#include <vector>

#include "roadcov/simulation.hpp"

namespace roadcov {

struct CdfPoint {
    double snr_db = 0.0;
    double fraction = 0.0;
};

/// Aggregated Monte Carlo results. Means and standard errors treat the
/// realization as the i.i.d. unit (mean of per-realization means,
/// stderr = stddev / sqrt(n)); the CDF pools every covered sample of
/// every realization. mean_se / mean_snr_db are NaN when no realization
/// produced a covered sample.
struct MetricsSummary {
    double coverage_prob = 0.0;
    double coverage_stderr = 0.0;
    double mean_snr_db = 0.0;
    double mean_snr_stderr = 0.0;
    double mean_se = 0.0;
    double se_stderr = 0.0;
    std::vector<CdfPoint> cdf_points;
    int n_realizations = 0;
    std::int64_t n_samples = 0;
    std::int64_t n_covered = 0;
};

/// Fraction of samples with snr_db >= threshold. Uncovered sentinels
/// count as below threshold. Throws NoSamplesError on an empty list.
double coverage_probability(const std::vector<SnrSample>& samples, double threshold_db);

/// Standard empirical CDF over the covered samples, one point per
/// sample, ascending. Throws NoSamplesError when no sample is covered.
std::vector<CdfPoint> empirical_cdf(const std::vector<SnrSample>& samples);

/// Shannon spectral efficiency log2(1 + 10^(snr_db / 10)) in bit/s/Hz.
double spectral_efficiency(double snr_db);

/// Smallest SNR value at which the CDF reaches fraction q.
double cdf_quantile(const std::vector<CdfPoint>& cdf, double q);

/// Aggregates per-realization sample lists into a MetricsSummary.
/// Uncovered vehicles count against coverage but are excluded from the
/// SE and SNR means. The reduction is order-insensitive: permuting the
/// realization list changes no output bit.
MetricsSummary aggregate(const std::vector<std::vector<SnrSample>>& realizations,
                         double threshold_db);

} // namespace roadcov
