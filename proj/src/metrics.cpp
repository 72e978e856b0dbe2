#include "roadcov/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "roadcov/errors.hpp"

namespace roadcov {

namespace {

// Mean/stderr over values summed in sorted order, so the result does not
// depend on the order realizations were produced in.
struct MeanStderr {
    double mean = std::numeric_limits<double>::quiet_NaN();
    double stderr_ = std::numeric_limits<double>::quiet_NaN();
};

MeanStderr reduce_sorted(std::vector<double> values) {
    MeanStderr out;
    if (values.empty()) {
        return out;
    }
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    out.mean = sum / static_cast<double>(values.size());
    if (values.size() < 2) {
        out.stderr_ = 0.0;
        return out;
    }
    double ss = 0.0;
    for (double v : values) {
        const double d = v - out.mean;
        ss += d * d;
    }
    const double n = static_cast<double>(values.size());
    out.stderr_ = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    return out;
}

} // namespace

double coverage_probability(const std::vector<SnrSample>& samples, double threshold_db) {
    if (samples.empty()) {
        throw NoSamplesError("coverage_probability: no samples");
    }
    std::int64_t covered = 0;
    for (const SnrSample& s : samples) {
        if (s.covered() && s.snr_db >= threshold_db) {
            ++covered;
        }
    }
    return static_cast<double>(covered) / static_cast<double>(samples.size());
}

std::vector<CdfPoint> empirical_cdf(const std::vector<SnrSample>& samples) {
    std::vector<double> values;
    values.reserve(samples.size());
    for (const SnrSample& s : samples) {
        if (s.covered()) {
            values.push_back(s.snr_db);
        }
    }
    if (values.empty()) {
        throw NoSamplesError("empirical_cdf: no covered samples");
    }
    std::sort(values.begin(), values.end());
    std::vector<CdfPoint> cdf;
    cdf.reserve(values.size());
    const double n = static_cast<double>(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        cdf.push_back({values[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

double spectral_efficiency(double snr_db) {
    return std::log2(1.0 + std::pow(10.0, snr_db / 10.0));
}

double cdf_quantile(const std::vector<CdfPoint>& cdf, double q) {
    for (const CdfPoint& p : cdf) {
        if (p.fraction >= q) {
            return p.snr_db;
        }
    }
    return cdf.empty() ? std::numeric_limits<double>::quiet_NaN() : cdf.back().snr_db;
}

MetricsSummary aggregate(const std::vector<std::vector<SnrSample>>& realizations,
                         double threshold_db) {
    if (realizations.empty()) {
        throw NoSamplesError("aggregate: no realizations");
    }

    std::vector<double> cps;
    std::vector<double> se_means;
    std::vector<double> snr_means;
    std::vector<double> pooled_snr;
    cps.reserve(realizations.size());

    MetricsSummary out;
    for (const std::vector<SnrSample>& samples : realizations) {
        cps.push_back(coverage_probability(samples, threshold_db));
        out.n_samples += static_cast<std::int64_t>(samples.size());

        double se_sum = 0.0;
        double snr_sum = 0.0;
        std::int64_t covered = 0;
        for (const SnrSample& s : samples) {
            if (!s.covered()) {
                continue;
            }
            ++covered;
            se_sum += spectral_efficiency(s.snr_db);
            snr_sum += s.snr_db;
            pooled_snr.push_back(s.snr_db);
        }
        out.n_covered += covered;
        if (covered > 0) {
            se_means.push_back(se_sum / static_cast<double>(covered));
            snr_means.push_back(snr_sum / static_cast<double>(covered));
        }
    }

    const MeanStderr cp = reduce_sorted(std::move(cps));
    out.coverage_prob = cp.mean;
    out.coverage_stderr = cp.stderr_;
    const MeanStderr se = reduce_sorted(std::move(se_means));
    out.mean_se = se.mean;
    out.se_stderr = se.stderr_;
    const MeanStderr snr = reduce_sorted(std::move(snr_means));
    out.mean_snr_db = snr.mean;
    out.mean_snr_stderr = snr.stderr_;
    out.n_realizations = static_cast<int>(realizations.size());

    if (!pooled_snr.empty()) {
        std::sort(pooled_snr.begin(), pooled_snr.end());
        out.cdf_points.reserve(pooled_snr.size());
        const double n = static_cast<double>(pooled_snr.size());
        for (std::size_t i = 0; i < pooled_snr.size(); ++i) {
            out.cdf_points.push_back({pooled_snr[i], static_cast<double>(i + 1) / n});
        }
    }
    return out;
}

} // namespace roadcov
