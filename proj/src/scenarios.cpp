#include "roadcov/scenarios.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace roadcov {

LosModel default_los_model(StationKind kind) {
    return kind == StationKind::GBS ? LosModel::UmaStandard
                                    : LosModel::UmaAerialHeightDependent;
}

Variant make_variant(StationKind kind, double height_m) {
    return {kind, height_m, default_los_model(kind)};
}

std::string variant_label(StationKind kind, double height_m) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%g", kind == StationKind::GBS ? "GBS" : "ABS",
                  height_m);
    return buf;
}

namespace {

std::vector<SnrSample> run_one_realization(const ScenarioConfig& config, int index) {
    RandomStream rng(derive_stream_seed(config.master_seed, index));
    const Deployment deployment = build_realization(config, rng);
    return evaluate_realization(deployment, config.channel, rng);
}

} // namespace

MetricsSummary run_scenario(const ScenarioConfig& config, unsigned n_threads) {
    if (config.realizations < 1) {
        throw std::invalid_argument("run_scenario: realizations must be >= 1");
    }
    const int n = config.realizations;
    std::vector<std::vector<SnrSample>> results(n);

    if (n_threads <= 1) {
        for (int i = 0; i < n; ++i) {
            try {
                results[i] = run_one_realization(config, i);
            } catch (const std::exception& e) {
                throw std::runtime_error("realization " + std::to_string(i) + ": " +
                                         e.what());
            }
        }
    } else {
        std::atomic<int> next{0};
        std::mutex error_mutex;
        std::string first_error;
        auto worker = [&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
                try {
                    results[i] = run_one_realization(config, i);
                } catch (const std::exception& e) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (first_error.empty()) {
                        first_error =
                            "realization " + std::to_string(i) + ": " + e.what();
                    }
                }
            }
        };
        const unsigned count = std::min<unsigned>(n_threads, static_cast<unsigned>(n));
        std::vector<std::thread> pool;
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
        if (!first_error.empty()) {
            throw std::runtime_error(first_error);
        }
    }
    return aggregate(results, config.snr_threshold_db);
}

namespace {

ScenarioConfig variant_config(const ScenarioConfig& base, const Variant& v) {
    ScenarioConfig c = base;
    c.bs_kind = v.kind;
    c.bs_height_m = v.height_m;
    c.channel.los_model = v.los_model;
    return c;
}

} // namespace

std::vector<ExperimentResult> density_sweep(const ScenarioConfig& base,
                                            const std::vector<double>& lambdas,
                                            const std::vector<Variant>& variants,
                                            unsigned n_threads) {
    std::vector<ExperimentResult> results;
    results.reserve(lambdas.size() * variants.size());
    for (const Variant& v : variants) {
        for (double lambda : lambdas) {
            ScenarioConfig c = variant_config(base, v);
            c.bs_intensity_per_km2 = lambda;
            ExperimentResult r;
            r.label = variant_label(v.kind, v.height_m);
            r.kind = v.kind;
            r.height_m = v.height_m;
            r.lambda_per_km2 = lambda;
            r.summary = run_scenario(c, n_threads);
            results.push_back(std::move(r));
        }
    }
    return results;
}

std::vector<ExperimentResult> cdf_experiment(const ScenarioConfig& base,
                                             const std::vector<Variant>& variants,
                                             unsigned n_threads) {
    std::vector<ExperimentResult> results;
    results.reserve(variants.size());
    for (const Variant& v : variants) {
        ScenarioConfig c = variant_config(base, v);
        ExperimentResult r;
        r.label = variant_label(v.kind, v.height_m);
        r.kind = v.kind;
        r.height_m = v.height_m;
        r.lambda_per_km2 = c.placement == PlacementMode::Ppp
                               ? c.bs_intensity_per_km2
                               : std::numeric_limits<double>::quiet_NaN();
        r.summary = run_scenario(c, n_threads);
        results.push_back(std::move(r));
    }
    return results;
}

std::vector<ExperimentResult> se_height_table(const ScenarioConfig& base,
                                              const std::vector<Variant>& variants,
                                              unsigned n_threads) {
    std::vector<ExperimentResult> results;
    results.reserve(variants.size());
    for (const Variant& v : variants) {
        ScenarioConfig c = variant_config(base, v);
        ExperimentResult r;
        r.label = variant_label(v.kind, v.height_m);
        r.kind = v.kind;
        r.height_m = v.height_m;
        r.lambda_per_km2 = c.placement == PlacementMode::Ppp
                               ? c.bs_intensity_per_km2
                               : std::numeric_limits<double>::quiet_NaN();
        r.summary = run_scenario(c, n_threads);
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace roadcov
