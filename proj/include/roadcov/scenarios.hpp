#pragma once

#include <string>
#include <vector>

#include "roadcov/metrics.hpp"
#include "roadcov/scenario.hpp"

namespace roadcov {

enum class ExperimentKind { DensitySweep, SnrCdf, SeTable };

/// One curve of an experiment: a station kind at a fixed height, with
/// the LoS model its links are evaluated under.
struct Variant {
    StationKind kind = StationKind::GBS;
    double height_m = 25.0;
    LosModel los_model = LosModel::UmaStandard;
};

/// Per-kind LoS model defaults: terrestrial stations use the standard
/// UMa probability, aerial ones the height-dependent aerial extension.
LosModel default_los_model(StationKind kind);

Variant make_variant(StationKind kind, double height_m);

std::string variant_label(StationKind kind, double height_m);

struct ExperimentResult {
    std::string label;
    StationKind kind = StationKind::GBS;
    double height_m = 0.0;
    double lambda_per_km2 = 0.0; ///< NaN for central placement
    MetricsSummary summary;
};

/// Runs `config.realizations` independent realizations, each on its own
/// random stream derived from (master_seed, realization index), and
/// aggregates them. With n_threads > 1 realizations are evaluated by a
/// worker pool; results are identical to the sequential run.
MetricsSummary run_scenario(const ScenarioConfig& config, unsigned n_threads = 1);

/// Coverage probability vs. station density, one curve per variant.
std::vector<ExperimentResult> density_sweep(const ScenarioConfig& base,
                                            const std::vector<double>& lambdas,
                                            const std::vector<Variant>& variants,
                                            unsigned n_threads = 1);

/// Pooled SNR distribution per variant at the density configured in
/// `base.bs_intensity_per_km2`.
std::vector<ExperimentResult> cdf_experiment(const ScenarioConfig& base,
                                             const std::vector<Variant>& variants,
                                             unsigned n_threads = 1);

/// Spectral efficiency per variant, stations at the disc center.
std::vector<ExperimentResult> se_height_table(const ScenarioConfig& base,
                                              const std::vector<Variant>& variants,
                                              unsigned n_threads = 1);

} // namespace roadcov
