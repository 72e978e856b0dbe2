#pragma once

#include <string>
#include <vector>

#include "roadcov/config.hpp"
#include "roadcov/scenarios.hpp"

namespace roadcov {

/// Base file name (no extension) for an experiment's outputs.
std::string experiment_stem(ExperimentKind kind);

/// CSV text for the experiment's results, bit-stable: fixed header,
/// rows ordered variant-major with the independent variable ascending,
/// numbers at 6 significant digits.
///
///   density sweep: bs_kind,height_m,lambda_per_km2,coverage_prob,coverage_stderr
///   SNR CDF:       bs_kind,height_m,snr_db,cdf
///   SE table:      bs_kind,height_m,se_bits_per_hz,se_stderr
std::string render_csv(ExperimentKind kind, const std::vector<ExperimentResult>& results);

/// gnuplot script plotting the experiment's CSV.
std::string render_plot_script(ExperimentKind kind,
                               const std::vector<ExperimentResult>& results);

/// Written file paths for one experiment.
struct EmittedFiles {
    std::string csv;
    std::string plot_script;
    std::string config_echo;
};

/// Writes <stem>.csv, <stem>.gp and <stem>_config.txt into out_dir.
/// Throws std::runtime_error when a file cannot be written.
EmittedFiles emit_results(const ResolvedExperiment& resolved,
                          const std::vector<ExperimentResult>& results,
                          const std::string& out_dir);

} // namespace roadcov
