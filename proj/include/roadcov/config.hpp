#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roadcov/scenarios.hpp"

namespace roadcov {

/// LoS model selection as written in a config file. Auto resolves
/// per station kind (see default_los_model).
enum class LosChoice { Auto, UmaStandard, UmaAerial, ElevationSigmoid };

/// Raw parse result of a config file: one optional per key, nothing
/// defaulted yet. Keys whose defaults depend on the experiment (chi_km,
/// gbs_height_m, abs_heights_m, lambda_grid, placement) stay unset here.
struct ConfigValues {
    std::optional<double> chi_km;
    std::optional<double> line_intensity;
    std::optional<int> vehicles;
    std::optional<int> realizations;
    std::optional<std::uint64_t> seed;
    std::optional<double> freq_ghz;
    std::optional<double> tx_power_dbm;
    std::optional<double> tx_gain_dbi;
    std::optional<double> rx_gain_dbi;
    std::optional<double> bandwidth_mhz;
    std::optional<double> noise_figure_db;
    std::optional<double> snr_threshold_db;
    std::optional<LosChoice> los_model;
    std::optional<bool> shadowing;
    std::optional<double> gbs_height_m;
    std::optional<std::vector<double>> abs_heights_m;
    std::optional<std::vector<double>> lambda_grid;
    std::optional<PlacementMode> placement;
};

/// Parses `key = value` lines ('#' starts a comment). Unknown keys,
/// duplicate keys, unparsable or out-of-range values raise ConfigError
/// with the offending line number; nothing is accepted partially.
ConfigValues parse_config(const std::string& text);

/// parse_config over the contents of a file.
ConfigValues parse_config_file(const std::string& path);

/// A config fully resolved for one experiment: every default applied,
/// the variant list and density grid built.
struct ResolvedExperiment {
    ExperimentKind kind = ExperimentKind::DensitySweep;
    ScenarioConfig base;
    LosChoice los_choice = LosChoice::Auto;
    double gbs_height_m = 25.0;
    std::vector<double> abs_heights_m;
    std::vector<double> lambda_grid;
    std::vector<Variant> variants; ///< GBS first, then ABS by ascending height
};

bool operator==(const ResolvedExperiment& a, const ResolvedExperiment& b);

/// Applies the experiment's defaults to the parsed values.
///
/// Shared defaults: Lambda = 2, 200 vehicles, 500 realizations, seed 1,
/// f = 3.5 GHz, P_tx = 23 dBm, G_tx = 10 dBi, G_rx = 2 dBi, B = 20 MHz,
/// NF = 9 dB, threshold 30 dB, los_model auto, shadowing off.
/// Per experiment: density sweep uses chi = 1 km, GBS at 25 m, ABS at
/// {25, 50, 100} m, densities {1, 2, 4, 8, 12}; the SNR CDF uses
/// chi = 2 km and density 1 (first lambda_grid entry); the SE table uses
/// chi = 0.5 km, central placement, GBS at 15 m, ABS at {40, 60, 80, 100} m.
ResolvedExperiment resolve_experiment(const ConfigValues& values, ExperimentKind kind);

/// Serializes a resolved experiment back to config-file text with every
/// key explicit. parse + resolve of the output reproduces the input.
std::string emit_config_echo(const ResolvedExperiment& resolved);

} // namespace roadcov
