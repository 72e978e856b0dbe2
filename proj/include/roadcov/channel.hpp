#pragma once

#include <atomic>
#include <cstdint>

#include "roadcov/rng.hpp"

namespace roadcov {

/// Strategy for the line-of-sight probability of a link.
///
/// UmaStandard             terrestrial Urban Macro LoS probability
///                         (3GPP TR 38.901, Table 7.4.2-1)
/// UmaAerialHeightDependent  aerial UMa extension for node heights in
///                         (22.5, 100] m (3GPP TR 36.777, Table B-1),
///                         applied with the base station as the aerial
///                         terminal (link reciprocity)
/// ElevationSigmoid        sigmoid in the elevation angle with urban
///                         constants a = 9.61, b = 0.16
enum class LosModel {
    UmaStandard,
    UmaAerialHeightDependent,
    ElevationSigmoid,
};

struct ChannelParams {
    double carrier_freq_ghz = 3.5;
    double tx_power_dbm = 23.0;
    double tx_gain_dbi = 10.0;
    double rx_gain_dbi = 2.0;
    double bandwidth_mhz = 20.0;
    double noise_figure_db = 9.0;
    double vehicle_height_m = 1.5;
    LosModel los_model = LosModel::UmaStandard;
    bool shadowing_enabled = false;
};

/// Geometry of one vehicle-to-station link. Build with
/// make_link_geometry so the derived fields stay consistent.
struct LinkGeometry {
    double d2d_m = 0.0;       ///< horizontal distance
    double bs_height_m = 0.0;
    double ut_height_m = 0.0;
    double d3d_m = 0.0;       ///< derived slant distance
    double elevation_deg = 0.0; ///< derived angle of the station above the terminal horizon
};

LinkGeometry make_link_geometry(double d2d_m, double bs_height_m, double ut_height_m);

struct LinkBudget {
    bool los = false;
    double pathloss_db = 0.0;
    double snr_db = 0.0;
};

/// Counters for out-of-range inputs that are clamped rather than
/// rejected. Thread-safe; reset between runs to attribute warnings.
struct ChannelWarnings {
    std::atomic<std::uint64_t> aerial_height_clamped{0};
    std::atomic<std::uint64_t> distance_clamped{0};

    void reset() {
        aerial_height_clamped = 0;
        distance_clamped = 0;
    }
};

ChannelWarnings& channel_warnings();

/// LoS probability of the link under the chosen model, in [0, 1].
/// Throws ModelDomainError when the model is evaluated outside its
/// stated validity (UmaStandard requires ut_height <= 23 m). Aerial
/// heights outside (22.5, 100] m are clamped to the boundary and
/// counted in channel_warnings().
double los_probability(LosModel model, const LinkGeometry& geom);

/// ElevationSigmoid with explicit constants.
double sigmoid_los_probability(double elevation_deg, double a = 9.61, double b = 0.16);

/// Urban Macro path loss in dB (3GPP TR 38.901, Table 7.4.1-1).
/// LoS uses the dual-slope model around the breakpoint distance
/// 4 * (h_bs - 1) * (h_ut - 1) * f / c; NLoS is the max of the LoS value
/// and the NLoS formula. Horizontal distances below 1 m are clamped to
/// 1 m and counted in channel_warnings(). This overload never applies
/// shadow fading.
double pathloss_uma(const ChannelParams& params, const LinkGeometry& geom, bool los);

/// As above, adding a zero-mean Gaussian shadowing term (sigma 4 dB LoS,
/// 6 dB NLoS) drawn from `rng` when params.shadowing_enabled.
double pathloss_uma(const ChannelParams& params, const LinkGeometry& geom, bool los,
                    RandomStream& rng);

/// Thermal noise power: -174 dBm/Hz + 10*log10(bandwidth) + noise figure.
double noise_power_dbm(const ChannelParams& params);

/// Interference-free link budget: draws the LoS state as
/// Bernoulli(los_probability), evaluates path loss on that branch and
/// returns SNR = P_tx + G_tx + G_rx - PL - N.
LinkBudget link_budget(const ChannelParams& params, const LinkGeometry& geom,
                       RandomStream& rng);

/// Deterministic link budget with a forced LoS state; never applies
/// shadow fading and draws nothing.
LinkBudget link_budget_forced(const ChannelParams& params, const LinkGeometry& geom,
                              bool los);

} // namespace roadcov
