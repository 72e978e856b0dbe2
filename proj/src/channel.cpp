#include "roadcov/channel.hpp"

#include <algorithm>
#include <cmath>

#include "roadcov/errors.hpp"

namespace roadcov {

namespace {

constexpr double kSpeedOfLight = 3.0e8; // propagation constant used by TR 38.901

double uma_standard_los(double d2d_m, double ut_height_m) {
    if (ut_height_m > 23.0) {
        throw ModelDomainError(
            "UmaStandard LoS probability is valid for ut heights up to 23 m");
    }
    if (d2d_m <= 18.0) {
        return 1.0;
    }
    const double base = 18.0 / d2d_m + std::exp(-d2d_m / 63.0) * (1.0 - 18.0 / d2d_m);
    double c = 0.0;
    if (ut_height_m > 13.0) {
        c = std::pow((ut_height_m - 13.0) / 10.0, 1.5);
    }
    const double boost =
        1.0 + c * 1.25 * std::pow(d2d_m / 100.0, 3.0) * std::exp(-d2d_m / 150.0);
    return std::clamp(base * boost, 0.0, 1.0);
}

double uma_aerial_los(double d2d_m, double aerial_height_m) {
    double h = aerial_height_m;
    if (h <= 22.5 || h > 100.0) {
        channel_warnings().aerial_height_clamped.fetch_add(1, std::memory_order_relaxed);
        h = std::clamp(h, 22.5, 100.0);
    }
    const double lg = std::log10(h);
    const double p1 = 4300.0 * lg - 3800.0;
    const double d1 = std::max(460.0 * lg - 700.0, 18.0);
    if (d2d_m <= d1) {
        return 1.0;
    }
    const double p = d1 / d2d_m + std::exp(-d2d_m / p1) * (1.0 - d1 / d2d_m);
    return std::clamp(p, 0.0, 1.0);
}

} // namespace

ChannelWarnings& channel_warnings() {
    static ChannelWarnings warnings;
    return warnings;
}

LinkGeometry make_link_geometry(double d2d_m, double bs_height_m, double ut_height_m) {
    LinkGeometry g;
    g.d2d_m = d2d_m;
    g.bs_height_m = bs_height_m;
    g.ut_height_m = ut_height_m;
    const double dh = bs_height_m - ut_height_m;
    g.d3d_m = std::hypot(d2d_m, dh);
    g.elevation_deg = std::max(std::atan2(dh, d2d_m) * 180.0 / M_PI, 0.0);
    return g;
}

double sigmoid_los_probability(double elevation_deg, double a, double b) {
    const double p = 1.0 / (1.0 + a * std::exp(-b * (elevation_deg - a)));
    return std::clamp(p, 0.0, 1.0);
}

double los_probability(LosModel model, const LinkGeometry& geom) {
    switch (model) {
    case LosModel::UmaStandard:
        return uma_standard_los(geom.d2d_m, geom.ut_height_m);
    case LosModel::UmaAerialHeightDependent:
        return uma_aerial_los(geom.d2d_m, geom.bs_height_m);
    case LosModel::ElevationSigmoid:
        return sigmoid_los_probability(geom.elevation_deg);
    }
    throw ModelDomainError("los_probability: unknown model");
}

static double pathloss_uma_mean(const ChannelParams& params, const LinkGeometry& geom,
                                bool los) {
    double d2d = geom.d2d_m;
    double d3d = geom.d3d_m;
    if (d2d < 1.0) {
        channel_warnings().distance_clamped.fetch_add(1, std::memory_order_relaxed);
        d2d = 1.0;
        d3d = std::hypot(d2d, geom.bs_height_m - geom.ut_height_m);
    }
    const double f = params.carrier_freq_ghz;
    const double dh = geom.bs_height_m - geom.ut_height_m;
    const double eff_bs = std::max(geom.bs_height_m - 1.0, 0.0);
    const double eff_ut = std::max(geom.ut_height_m - 1.0, 0.0);
    const double d_bp = 4.0 * eff_bs * eff_ut * f * 1e9 / kSpeedOfLight;

    double pl_los;
    if (d2d <= d_bp) {
        pl_los = 28.0 + 22.0 * std::log10(d3d) + 20.0 * std::log10(f);
    } else {
        pl_los = 28.0 + 40.0 * std::log10(d3d) + 20.0 * std::log10(f) -
                 9.0 * std::log10(d_bp * d_bp + dh * dh);
    }
    if (los) {
        return pl_los;
    }
    const double pl_nlos = 13.54 + 39.08 * std::log10(d3d) + 20.0 * std::log10(f) -
                           0.6 * (geom.ut_height_m - 1.5);
    return std::max(pl_los, pl_nlos);
}

double pathloss_uma(const ChannelParams& params, const LinkGeometry& geom, bool los) {
    return pathloss_uma_mean(params, geom, los);
}

double pathloss_uma(const ChannelParams& params, const LinkGeometry& geom, bool los,
                    RandomStream& rng) {
    double pl = pathloss_uma_mean(params, geom, los);
    if (params.shadowing_enabled) {
        pl += rng.normal(0.0, los ? 4.0 : 6.0);
    }
    return pl;
}

double noise_power_dbm(const ChannelParams& params) {
    return -174.0 + 10.0 * std::log10(params.bandwidth_mhz * 1e6) + params.noise_figure_db;
}

LinkBudget link_budget(const ChannelParams& params, const LinkGeometry& geom,
                       RandomStream& rng) {
    const double p_los = los_probability(params.los_model, geom);
    LinkBudget budget;
    budget.los = rng.bernoulli(p_los);
    budget.pathloss_db = pathloss_uma(params, geom, budget.los, rng);
    budget.snr_db = params.tx_power_dbm + params.tx_gain_dbi + params.rx_gain_dbi -
                    budget.pathloss_db - noise_power_dbm(params);
    return budget;
}

LinkBudget link_budget_forced(const ChannelParams& params, const LinkGeometry& geom,
                              bool los) {
    LinkBudget budget;
    budget.los = los;
    budget.pathloss_db = pathloss_uma(params, geom, los);
    budget.snr_db = params.tx_power_dbm + params.tx_gain_dbi + params.rx_gain_dbi -
                    budget.pathloss_db - noise_power_dbm(params);
    return budget;
}

} // namespace roadcov
