#include "roadcov/simulation.hpp"

#include <cmath>
#include <stdexcept>

#include "roadcov/errors.hpp"

namespace roadcov {

std::size_t associate(const Point2D& vehicle, const std::vector<BaseStation>& stations) {
    if (stations.empty()) {
        throw NoStationsError("associate: no stations");
    }
    std::size_t best = 0;
    double best_d2 = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < stations.size(); ++i) {
        const double dx = vehicle.x - stations[i].position.x;
        const double dy = vehicle.y - stations[i].position.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    return best;
}

Deployment build_realization(const ScenarioConfig& scenario, RandomStream& rng) {
    Deployment d;

    if (scenario.placement == PlacementMode::Central) {
        d.stations.push_back({Point2D{0.0, 0.0}, scenario.bs_height_m, scenario.bs_kind});
    } else {
        for (const Point2D& p :
             sample_ppp_disc(scenario.bs_intensity_per_km2, scenario.disc, rng)) {
            d.stations.push_back({p, scenario.bs_height_m, scenario.bs_kind});
        }
    }

    constexpr int kMaxRoadAttempts = 100;
    double total_length = 0.0;
    for (int attempt = 0; attempt < kMaxRoadAttempts; ++attempt) {
        d.chords = sample_plp_disc(scenario.roads, scenario.disc, rng);
        total_length = 0.0;
        for (const Chord& c : d.chords) {
            total_length += c.length_km;
        }
        if (total_length > 0.0) {
            break;
        }
    }
    if (total_length <= 0.0) {
        throw RoadsEmptyError("build_realization: road process empty after 100 attempts");
    }

    d.vehicles = place_vehicles(d.chords, scenario.vehicle_count, rng);
    return d;
}

std::vector<SnrSample> evaluate_realization(const Deployment& deployment,
                                            const ChannelParams& params,
                                            RandomStream& rng) {
    std::vector<SnrSample> samples;
    samples.reserve(deployment.vehicles.size());
    for (std::size_t v = 0; v < deployment.vehicles.size(); ++v) {
        SnrSample s;
        s.vehicle_index = static_cast<int>(v);
        if (deployment.stations.empty()) {
            samples.push_back(s); // uncovered sentinel
            continue;
        }
        const std::size_t best = associate(deployment.vehicles[v], deployment.stations);
        const BaseStation& station = deployment.stations[best];
        const double d2d_m =
            distance_km(deployment.vehicles[v], station.position) * 1000.0;
        const LinkGeometry geom =
            make_link_geometry(d2d_m, station.height_m, params.vehicle_height_m);
        const LinkBudget budget = link_budget(params, geom, rng);
        s.serving_station_index = static_cast<int>(best);
        s.d2d_m = d2d_m;
        s.los = budget.los;
        s.pathloss_db = budget.pathloss_db;
        s.snr_db = budget.snr_db;
        samples.push_back(s);
    }
    return samples;
}

} // namespace roadcov
