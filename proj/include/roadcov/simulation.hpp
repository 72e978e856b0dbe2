#pragma once

#include <limits>
#include <vector>

#include "roadcov/scenario.hpp"

namespace roadcov {

struct BaseStation {
    Point2D position;
    double height_m = 25.0;
    StationKind kind = StationKind::GBS;
};

/// One realization's random scene.
struct Deployment {
    std::vector<BaseStation> stations;
    std::vector<Point2D> vehicles;
    std::vector<Chord> chords;
};

/// Serving-link result for one vehicle. A vehicle with no station to
/// associate to carries serving_station_index = -1 and snr_db = -inf;
/// it counts as uncovered everywhere downstream.
struct SnrSample {
    int vehicle_index = 0;
    int serving_station_index = -1;
    double d2d_m = 0.0;
    bool los = false;
    double pathloss_db = 0.0;
    double snr_db = -std::numeric_limits<double>::infinity();

    bool covered() const { return serving_station_index >= 0; }
};

/// Index of the station nearest to the vehicle in horizontal distance;
/// ties break toward the lowest index. Throws NoStationsError when the
/// list is empty.
std::size_t associate(const Point2D& vehicle, const std::vector<BaseStation>& stations);

/// Samples one realization: stations (PPP or a single central one),
/// roads, and exactly `vehicle_count` vehicles on them. A road process
/// that comes up empty is resampled, up to 100 attempts.
Deployment build_realization(const ScenarioConfig& scenario, RandomStream& rng);

/// Evaluates every vehicle's serving link: nearest-station association,
/// one LoS draw per serving link, UMa path loss, interference-free SNR.
std::vector<SnrSample> evaluate_realization(const Deployment& deployment,
                                            const ChannelParams& params,
                                            RandomStream& rng);

} // namespace roadcov
