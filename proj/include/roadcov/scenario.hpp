#pragma once

#include <cstdint>

#include "roadcov/channel.hpp"
#include "roadcov/geometry.hpp"

namespace roadcov {

enum class StationKind { GBS, ABS };

enum class PlacementMode {
    Ppp,     ///< stations from a Poisson point process at `bs_intensity_per_km2`
    Central, ///< a single station at the origin
};

/// Everything one Monte Carlo experiment needs: the study region, the
/// road and station processes, the channel, and the run controls.
struct ScenarioConfig {
    StudyDisc disc{1.0};
    PlpConfig roads{2.0};
    int vehicle_count = 200;

    StationKind bs_kind = StationKind::GBS;
    double bs_height_m = 25.0;
    PlacementMode placement = PlacementMode::Ppp;
    double bs_intensity_per_km2 = 4.0;

    ChannelParams channel;
    double snr_threshold_db = 30.0;

    int realizations = 500;
    std::uint64_t master_seed = 1;
};

} // namespace roadcov
