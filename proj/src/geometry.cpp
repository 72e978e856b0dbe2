#include "roadcov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "roadcov/errors.hpp"

namespace roadcov {

double distance_km(const Point2D& a, const Point2D& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

Chord make_chord(double theta, double rho, const StudyDisc& disc) {
    const double half = std::sqrt(std::max(disc.radius_km * disc.radius_km - rho * rho, 0.0));
    const double nx = std::cos(theta);
    const double ny = std::sin(theta);
    // Direction along the line is the normal rotated by 90 degrees.
    const double dx = -ny;
    const double dy = nx;
    Chord c;
    c.theta = theta;
    c.rho = rho;
    c.a = {rho * nx - half * dx, rho * ny - half * dy};
    c.b = {rho * nx + half * dx, rho * ny + half * dy};
    c.length_km = 2.0 * half;
    return c;
}

std::vector<Point2D> sample_ppp_disc(double intensity_per_km2, const StudyDisc& disc,
                                     RandomStream& rng) {
    const double mean = intensity_per_km2 * M_PI * disc.radius_km * disc.radius_km;
    const int count = rng.poisson(mean);
    std::vector<Point2D> points;
    points.reserve(count);
    for (int i = 0; i < count; ++i) {
        // sqrt of a uniform gives the uniform-on-disc radial CDF r^2/R^2
        const double r = disc.radius_km * std::sqrt(rng.uniform01());
        const double phi = rng.uniform(0.0, 2.0 * M_PI);
        points.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
    return points;
}

std::vector<Chord> sample_plp_disc(const PlpConfig& config, const StudyDisc& disc,
                                   RandomStream& rng) {
    const double mean = config.line_intensity * M_PI * 2.0 * disc.radius_km;
    const int count = rng.poisson(mean);
    std::vector<Chord> chords;
    chords.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double theta = rng.uniform(0.0, M_PI);
        const double rho = rng.uniform(-disc.radius_km, disc.radius_km);
        chords.push_back(make_chord(theta, rho, disc));
    }
    return chords;
}

Point2D chord_point_at(const Chord& chord, double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("chord_point_at: t must be in [0, 1]");
    }
    return {std::lerp(chord.a.x, chord.b.x, t), std::lerp(chord.a.y, chord.b.y, t)};
}

std::vector<Point2D> place_vehicles(const std::vector<Chord>& chords, int count,
                                    RandomStream& rng) {
    if (chords.empty()) {
        throw RoadsEmptyError("place_vehicles: no road chords");
    }
    std::vector<double> cumulative;
    cumulative.reserve(chords.size());
    double total = 0.0;
    for (const Chord& c : chords) {
        total += c.length_km;
        cumulative.push_back(total);
    }
    if (total <= 0.0) {
        throw RoadsEmptyError("place_vehicles: all road chords have zero length");
    }
    std::vector<Point2D> vehicles;
    vehicles.reserve(count);
    for (int i = 0; i < count; ++i) {
        const double u = rng.uniform01() * total;
        const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        const auto idx = std::min<std::size_t>(it - cumulative.begin(), chords.size() - 1);
        vehicles.push_back(chord_point_at(chords[idx], rng.uniform01()));
    }
    return vehicles;
}

} // namespace roadcov
