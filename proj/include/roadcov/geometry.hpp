#pragma once

#include <vector>

#include "roadcov/rng.hpp"

namespace roadcov {

/// Circular study region centered at the origin.
struct StudyDisc {
    double radius_km = 1.0;
};

struct Point2D {
    double x = 0.0; ///< km
    double y = 0.0; ///< km
};

double distance_km(const Point2D& a, const Point2D& b);

/// Segment of a random line clipped to the study disc. Lines are
/// parameterized in Hesse normal form: `theta` is the direction of the
/// line's normal in [0, pi), `rho` the signed distance of the line from
/// the origin in [-radius, radius]. Both endpoints lie on the disc
/// boundary; `length_km = 2 * sqrt(radius^2 - rho^2)`.
struct Chord {
    double theta = 0.0;
    double rho = 0.0;
    Point2D a;
    Point2D b;
    double length_km = 0.0;
};

/// Road process intensity: density of the line-parameter point process
/// on the strip [0, pi) x [-radius, radius], in lines per rad*km. The
/// expected number of chords crossing the disc is
/// `2 * pi * radius * line_intensity`.
struct PlpConfig {
    double line_intensity = 2.0;
};

/// Builds the chord of the line (theta, rho) inside the disc.
Chord make_chord(double theta, double rho, const StudyDisc& disc);

/// Homogeneous Poisson point process on the disc. The count is Poisson
/// with mean `intensity_per_km2 * pi * radius^2`; points are i.i.d.
/// uniform over the disc area.
std::vector<Point2D> sample_ppp_disc(double intensity_per_km2, const StudyDisc& disc,
                                     RandomStream& rng);

/// Motion-invariant Poisson line process restricted to the disc:
/// (theta, rho) pairs form a Poisson process of density
/// `config.line_intensity` on [0, pi) x [-radius, radius].
std::vector<Chord> sample_plp_disc(const PlpConfig& config, const StudyDisc& disc,
                                   RandomStream& rng);

/// Point at fraction t in [0, 1] along the chord (t=0 -> a, t=1 -> b).
/// Throws std::domain_error for t outside [0, 1].
Point2D chord_point_at(const Chord& chord, double t);

/// Places `count` points on the chords, uniformly with respect to total
/// road length: a chord is selected with probability proportional to its
/// length, then the position along it is uniform. Throws RoadsEmptyError
/// when no chord has positive length.
std::vector<Point2D> place_vehicles(const std::vector<Chord>& chords, int count,
                                    RandomStream& rng);

} // namespace roadcov
