#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "roadcov/errors.hpp"
#include "roadcov/geometry.hpp"

using namespace roadcov;

TEST_CASE("ppp with zero intensity is empty") {
    RandomStream rng(1);
    CHECK(sample_ppp_disc(0.0, {1.0}, rng).empty());
    CHECK(sample_ppp_disc(0.0, {25.0}, rng).empty());
}

TEST_CASE("ppp count matches the analytic mean and is equidispersed") {
    const StudyDisc disc{1.0};
    const double intensity = 4.0;
    const double mean = intensity * M_PI; // 4*pi ~ 12.566
    const int draws = 10000;

    RandomStream rng(42);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < draws; ++i) {
        const auto pts = sample_ppp_disc(intensity, disc, rng);
        sum += static_cast<double>(pts.size());
        sum_sq += static_cast<double>(pts.size()) * pts.size();
    }
    const double sample_mean = sum / draws;
    const double sample_var = (sum_sq - draws * sample_mean * sample_mean) / (draws - 1);
    CHECK(std::abs(sample_mean - mean) < 3.0 * std::sqrt(mean / draws));
    CHECK(std::abs(sample_var - sample_mean) < 0.1 * sample_mean);
}

TEST_CASE("ppp points are uniform on the disc") {
    const StudyDisc disc{1.0};
    RandomStream rng(43);
    std::int64_t total = 0;
    std::int64_t inner = 0;
    for (int i = 0; i < 10000; ++i) {
        for (const Point2D& p : sample_ppp_disc(4.0, disc, rng)) {
            const double r2 = p.x * p.x + p.y * p.y;
            REQUIRE(r2 <= disc.radius_km * disc.radius_km + 1e-9);
            ++total;
            if (r2 <= 0.25) {
                ++inner;
            }
        }
    }
    // radial CDF r^2 / chi^2: a quarter of the points inside r = 0.5
    const double frac = static_cast<double>(inner) / static_cast<double>(total);
    const double tol = 3.0 * std::sqrt(0.25 * 0.75 / static_cast<double>(total));
    CHECK(std::abs(frac - 0.25) < tol);
}

TEST_CASE("plp with zero intensity is empty") {
    RandomStream rng(2);
    CHECK(sample_plp_disc({0.0}, {1.0}, rng).empty());
}

TEST_CASE("plp line count matches 2*pi*chi*Lambda") {
    const StudyDisc disc{1.0};
    const PlpConfig config{2.0};
    const double mean = 2.0 * M_PI * disc.radius_km * config.line_intensity;
    REQUIRE(mean == doctest::Approx(4.0 * M_PI));

    RandomStream rng(44);
    double sum = 0.0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        sum += static_cast<double>(sample_plp_disc(config, disc, rng).size());
    }
    CHECK(std::abs(sum / draws - mean) < 3.0 * std::sqrt(mean / draws));
}

TEST_CASE("chord geometry from (theta, rho)") {
    const StudyDisc disc{1.0};

    SUBCASE("rho 0.6 gives the hand-computed 1.6 km length") {
        const Chord c = make_chord(0.7, 0.6, disc);
        CHECK(c.length_km == doctest::Approx(1.6).epsilon(1e-12));
    }

    SUBCASE("endpoints sit on the boundary, length consistent with rho") {
        RandomStream rng(45);
        for (int i = 0; i < 2000; ++i) {
            const double theta = rng.uniform(0.0, M_PI);
            const double rho = rng.uniform(-1.0, 1.0);
            const Chord c = make_chord(theta, rho, disc);
            CHECK(std::abs(std::hypot(c.a.x, c.a.y) - 1.0) < 1e-9);
            CHECK(std::abs(std::hypot(c.b.x, c.b.y) - 1.0) < 1e-9);
            CHECK(std::abs(c.length_km - 2.0 * std::sqrt(1.0 - rho * rho)) < 1e-9);
            CHECK(std::abs(distance_km(c.a, c.b) - c.length_km) < 1e-9);
        }
    }
}

TEST_CASE("plp angles are uniform on [0, pi)") {
    // chi-square uniformity check, 10 bins, 1% significance
    const StudyDisc disc{1.0};
    RandomStream rng(46);
    std::vector<std::int64_t> bins(10, 0);
    std::int64_t total = 0;
    for (int i = 0; i < 10000; ++i) {
        for (const Chord& c : sample_plp_disc({2.0}, disc, rng)) {
            REQUIRE(c.theta >= 0.0);
            REQUIRE(c.theta < M_PI);
            ++bins[static_cast<std::size_t>(c.theta / M_PI * 10.0)];
            ++total;
        }
    }
    const double expected = static_cast<double>(total) / 10.0;
    double chi2 = 0.0;
    for (std::int64_t b : bins) {
        const double d = static_cast<double>(b) - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 21.666); // chi-square critical value, 9 dof, alpha = 0.01
}

TEST_CASE("chord_point_at hits the endpoints exactly") {
    const Chord c = make_chord(1.1, -0.3, {2.0});
    const Point2D p0 = chord_point_at(c, 0.0);
    const Point2D p1 = chord_point_at(c, 1.0);
    CHECK(p0.x == c.a.x);
    CHECK(p0.y == c.a.y);
    CHECK(p1.x == c.b.x);
    CHECK(p1.y == c.b.y);

    // diameter through the origin: midpoint is the origin
    const Chord diameter = make_chord(0.0, 0.0, {1.0});
    const Point2D mid = chord_point_at(diameter, 0.5);
    CHECK(mid.x == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(mid.y == doctest::Approx(0.0).epsilon(1e-15));

    CHECK_THROWS_AS(chord_point_at(c, -0.01), std::domain_error);
    CHECK_THROWS_AS(chord_point_at(c, 1.01), std::domain_error);
}

TEST_CASE("place_vehicles") {
    const StudyDisc disc{1.0};
    RandomStream rng(47);

    SUBCASE("zero count gives an empty list") {
        const std::vector<Chord> chords{make_chord(0.0, 0.0, disc)};
        CHECK(place_vehicles(chords, 0, rng).empty());
    }

    SUBCASE("empty chord list is an error") {
        CHECK_THROWS_AS(place_vehicles({}, 10, rng), RoadsEmptyError);
    }

    SUBCASE("all chords degenerate is an error") {
        const std::vector<Chord> chords{make_chord(0.3, 1.0, disc),
                                        make_chord(0.9, -1.0, disc)};
        CHECK_THROWS_AS(place_vehicles(chords, 10, rng), RoadsEmptyError);
    }

    SUBCASE("single diameter keeps points collinear") {
        // theta = 0: the line runs along the y axis
        const std::vector<Chord> chords{make_chord(0.0, 0.0, disc)};
        for (const Point2D& p : place_vehicles(chords, 500, rng)) {
            CHECK(std::abs(p.x) < 1e-12);
            CHECK(std::abs(p.y) <= 1.0 + 1e-12);
        }
    }

    SUBCASE("selection is proportional to chord length") {
        // lengths 2 km and 1 km; 2/3 of the vehicles belong on the long one
        const Chord long_chord = make_chord(0.0, 0.0, disc);
        const Chord short_chord = make_chord(0.0, std::sqrt(3.0) / 2.0, disc);
        REQUIRE(long_chord.length_km == doctest::Approx(2.0));
        REQUIRE(short_chord.length_km == doctest::Approx(1.0));

        const std::vector<Chord> chords{long_chord, short_chord};
        const int count = 30000;
        int on_long = 0;
        for (const Point2D& p : place_vehicles(chords, count, rng)) {
            // the short chord sits at x = sqrt(3)/2, the long one at x = 0
            if (std::abs(p.x) < 0.4) {
                ++on_long;
            }
        }
        const double frac = static_cast<double>(on_long) / count;
        const double tol = 3.0 * std::sqrt((2.0 / 9.0) / count);
        CHECK(std::abs(frac - 2.0 / 3.0) < tol);
    }

    SUBCASE("degenerate chords get zero weight") {
        const std::vector<Chord> chords{make_chord(0.0, 1.0, disc),
                                        make_chord(0.0, 0.0, disc)};
        for (const Point2D& p : place_vehicles(chords, 200, rng)) {
            CHECK(std::abs(p.x) < 1e-12);
        }
    }
}

TEST_CASE("samplers are deterministic per seed") {
    const StudyDisc disc{1.5};
    RandomStream a(123);
    RandomStream b(123);
    const auto pa = sample_ppp_disc(3.0, disc, a);
    const auto pb = sample_ppp_disc(3.0, disc, b);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) {
        CHECK(pa[i].x == pb[i].x);
        CHECK(pa[i].y == pb[i].y);
    }
    const auto ca = sample_plp_disc({2.0}, disc, a);
    const auto cb = sample_plp_disc({2.0}, disc, b);
    REQUIRE(ca.size() == cb.size());
    for (std::size_t i = 0; i < ca.size(); ++i) {
        CHECK(ca[i].theta == cb[i].theta);
        CHECK(ca[i].rho == cb[i].rho);
    }
}
