#include "roadcov/rng.hpp"

#include <cmath>

namespace roadcov {

int RandomStream::poisson_knuth(double mean) {
    const double limit = std::exp(-mean);
    int k = 0;
    double product = 1.0;
    do {
        ++k;
        product *= uniform01();
    } while (product > limit);
    return k - 1;
}

int RandomStream::poisson(double mean) {
    int total = 0;
    while (mean > 500.0) {
        total += poisson_knuth(500.0);
        mean -= 500.0;
    }
    return total + poisson_knuth(mean);
}

double RandomStream::normal(double mean, double stddev) {
    // 1 - u keeps the argument of log strictly positive.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double z = r * std::cos(2.0 * M_PI * u2);
    return mean + stddev * z;
}

} // namespace roadcov
