#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "srk/quaternion.hpp"

namespace srk {

// mt19937_64 plus hand-rolled conversions. The engine's stream is pinned by
// the standard and the conversions avoid std::*_distribution, whose output is
// implementation defined; identical seeds give identical samples everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // [0, 1)
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double log_uniform(double lo, double hi) {
        return lo * std::exp(uniform() * std::log(hi / lo));
    }

    double gaussian() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
    }

    Quaternion gaussian4() { return {gaussian(), gaussian(), gaussian(), gaussian()}; }

    Quaternion unit_sphere4() {
        for (;;) {
            Quaternion g = gaussian4();
            double m = abs(g);
            if (m > 1e-6) return g / m;
        }
    }

    // Random unit imaginary quaternion.
    Quaternion unit_imaginary() {
        for (;;) {
            Quaternion g{0.0, gaussian(), gaussian(), gaussian()};
            double m = abs(g);
            if (m > 1e-6) return g / m;
        }
    }

    // Uniform in the solid ball |q| <= radius.
    Quaternion ball4(double radius) {
        double r = radius * std::pow(uniform(), 0.25);
        return r * unit_sphere4();
    }

    // Components uniform in [-s, s].
    Quaternion box4(double s) {
        return {uniform(-s, s), uniform(-s, s), uniform(-s, s), uniform(-s, s)};
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace srk
