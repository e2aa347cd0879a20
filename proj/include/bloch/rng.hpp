#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "bloch/geom.hpp"

namespace bloch {

// deterministic sampler: mt19937_64 plus a hand-rolled Box-Muller transform so
// sampled values are bit-identical across standard libraries (std distributions
// are implementation-defined)
class sampler {
public:
    explicit sampler(uint64_t seed) : eng_(seed) {}

    double uniform() {
        // 53-bit mantissa in [0, 1)
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    vec3 unit_vector() {
        vec3 x{gaussian(), gaussian(), gaussian()};
        return normalized(x);
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}
