#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace mirrorflow {

// Seeded random stream for experiment instances. The raw stream is the
// standard-specified mt19937_64 engine; uniforms take the top 53 bits and
// normals come from the Box-Muller transform on consecutive uniforms. None
// of it is implementation-defined, so instances regenerate bit-for-bit from
// (identifier, seed) in any language.
class Rng {
public:
    static constexpr const char* kIdentifier = "mt19937_64+boxmuller-v1";

    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Standard normal via Box-Muller; draws two uniforms per pair.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace mirrorflow
