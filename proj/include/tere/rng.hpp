#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>

#include "tere/common.hpp"

namespace tere {

// Seeded RNG with distributions implemented on top of the raw mt19937_64
// stream. std::normal_distribution and friends are implementation-defined,
// which would break the fixed-seed reproducibility contract across stdlibs,
// so uniform/normal are generated explicitly here.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : engine_(seed), base_seed_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [lo, hi] inclusive.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw InvalidArgument("uniform_int: empty range");
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }

    // Box-Muller; consumes two uniforms per pair, caches the second.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Derive an independent child stream; used to hand deterministic
    // per-record / per-purpose seeds to parallelizable work.
    Rng child(std::uint64_t tag) const {
        std::uint64_t h = fnv1a(&base_seed_, sizeof(base_seed_));
        h = fnv1a(&tag, sizeof(tag), h);
        return Rng(h);
    }

    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag) {
        std::uint64_t h = fnv1a(&base, sizeof(base));
        h = fnv1a(&tag, sizeof(tag), h);
        return h;
    }

    static std::uint64_t derive_seed(std::uint64_t base, const std::string& tag) {
        std::uint64_t h = fnv1a(&base, sizeof(base));
        h = fnv1a(tag, h);
        return h;
    }

 private:
    std::mt19937_64 engine_;
    std::uint64_t base_seed_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tere
