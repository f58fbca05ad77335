#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "hx/core.hpp"

namespace hx {

/// SplitMix64 scrambler. Used to spread user seeds (often small integers,
/// or seed ^ slice_index derivations that differ only in low bits) over the
/// full 64-bit state space before seeding the main generator.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seeded generator with a portable gaussian. std::normal_distribution is
/// implementation-defined, so normals come from an explicit Box-Muller
/// transform over the standardized mt19937_64 stream; outputs are identical
/// across platforms and standard library versions.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(splitmix64(seed)), seed_(seed) {}

    uint64_t seed() const { return seed_; }

    uint64_t next_u64() { return gen_(); }

    /// Uniform on [0,1) with 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer on [0, n). Rejection-sampled, unbiased.
    uint64_t uniform_below(uint64_t n) {
        if (n == 0) throw InvalidArgument("uniform_below: n must be positive");
        const uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t v;
        do {
            v = gen_();
        } while (v >= limit);
        return v % n;
    }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        // u1 in (0,1] so the log is finite.
        const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
        const double u2 = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    template <typename T>
    void fill_gaussian(Image2D<T>& img) {
        for (auto& v : img.data) v = static_cast<T>(gaussian());
    }

private:
    std::mt19937_64 gen_;
    uint64_t seed_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace hx
