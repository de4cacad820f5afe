#pragma once

#include <cmath>
#include <cstdint>

namespace qrng {

// Counter-based generator (splitmix64 output function): draw i of a stream is a
// pure function of (seed, i), so a stream can be partitioned across threads and
// still produce the exact bits of a single-threaded pass.
inline uint64_t counter_draw(uint64_t seed, uint64_t index) {
    uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Uniform double in [0, 1) from the top 53 bits of a draw.
inline double to_unit_interval(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

inline double uniform_draw(uint64_t seed, uint64_t index) {
    return to_unit_interval(counter_draw(seed, index));
}

// Sequential convenience wrapper around the counter stream.  Gaussians use
// Box-Muller on two uniform draws so results do not depend on the platform's
// std::normal_distribution implementation.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t start_index = 0)
        : seed_(seed), index_(start_index) {}

    uint64_t next_u64() { return counter_draw(seed_, index_++); }

    double next_uniform() { return to_unit_interval(next_u64()); }

    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        while (u1 <= 0.0) u1 = next_uniform();  // avoid log(0)
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    uint64_t seed() const { return seed_; }

private:
    uint64_t seed_;
    uint64_t index_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace qrng
