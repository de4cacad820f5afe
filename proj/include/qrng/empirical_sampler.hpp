#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "qrng/measurement.hpp"

namespace qrng {

// Outcome counts from Monte-Carlo sampling of a joint distribution.  The
// counter-based generator makes draw i a pure function of (seed, i), so the
// sharded variant reproduces the single-threaded counts bit for bit.
struct BitRecord {
    std::array<std::array<uint64_t, 2>, 2> counts{};
    uint64_t total = 0;
    uint64_t seed = 0;
    std::string rng_algorithm = "splitmix64_counter";
    unsigned shards = 1;
};

// Canonical single-threaded sampler.
BitRecord sample_bits(const JointDistribution& joint, uint64_t n, uint64_t seed);

// Same stream partitioned into contiguous index ranges, one OpenMP task each.
BitRecord sample_bits_parallel(const JointDistribution& joint, uint64_t n, uint64_t seed,
                               unsigned shards);

// Plug-in mutual information of the empirical frequencies; the optional
// Miller-Madow term adds (nonzero cells - 1) / (2 n ln 2).
double empirical_mi(const BitRecord& record, bool miller_madow = false);

// CSV export with header "a,b,count".
std::string to_csv(const BitRecord& record);

}  // namespace qrng
