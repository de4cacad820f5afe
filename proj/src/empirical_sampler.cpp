#include "qrng/empirical_sampler.hpp"

#include <cmath>
#include <vector>

#include "qrng/rng.hpp"

namespace qrng {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;

struct Cell {
    uint64_t c00 = 0, c01 = 0, c10 = 0, c11 = 0;
};

// Counts for draw indices [first, last) of the stream (seed-indexed, so any
// partition of the index range yields the same totals).
Cell count_range(const JointDistribution& joint, uint64_t seed, uint64_t first, uint64_t last) {
    const double t0 = joint.w(0, 0);
    const double t1 = t0 + joint.w(0, 1);
    const double t2 = t1 + joint.w(1, 0);
    Cell cell;
    for (uint64_t i = first; i < last; ++i) {
        const double u = uniform_draw(seed, i);
        if (u < t0) {
            ++cell.c00;
        } else if (u < t1) {
            ++cell.c01;
        } else if (u < t2) {
            ++cell.c10;
        } else {
            ++cell.c11;
        }
    }
    return cell;
}

BitRecord record_from(const Cell& cell, uint64_t n, uint64_t seed, unsigned shards) {
    BitRecord record;
    record.counts[0][0] = cell.c00;
    record.counts[0][1] = cell.c01;
    record.counts[1][0] = cell.c10;
    record.counts[1][1] = cell.c11;
    record.total = n;
    record.seed = seed;
    record.shards = shards;
    return record;
}

}  // namespace

BitRecord sample_bits(const JointDistribution& joint, uint64_t n, uint64_t seed) {
    if (n < 1) {
        throw precondition_error("sample count must be at least 1");
    }
    return record_from(count_range(joint, seed, 0, n), n, seed, 1);
}

BitRecord sample_bits_parallel(const JointDistribution& joint, uint64_t n, uint64_t seed,
                               unsigned shards) {
    if (n < 1) {
        throw precondition_error("sample count must be at least 1");
    }
    if (shards < 1) {
        throw precondition_error("shard count must be at least 1");
    }
    std::vector<Cell> cells(shards);
#pragma omp parallel for schedule(static)
    for (long s = 0; s < static_cast<long>(shards); ++s) {
        const uint64_t first = n * static_cast<uint64_t>(s) / shards;
        const uint64_t last = n * (static_cast<uint64_t>(s) + 1) / shards;
        cells[s] = count_range(joint, seed, first, last);
    }
    Cell total;
    for (const Cell& c : cells) {
        total.c00 += c.c00;
        total.c01 += c.c01;
        total.c10 += c.c10;
        total.c11 += c.c11;
    }
    return record_from(total, n, seed, shards);
}

double empirical_mi(const BitRecord& record, bool miller_madow) {
    const double n = static_cast<double>(record.total);
    double freq[2][2];
    double fa[2] = {0.0, 0.0};
    double fb[2] = {0.0, 0.0};
    int nonzero = 0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            freq[a][b] = static_cast<double>(record.counts[a][b]) / n;
            fa[a] += freq[a][b];
            fb[b] += freq[a][b];
            if (record.counts[a][b] > 0) ++nonzero;
        }
    }
    double i = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            if (freq[a][b] <= 0.0) continue;
            i += freq[a][b] * std::log2(freq[a][b] / (fa[a] * fb[b]));
        }
    }
    if (miller_madow) {
        i += static_cast<double>(nonzero - 1) / (2.0 * n * kLn2);
    }
    return i;
}

std::string to_csv(const BitRecord& record) {
    std::string out = "a,b,count\n";
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            out += std::to_string(a) + "," + std::to_string(b) + "," +
                   std::to_string(record.counts[a][b]) + "\n";
        }
    }
    return out;
}

}  // namespace qrng
