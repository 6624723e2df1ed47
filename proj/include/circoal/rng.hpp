#ifndef CIRCOAL_RNG_HPP
#define CIRCOAL_RNG_HPP

#include <cmath>
#include <cstdint>

namespace circoal {

// SplitMix64 (Steele/Lea/Flood). Used only for seeding and stream
// derivation, never for the simulation draws themselves.
struct SplitMix64 {
    std::uint64_t state = 0;

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

// Derives an independent substream seed from (master, salt). Replicate r of
// an experiment uses derive_stream(master_seed, r); nested phases salt again.
// The derivation depends only on the two integers, so replicates can run in
// any order on any number of workers and still see identical randomness.
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t salt) {
    SplitMix64 sm{master};
    std::uint64_t h = sm.next();
    sm.state = h ^ (salt + 0x9E3779B97F4A7C15ULL);
    sm.next();
    return sm.next();
}

// xoshiro256++ 1.0 (Blackman/Vigna), seeded through SplitMix64.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm{seed};
        for (auto& w : s_) w = sm.next();
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

// Per-replicate random stream: uniforms in [0,1) and standard normals.
// Normals use the Marsaglia polar method with the spare value cached, so a
// stream's output sequence is fully determined by (master_seed, stream_id).
class Rng {
public:
    Rng(std::uint64_t master_seed, std::uint64_t stream_id)
        : eng_(derive_stream(master_seed, stream_id)) {}

    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_.next(); }

    // Uniform on [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(eng_.next() >> 11) * 0x1.0p-53;
    }

    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double v1, v2, s;
        do {
            v1 = 2.0 * uniform() - 1.0;
            v2 = 2.0 * uniform() - 1.0;
            s = v1 * v1 + v2 * v2;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v2 * f;
        has_spare_ = true;
        return v1 * f;
    }

    double normal(double stddev) { return stddev * normal(); }

private:
    Xoshiro256pp eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace circoal

#endif
