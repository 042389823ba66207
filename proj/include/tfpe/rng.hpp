#pragma once

#include <cmath>
#include <cstdint>

namespace tfpe {

/// splitmix64; used only to key independent streams.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
};

/// xoshiro256++ with stream derivation keyed by (seed, stream). Every
/// consumer owns its generator, so results cannot depend on scheduling.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) { seed_from(seed); }

    static Xoshiro256pp for_stream(std::uint64_t seed, std::uint64_t stream) {
        SplitMix64 mix{seed};
        const std::uint64_t a = mix.next();
        SplitMix64 mix2{a ^ (stream * 0x9E3779B97F4A7C15ULL + 0x632BE59BD9B4E019ULL)};
        Xoshiro256pp rng(0);
        for (auto& s : rng.s_) s = mix2.next();
        rng.have_normal_ = false;
        return rng;
    }

    std::uint64_t next_u64() {
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

    /// Uniform on (0, 1]; never returns 0, safe under log().
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (second value cached).
    double normal() {
        if (have_normal_) {
            have_normal_ = false;
            return cached_normal_;
        }
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.28318530717958647692 * u2;
        cached_normal_ = r * std::sin(a);
        have_normal_ = true;
        return r * std::cos(a);
    }

    double exponential() { return -std::log(uniform()); }

    /// Poisson count. Knuth's product method up to mean 30; larger means are
    /// split into independent sub-means (exact and underflow-free).
    long poisson(double mean) {
        if (!(mean > 0.0)) return 0;
        if (mean > 30.0) {
            const long parts = static_cast<long>(std::ceil(mean / 30.0));
            long total = 0;
            for (long i = 0; i < parts; ++i) total += poisson(mean / parts);
            return total;
        }
        const double limit = std::exp(-mean);
        long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    void seed_from(std::uint64_t seed) {
        SplitMix64 mix{seed};
        for (auto& s : s_) s = mix.next();
    }
    std::uint64_t s_[4]{};
    bool have_normal_ = false;
    double cached_normal_ = 0.0;
};

}  // namespace tfpe
