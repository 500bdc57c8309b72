#ifndef SCLSIM_RNG_HPP
#define SCLSIM_RNG_HPP

#include <array>
#include <cstdint>

namespace sclsim {

// Deterministic random source used by the simulator. xoshiro256++ with
// SplitMix64 seeding; stream splitting derives an independent generator per
// (master seed, stream id) pair so hops and injectors never share draws.
//
// All variate transforms below use only IEEE-754 basic operations and
// comparisons (no libm), so the produced sequences are identical on every
// conforming platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& w : state_) w = splitmix64(x);
    }

    /// Independent child stream: seed' = mix(master) xor mix(stream id).
    static Rng derive(std::uint64_t master, std::uint64_t stream) {
        std::uint64_t a = master, b = stream + 0x9E3779B97F4A7C15ull;
        return Rng(splitmix64(a) ^ splitmix64(b));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return u01() < p; }

    /// Uniform integer in [0, n) via 128-bit multiply-shift (unbiased enough
    /// for simulation; bias < 2^-64).
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Unit-mean exponential by von Neumann's comparison method: repeat
    /// rounds of descending-run uniforms; a round with odd run length k
    /// accepts X = (#failed rounds) + U1. Uses no transcendental functions.
    double exp1() {
        double whole = 0.0;
        for (;;) {
            const double u1 = u01();
            double prev = u1;
            unsigned run = 1;
            for (;;) {
                const double u = u01();
                if (u < prev) { prev = u; ++run; } else break;
            }
            if (run & 1u) return whole + u1;
            whole += 1.0;
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::array<std::uint64_t, 4> state_{};
};

} // namespace sclsim

#endif
