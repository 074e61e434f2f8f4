#pragma once

#include <cstdint>
#include <random>

namespace avoidkit {

// Stateless mixer used to derive independent per-trial seeds from a base seed.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_seed(uint64_t base, uint64_t counter) {
    return splitmix64(base ^ splitmix64(counter + 1));
}

// All randomized operations take an explicit Rng so runs replay from a seed.
class Rng {
public:
    explicit Rng(uint64_t seed) : eng_(splitmix64(seed)) {}

    uint64_t u64() { return eng_(); }

    // Uniform value in [0, n). n must be positive.
    uint64_t below(uint64_t n) {
        std::uniform_int_distribution<uint64_t> d(0, n - 1);
        return d(eng_);
    }

    bool coin() { return (u64() & 1) != 0; }

    double unit() {
        return std::uniform_real_distribution<double>(0.0, 1.0)(eng_);
    }

private:
    std::mt19937_64 eng_;
};

} // namespace avoidkit
