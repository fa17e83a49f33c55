// Deterministic random primitives. std::uniform_*_distribution is
// implementation-defined, so everything here draws through fixed bit
// manipulation only; results are identical on every platform.
#pragma once

#include <cstdint>
#include <vector>

namespace cadsel {

// splitmix64 step; also used as the seed-combining hash.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Pure function of (master, a, b); used to give every (hyperparameter, fold)
// training job its own reproducible seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(splitmix64(master) ^ (a + 1)) ^ (b + 1));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0xD1B54A32D192ED03ULL)) {}

    std::uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    // Uniform in [0, 1).
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound); bound > 0. Modulo bias is irrelevant at the
    // bounds used here (all far below 2^32).
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    // Fisher-Yates; deterministic for a seed.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace cadsel
