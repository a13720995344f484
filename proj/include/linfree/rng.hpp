#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace linfree {

// SplitMix64. Chosen over <random> distributions because its output is
// identical across standard libraries, which keeps seeds portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound), rejection sampled
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t r;
        do {
            r = next();
        } while (r >= limit);
        return r % bound;
    }

    // uniform in [lo, hi]
    long between(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::uint64_t state_;
};

// Seed of the index-th job derived from a base seed: one SplitMix64 step
// from base + index.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 g(base + index * 0x9E3779B97F4A7C15ULL);
    return g.next();
}

// Rejection-sampling budget, overridable through LINFREE_RETRY_BUDGET.
inline long retry_budget(long fallback) {
    if (const char* env = std::getenv("LINFREE_RETRY_BUDGET")) {
        try {
            long v = std::stol(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return fallback;
}

}  // namespace linfree
