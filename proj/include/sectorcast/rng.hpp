#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace sectorcast {

// Deterministic random source. std::mt19937_64 output is fully specified by
// the standard; the distributions below are hand-rolled because the standard
// library ones are implementation-defined and would break cross-platform
// reproducibility of seeded runs.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be positive.
    std::size_t below(std::size_t n) {
        // Rejection sampling keeps the draw unbiased.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return static_cast<std::size_t>(x % n);
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::swap(v[i - 1], v[below(i)]);
        }
    }

private:
    std::mt19937_64 eng_;
};

// Stable per-ticker seed derivation: FNV-1a over the tag bytes, folded into
// the master seed through a splitmix64 finalizer. Adding or removing tickers
// never perturbs the seeds of the others.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ull;  // FNV offset basis
    for (unsigned char c : tag) {
        h ^= c;
        h *= 1099511628211ull;  // FNV prime
    }
    std::uint64_t z = master ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace sectorcast
