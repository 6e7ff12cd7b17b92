#pragma once

// Seeded resampling primitives. Every random quantity in the library flows
// from a 64-bit master seed through child_seed/label_seed, so results are
// reproducible regardless of scheduling.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace predep {

inline constexpr std::uint64_t kSeedGolden = 0x9E3779B97F4A7C15ull;

namespace detail {

// splitmix64 output function; bijective on 64-bit values.
inline std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

}  // namespace detail

// Derives a stream seed for task `index` under `seed`. Distinct indices give
// statistically independent streams; the mapping is fixed so parallel code
// produces identical results in any execution order.
inline std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    return detail::mix64(seed + kSeedGolden * (index + 1));
}

// Same idea keyed by a string label (pair names, bench cell ids).
inline std::uint64_t label_seed(std::uint64_t seed, std::string_view label) {
    return detail::mix64(seed ^ detail::fnv1a64(label));
}

// mt19937_64 with a pinned draw discipline. The standard fixes the engine's
// output sequence, and every distribution below is hand-rolled, so streams
// are bit-portable across platforms and library versions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // 53-bit uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in (0, 1); the zero case is nudged to the smallest grid value.
    double uniform_open01() {
        double u = uniform01();
        return u > 0.0 ? u : 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // index in [0, n); modulo bias is negligible for realistic n and the
    // mapping is part of the determinism contract.
    std::size_t uniform_index(std::size_t n) { return static_cast<std::size_t>(next_u64() % n); }

    // Box-Muller; consumes exactly two uniforms per call so the stream
    // position does not depend on caller state.
    double normal() {
        double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
        double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

private:
    std::mt19937_64 eng_;
};

// ceil(n ln n) bootstrap draws, floored at 1 (n = 1 gives ln 1 = 0).
inline std::size_t default_bootstrap_count(std::size_t n) {
    if (n <= 1) return 1;
    double v = std::ceil(static_cast<double>(n) * std::log(static_cast<double>(n)));
    return static_cast<std::size_t>(v);
}

inline std::vector<double> bootstrap_sample(const std::vector<double>& data, std::size_t count,
                                            std::uint64_t seed) {
    if (data.empty()) throw std::invalid_argument("empty sample");
    if (count < 1) throw std::invalid_argument("bootstrap count must be positive");
    Rng rng(seed);
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = data[rng.uniform_index(data.size())];
    return out;
}

inline std::vector<double> difference_sample(const std::vector<double>& y1,
                                             const std::vector<double>& y2) {
    if (y1.size() != y2.size()) throw std::invalid_argument("length mismatch");
    std::vector<double> w(y1.size());
    for (std::size_t i = 0; i < y1.size(); ++i) w[i] = y1[i] - y2[i];
    return w;
}

}  // namespace predep
