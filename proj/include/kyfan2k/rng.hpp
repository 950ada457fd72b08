#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace kyfan2k {

/// Seeded draws on top of std::mt19937_64. The engine is fully specified by
/// the C++ standard and the transforms below are pinned here instead of using
/// std::*_distribution (whose algorithms are implementation-defined), so a
/// (seed, config) pair reproduces the same stream everywhere.
class Rng {
public:
    // Recorded in instance metadata; bump when any transform changes.
    static constexpr std::string_view generator_id = "mt19937_64/u53-boxmuller/v1";

    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform on [0,1) with 53 random bits.
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Unbiased integer in [0, n), n > 0.
    std::uint64_t below(std::uint64_t n);

    /// Standard normal via Box-Muller on (0,1] x [0,1).
    double normal();

    /// +1 or -1 with equal probability.
    double rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace kyfan2k
