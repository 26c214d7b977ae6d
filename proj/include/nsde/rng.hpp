#pragma once

#include <array>
#include <cstdint>

namespace nsde {

/// Deterministic 64-bit-seeded generator used for all latent randomness.
///
/// Algorithm (fixed, so identical seeds reproduce identical streams on any
/// platform with IEEE-754 doubles):
///   * state initialization: four rounds of splitmix64 applied to the seed,
///   * uniform stream: xoshiro256++,
///   * doubles: 53-bit mantissa scaling of the top bits,
///   * Gaussians: Box-Muller (trigonometric form), second value cached.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    /// Uniform draw in [0, 1) with 53 random mantissa bits.
    double uniform01();

    /// Standard normal draw.
    double gaussian();

private:
    std::array<std::uint64_t, 4> state_;
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

/// One step of splitmix64 on an explicit state word.
std::uint64_t splitmix64(std::uint64_t& state);

/// Stateless seed derivation for disjoint per-path / per-observation streams:
/// mixes (base, index) through splitmix64 so that distinct indices give
/// decorrelated seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

} // namespace nsde
