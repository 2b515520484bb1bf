#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace anyonsim {

/// Name recorded next to every seeded result so that a run can be reproduced
/// with a different build.
inline constexpr std::string_view kSamplerAlgorithm = "mt19937_64/seed_seq(seed_lo,seed_hi,stream)/chunk65536";

/// Shots are split into fixed-size chunks, each drawn from its own stream.
inline constexpr std::uint64_t kShotsPerStream = 65536;

/// One independent, reproducible stream of uniform doubles in [0, 1).
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t stream);

    /// Top 53 bits of the engine output; identical on every platform.
    double uniform();

private:
    std::mt19937_64 engine_;
};

/// Multinomial sampling of `shots` outcomes from `probabilities` (which must
/// sum to one). Counts are a pure function of (probabilities, shots, seed),
/// independent of how the streams are scheduled.
std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                                         std::uint64_t seed);

}  // namespace anyonsim
