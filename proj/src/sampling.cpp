#include "anyonsim/sampling.hpp"

#include <algorithm>

namespace anyonsim {

namespace {

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream & 0xffffffffu),
                      static_cast<std::uint32_t>(stream >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream) : engine_(seeded_engine(seed, stream)) {}

double StreamRng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::vector<std::uint64_t> sample_counts(std::span<const double> probabilities, std::uint64_t shots,
                                         std::uint64_t seed) {
    std::vector<double> cumulative(probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        acc += probabilities[i];
        cumulative[i] = acc;
    }
    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    if (probabilities.empty()) return counts;

    // Draws at or above the accumulated total fall into the last outcome with
    // nonzero probability, never into a zero-probability tail.
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < probabilities.size(); ++i) {
        if (probabilities[i] > 0.0) last_nonzero = i;
    }

    const std::uint64_t n_streams = (shots + kShotsPerStream - 1) / kShotsPerStream;
    for (std::uint64_t stream = 0; stream < n_streams; ++stream) {
        StreamRng rng(seed, stream);
        const std::uint64_t begin = stream * kShotsPerStream;
        const std::uint64_t end = std::min(shots, begin + kShotsPerStream);
        for (std::uint64_t shot = begin; shot < end; ++shot) {
            const double u = rng.uniform() * acc;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
            if (idx >= probabilities.size() || probabilities[idx] <= 0.0) idx = last_nonzero;
            ++counts[idx];
        }
    }
    return counts;
}

}  // namespace anyonsim
