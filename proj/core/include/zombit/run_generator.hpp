#pragma once

#include <algorithm>
#include <cstdint>

#include "zombit/bit_vector.hpp"

namespace zombit {

/// splitmix64 stepper; fixed constants keep generated datasets reproducible.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// uniform in [1, bound]
    uint64_t next_in(uint64_t bound) { return next() % bound + 1; }

    /// uniform in (0, 1]
    double next_unit() {
        return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    }

private:
    uint64_t state_;
};

enum class RunDistribution {
    kEqual,    // run1 mean ~ run0 mean
    kNotEqual, // run1 mean ~ run0 mean / 8
};

struct GeneratorConfig {
    uint64_t n = 0;
    double run0_mean = 1.0;
    RunDistribution distribution = RunDistribution::kEqual;
    uint64_t seed = 0;

    double run1_mean() const {
        return distribution == RunDistribution::kEqual ? run0_mean
                                                       : std::max(run0_mean / 8.0, 1.0);
    }
};

struct GeneratedBits {
    BitBuffer bits;
    RunStats stats; // realized run profile of the output
};

/// Alternating 0-runs and 1-runs with geometric lengths (minimum 1) of the
/// configured means, truncated at n. The first run's type is one seeded coin
/// flip. Deterministic: identical configs give bit-identical outputs.
GeneratedBits generate(const GeneratorConfig& cfg);

} // namespace zombit
