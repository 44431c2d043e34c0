#include "zombit/run_generator.hpp"

#include <cmath>
#include <stdexcept>

namespace zombit {

namespace {

// geometric on {1, 2, ...} with the given mean
uint64_t sample_run_length(SplitMix64& rng, double mean) {
    if (mean <= 1.0) return 1;
    double p = 1.0 / mean;
    double g = std::floor(std::log(rng.next_unit()) / std::log(1.0 - p));
    if (!(g < 1e18)) g = 1e18;
    if (g < 0.0) g = 0.0;
    return 1 + static_cast<uint64_t>(g);
}

} // namespace

GeneratedBits generate(const GeneratorConfig& cfg) {
    if (cfg.n == 0) throw std::invalid_argument("generate: n must be >= 1");
    if (cfg.run0_mean < 1.0) throw std::invalid_argument("generate: run0_mean must be >= 1");

    SplitMix64 rng(cfg.seed);
    bool cur = (rng.next() & 1) != 0;
    double run1 = cfg.run1_mean();

    GeneratedBits out;
    uint64_t pos = 0;
    while (pos < cfg.n) {
        uint64_t len = sample_run_length(rng, cur ? run1 : cfg.run0_mean);
        len = std::min(len, cfg.n - pos);
        out.bits.append_run(cur, len);
        pos += len;
        cur = !cur;
    }
    out.stats = measure_runs(out.bits);
    return out;
}

} // namespace zombit
