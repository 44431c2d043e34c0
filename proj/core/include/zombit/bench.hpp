#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zombit/bit_vector.hpp"
#include "zombit/structure_kind.hpp"

namespace zombit {

enum class OpKind { kSucc, kPred, kRank, kAccess };

constexpr std::string_view op_name(OpKind op) {
    switch (op) {
        case OpKind::kSucc: return "succ";
        case OpKind::kPred: return "pred";
        case OpKind::kRank: return "rank";
        case OpKind::kAccess: return "access";
    }
    return "?";
}

std::optional<OpKind> parse_op(std::string_view name);

struct OpTiming {
    bool measured = false;
    double mean_ns = 0.0; // mean per query over all repetitions
    double min_ns = 0.0;  // fastest repetition
};

/// One CSV row of the harness: space and per-op latency of one structure over
/// one dataset and one pre-generated query workload.
struct BenchResult {
    std::string structure;
    uint64_t n = 0;
    uint64_t k = 0; // realized runs of 1s in the dataset
    double run0_mean = 0.0;
    double run1_mean = 0.0;
    uint64_t payload_bits = 0;
    uint64_t overhead_bits = 0;
    double compression_ratio = 0.0; // (payload + overhead) / n
    double build_ms = 0.0;
    OpTiming succ, pred, rank, access;
    uint64_t queries = 0;
    uint64_t seed = 0;
    uint64_t checksum = 0; // folded query answers; equal across consistent structures

    static std::string csv_header();
    std::string csv_row() const;
};

struct BenchConfig {
    std::vector<StructureKind> structures;
    std::vector<OpKind> ops;
    uint64_t queries = 1'000'000;
    uint64_t seed = 1;
    unsigned repetitions = 3;
    uint64_t rec_depth = 8; // max depth for zombit-rec
};

/// Builds every requested structure over the dataset and measures the
/// requested ops with one identical pre-generated query sequence (uniform
/// positions in [1, n]). Timed loops fold every answer into a checksum so the
/// work cannot be optimized away; a warm-up sweep precedes the measured
/// repetitions.
std::vector<BenchResult> run_bench(const BitBuffer& data, const BenchConfig& cfg);

/// All per-structure checksums equal (they must be, the ops are semantically
/// structure-independent).
bool checksums_consistent(const std::vector<BenchResult>& results);

} // namespace zombit
