#include "zombit/bench.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "zombit/oz_vector.hpp"
#include "zombit/recursive_zombit.hpp"
#include "zombit/run_generator.hpp"
#include "zombit/sparse_array.hpp"
#include "zombit/zombit_vector.hpp"

namespace zombit {

namespace {

using Clock = std::chrono::steady_clock;
using Structure = std::variant<ZombitVector, RecursiveZombit, OzVector, SparseArray, BitVector>;

inline uint64_t fold(uint64_t h, uint64_t v) {
    return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

Structure build_structure(StructureKind kind, const BitBuffer& data, uint64_t rec_depth) {
    switch (kind) {
        case StructureKind::kZombit: return ZombitVector(data);
        case StructureKind::kZombitRec: return RecursiveZombit(data, rec_depth);
        case StructureKind::kOz: return OzVector(data);
        case StructureKind::kSdArray: return SparseArray::from_bits(data);
        case StructureKind::kPlain: return BitVector(data);
    }
    throw std::invalid_argument("bench: unknown structure");
}

template <class F>
uint64_t sweep(const std::vector<uint64_t>& positions, F&& op) {
    uint64_t h = 0;
    for (uint64_t q : positions) h = fold(h, op(q));
    return h;
}

template <class S>
uint64_t run_op(const S& s, OpKind op, const std::vector<uint64_t>& positions) {
    auto op_succ = [&](uint64_t q) {
        if constexpr (std::is_same_v<S, BitVector>) return s.succ1(q);
        else return s.succ(q);
    };
    auto op_pred = [&](uint64_t q) {
        if constexpr (std::is_same_v<S, BitVector>) return s.pred1(q);
        else return s.pred(q);
    };
    auto op_rank = [&](uint64_t q) {
        if constexpr (std::is_same_v<S, SparseArray>) return s.rank(q);
        else return s.rank1(q);
    };
    auto op_access = [&](uint64_t q) -> uint64_t {
        if constexpr (std::is_same_v<S, SparseArray>) return s.contains(q) ? 1 : 0;
        else return s.access(q) ? 1 : 0;
    };
    switch (op) {
        case OpKind::kSucc: return sweep(positions, op_succ);
        case OpKind::kPred: return sweep(positions, op_pred);
        case OpKind::kRank: return sweep(positions, op_rank);
        case OpKind::kAccess: return sweep(positions, op_access);
    }
    return 0;
}

struct SpaceInfo {
    uint64_t payload = 0;
    uint64_t overhead = 0;
};

SpaceInfo space_of(const Structure& s) {
    return std::visit([](const auto& v) { return SpaceInfo{v.payload_bits(), v.overhead_bits()}; }, s);
}

} // namespace

std::optional<OpKind> parse_op(std::string_view name) {
    if (name == "succ") return OpKind::kSucc;
    if (name == "pred") return OpKind::kPred;
    if (name == "rank") return OpKind::kRank;
    if (name == "access") return OpKind::kAccess;
    return std::nullopt;
}

std::string BenchResult::csv_header() {
    return "structure,n,k,run0_mean,run1_mean,payload_bits,overhead_bits,"
           "compression_ratio,build_ms,succ_mean_ns,succ_min_ns,pred_mean_ns,pred_min_ns,"
           "rank_mean_ns,rank_min_ns,access_mean_ns,access_min_ns,queries,seed,checksum";
}

std::string BenchResult::csv_row() const {
    std::ostringstream os;
    auto timing = [&](const OpTiming& t) {
        if (t.measured) os << ',' << t.mean_ns << ',' << t.min_ns;
        else os << ",,";
    };
    os << structure << ',' << n << ',' << k << ',' << run0_mean << ',' << run1_mean << ','
       << payload_bits << ',' << overhead_bits << ',' << compression_ratio << ',' << build_ms;
    timing(succ);
    timing(pred);
    timing(rank);
    timing(access);
    os << ',' << queries << ',' << seed << ',';
    if (queries > 0) os << checksum;
    return os.str();
}

std::vector<BenchResult> run_bench(const BitBuffer& data, const BenchConfig& cfg) {
    if (data.size() == 0) throw std::invalid_argument("bench: dataset is empty");
    if (cfg.structures.empty()) throw std::invalid_argument("bench: no structures selected");
    if (cfg.queries > 0 && cfg.ops.empty()) throw std::invalid_argument("bench: no ops selected");

    RunStats stats = measure_runs(data);

    // positions pre-generated so PRNG cost stays out of the timed loops
    std::vector<uint64_t> positions(cfg.queries);
    SplitMix64 rng(cfg.seed);
    for (auto& p : positions) p = rng.next_in(data.size());

    std::vector<BenchResult> results;
    for (StructureKind kind : cfg.structures) {
        BenchResult res;
        res.structure = std::string(structure_name(kind));
        res.n = data.size();
        res.k = stats.one_runs;
        res.run0_mean = stats.run0_mean;
        res.run1_mean = stats.run1_mean;
        res.queries = cfg.queries;
        res.seed = cfg.seed;

        auto t0 = Clock::now();
        Structure s = build_structure(kind, data, cfg.rec_depth);
        res.build_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();

        SpaceInfo space = space_of(s);
        res.payload_bits = space.payload;
        res.overhead_bits = space.overhead;
        res.compression_ratio =
            static_cast<double>(space.payload + space.overhead) / static_cast<double>(data.size());

        if (cfg.queries > 0) {
            uint64_t checksum = 0;
            for (OpKind op : cfg.ops) {
                OpTiming timing;
                timing.measured = true;
                uint64_t warm = std::visit([&](const auto& v) { return run_op(v, op, positions); }, s);
                checksum = fold(checksum, warm);
                double total = 0.0, best = 0.0;
                unsigned reps = std::max(1u, cfg.repetitions);
                for (unsigned r = 0; r < reps; ++r) {
                    auto q0 = Clock::now();
                    uint64_t h = std::visit([&](const auto& v) { return run_op(v, op, positions); }, s);
                    double ns = std::chrono::duration<double, std::nano>(Clock::now() - q0).count() /
                                static_cast<double>(cfg.queries);
                    if (h != warm) throw std::runtime_error("bench: unstable answers within one structure");
                    total += ns;
                    if (r == 0 || ns < best) best = ns;
                }
                timing.mean_ns = total / reps;
                timing.min_ns = best;
                switch (op) {
                    case OpKind::kSucc: res.succ = timing; break;
                    case OpKind::kPred: res.pred = timing; break;
                    case OpKind::kRank: res.rank = timing; break;
                    case OpKind::kAccess: res.access = timing; break;
                }
            }
            res.checksum = checksum;
        }
        results.push_back(std::move(res));
    }
    return results;
}

bool checksums_consistent(const std::vector<BenchResult>& results) {
    for (size_t i = 1; i < results.size(); ++i)
        if (results[i].checksum != results[0].checksum) return false;
    return true;
}

} // namespace zombit
