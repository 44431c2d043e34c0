// Acceptance suite: runs every release criterion end to end and prints one
// [PASS]/[FAIL] line per criterion. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "zombit/bench.hpp"
#include "zombit/intersect.hpp"
#include "zombit/oz_vector.hpp"
#include "zombit/recursive_zombit.hpp"
#include "zombit/run_generator.hpp"
#include "zombit/sparse_array.hpp"
#include "zombit/zombit_vector.hpp"

using namespace zombit;
using testutil::Oracle;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

class Criterion {
public:
    Criterion(int id, std::string label, double budget_s)
        : id_(id), label_(std::move(label)), budget_s_(budget_s), start_(Clock::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok && first_failure_.empty()) first_failure_ = what;
        pass_ = pass_ && ok;
    }

    void note(const std::string& text) { notes_ = notes_.empty() ? text : notes_ + "; " + text; }

    void finish() {
        double elapsed = std::chrono::duration<double>(Clock::now() - start_).count();
        if (elapsed > budget_s_) {
            pass_ = false;
            if (first_failure_.empty())
                first_failure_ = "time budget exceeded (" + std::to_string(elapsed) + "s)";
        }
        std::ostringstream line;
        line << (pass_ ? "[PASS]" : "[FAIL]") << " C" << id_ << " " << label_;
        line << " (" << std::fixed;
        line.precision(1);
        line << elapsed << "s";
        if (!notes_.empty()) line << "; " << notes_;
        if (!pass_) line << "; first failure: " << first_failure_;
        line << ")";
        std::cout << line.str() << std::endl;
        if (!pass_) ++g_failures;
    }

private:
    int id_;
    std::string label_;
    double budget_s_;
    Clock::time_point start_;
    bool pass_ = true;
    std::string first_failure_;
    std::string notes_;
};

std::string bits_of(const BitVector& v) {
    std::string s;
    for (uint64_t i = 1; i <= v.size(); ++i) s += v.access(i) ? '1' : '0';
    return s;
}

BitBuffer gen_equal(uint64_t n, double run0, uint64_t seed,
                    RunDistribution dist = RunDistribution::kEqual) {
    GeneratorConfig cfg;
    cfg.n = n;
    cfg.run0_mean = run0;
    cfg.distribution = dist;
    cfg.seed = seed;
    return generate(cfg).bits;
}

// --------------------------------------------------------------------------

void criterion1_golden() {
    Criterion c(1, "worked-example goldens at beta=2", 1.0);
    ZombitVector z(BitBuffer::from_string("1110000111100000"), 2);
    c.require(bits_of(z.u()) == "10101011", "U mismatch");
    c.require(bits_of(z.o()) == "11011100", "O mismatch");
    c.require(z.access(5) == false, "access(5)");
    c.require(z.access(7) == false, "access(7)");
    c.require(z.rank1(8) == 4, "rank1(8)");
    c.require(z.succ(3) == 3, "succ(3)");
    c.require(z.succ(6) == 8, "succ(6)");
    c.finish();
}

void criterion2_and_3_oracle_and_bounds() {
    Criterion c2(2, "oracle equivalence over 1000 bitvectors", 120.0);
    Criterion c3(3, "structural bounds t<=2k and payload<=5*sqrt(kn)+2k+4", 130.0);

    auto corpus = testutil::make_corpus(1000, 4096, 0xacce97);
    const uint64_t betas[] = {1, 2, 7, 0}; // 0 means default
    uint64_t checked = 0;

    for (const auto& bits : corpus) {
        Oracle oracle(bits);
        uint64_t n = bits.size();
        uint64_t k = measure_runs(bits).one_runs;

        for (uint64_t beta : betas) {
            ZombitVector z = beta ? ZombitVector(bits, beta) : ZombitVector(bits);
            RecursiveZombit r = beta ? RecursiveZombit(bits, 8, beta) : RecursiveZombit(bits);

            c3.require(z.mixed_blocks() <= 2 * k, "t > 2k");
            if (!beta && k >= 1) {
                double bound = 5.0 * std::sqrt(double(k) * double(n)) + 2.0 * double(k) + 4.0;
                c3.require(double(z.payload_bits()) <= bound, "payload bound");
            }

            for (uint64_t i = 1; i <= n; ++i) {
                bool b = oracle.access(i);
                uint64_t r1 = oracle.rank1(i);
                uint64_t s = oracle.succ1(i);
                uint64_t p = oracle.pred1(i);
                c2.require(z.access(i) == b, "zombit access");
                c2.require(z.rank1(i) == r1, "zombit rank1");
                c2.require(z.rank0(i) == i - r1, "zombit rank0");
                c2.require(z.succ(i) == s, "zombit succ");
                c2.require(z.pred(i) == p, "zombit pred");
                c2.require(r.access(i) == b, "rec access");
                c2.require(r.rank1(i) == r1, "rec rank1");
                c2.require(r.rank0(i) == i - r1, "rec rank0");
                c2.require(r.succ(i) == s, "rec succ");
                c2.require(r.pred(i) == p, "rec pred");
                ++checked;
            }
            c2.require(z.succ(n + 1) == n + 1, "zombit succ sentinel");
            c2.require(z.pred(0) == 0, "zombit pred sentinel");
            c2.require(z.rank1(0) == 0, "zombit rank1(0)");
            c2.require(r.succ(n + 1) == n + 1, "rec succ sentinel");
        }

        OzVector oz(bits);
        SparseArray sa = SparseArray::from_bits(bits);
        for (uint64_t i = 1; i <= n; ++i) {
            bool b = oracle.access(i);
            uint64_t r1 = oracle.rank1(i);
            uint64_t s = oracle.succ1(i);
            uint64_t p = oracle.pred1(i);
            c2.require(oz.access(i) == b, "oz access");
            c2.require(oz.rank1(i) == r1, "oz rank1");
            c2.require(oz.rank0(i) == i - r1, "oz rank0");
            c2.require(oz.succ(i) == s, "oz succ");
            c2.require(oz.pred(i) == p, "oz pred");
            c2.require(sa.contains(i) == b, "sdarray access");
            c2.require(sa.rank(i) == r1, "sdarray rank");
            c2.require(sa.succ(i) == s, "sdarray succ");
            c2.require(sa.pred(i) == p, "sdarray pred");
        }
    }
    c2.note(std::to_string(checked) + " position/beta checks");
    c2.finish();
    c3.finish();
}

void criterion4_compression() {
    Criterion c(4, "compression at n=1e7/1e8, equal distribution", 300.0);
    struct Case {
        double run0;
        double limit; // fraction of n
    };
    const Case cases[] = {{1e2, 0.35}, {1e4, 0.04}, {1e5, 0.015}};
    std::string ratios;
    for (uint64_t n : {uint64_t{10'000'000}, uint64_t{100'000'000}}) {
        for (const Case& cs : cases) {
            BitBuffer bits = gen_equal(n, cs.run0, 0xc0 + uint64_t(cs.run0));
            ZombitVector z(bits);
            double ratio = double(z.size_in_bits()) / double(n);
            std::ostringstream tag;
            tag << "n=1e" << (n == 10'000'000 ? 7 : 8) << ",run0=1e" << int(std::log10(cs.run0))
                << ":" << std::setprecision(3) << ratio;
            ratios += (ratios.empty() ? "" : " ") + tag.str();
            c.require(ratio <= cs.limit, tag.str() + " exceeds " + std::to_string(cs.limit));
        }
    }
    c.note(ratios);
    c.finish();
}

void criterion5_recursive_space() {
    Criterion c(5, "recursive variant never larger, usually <=95%", 300.0);
    int smaller95 = 0, total = 0;
    for (uint64_t n : {uint64_t{1'000'000}, uint64_t{10'000'000}}) {
        for (double run0 : {1e3, 1e4}) {
            for (RunDistribution dist : {RunDistribution::kEqual, RunDistribution::kNotEqual}) {
                BitBuffer bits = gen_equal(n, run0, 0x5ec + total, dist);
                ZombitVector flat(bits);
                RecursiveZombit rec(bits);
                c.require(rec.payload_bits() <= flat.payload_bits(), "rec payload above flat payload");
                double ratio = double(rec.payload_bits()) / double(flat.payload_bits());
                if (ratio <= 0.95) ++smaller95;
                ++total;
            }
        }
    }
    c.note("soft: " + std::to_string(smaller95) + "/" + std::to_string(total) +
           " configs at <=95% (informative)");
    c.finish();
}

void criterion6_latency() {
    Criterion c(6, "succ latency flat across sizes; oz at least 2x slower", 900.0);
    double zombit_ns_min = 0.0, zombit_ns_max = 0.0, zombit_1e8 = 0.0;
    std::string detail;
    uint64_t size_index = 0;
    BitBuffer big; // keep the 1e8 dataset for the oz comparison
    for (uint64_t n : {uint64_t{1'000'000}, uint64_t{10'000'000}, uint64_t{100'000'000}}) {
        BitBuffer bits = gen_equal(n, 1e3, 0x6e + size_index);
        BenchConfig cfg;
        cfg.structures = {StructureKind::kZombit};
        cfg.ops = {OpKind::kSucc};
        cfg.queries = 1'000'000;
        cfg.seed = 0xbeef;
        cfg.repetitions = 3;
        auto res = run_bench(bits, cfg);
        double ns = res[0].succ.mean_ns;
        if (size_index == 0) zombit_ns_min = zombit_ns_max = ns;
        zombit_ns_min = std::min(zombit_ns_min, ns);
        zombit_ns_max = std::max(zombit_ns_max, ns);
        if (n == 100'000'000) {
            zombit_1e8 = ns;
            big = std::move(bits);
        }
        detail += "zombit@1e" + std::to_string(6 + size_index) + "=" +
                  std::to_string(ns).substr(0, 5) + "ns ";
        ++size_index;
    }
    double spread = zombit_ns_max / zombit_ns_min;
    c.require(spread < 3.0, "zombit succ spread " + std::to_string(spread) + " >= 3x");

    BenchConfig ozcfg;
    ozcfg.structures = {StructureKind::kOz};
    ozcfg.ops = {OpKind::kSucc};
    ozcfg.queries = 100'000; // oz is orders of magnitude slower; fewer queries suffice
    ozcfg.seed = 0xbeef;
    ozcfg.repetitions = 2;
    auto ozres = run_bench(big, ozcfg);
    double oz_ns = ozres[0].succ.mean_ns;
    c.require(oz_ns >= 2.0 * zombit_1e8, "oz succ not 2x slower at 1e8");
    c.note(detail + "spread=" + std::to_string(spread).substr(0, 4) +
           " oz@1e8=" + std::to_string(oz_ns).substr(0, 6) + "ns");
    c.finish();
}

void criterion7_intersection() {
    Criterion c(7, "intersection equals the merge reference on 500 pairs + 100 triples", 60.0);
    SplitMix64 rng(0x1472);
    const StructureKind backends[] = {StructureKind::kZombit, StructureKind::kZombitRec,
                                      StructureKind::kOz, StructureKind::kSdArray,
                                      StructureKind::kPlain};

    auto random_ids = [&](uint64_t count, uint64_t universe) {
        count = std::min(count, universe / 2 + 1);
        std::set<uint64_t> s;
        while (s.size() < count) s.insert(rng.next_in(universe));
        return std::vector<uint64_t>(s.begin(), s.end());
    };
    auto merge2 = [](const std::vector<uint64_t>& a, const std::vector<uint64_t>& b) {
        std::vector<uint64_t> out;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
        return out;
    };

    for (int rep = 0; rep < 500; ++rep) {
        uint64_t universe = 100 + rng.next() % 6000;
        auto a = random_ids(1 + rng.next() % 500, universe);
        auto b = random_ids(1 + rng.next() % 500, universe);
        auto expected = merge2(a, b);
        for (StructureKind backend : backends) {
            auto got = intersect(PostingList::build(a, backend), PostingList::build(b, backend));
            c.require(got == expected, "pair mismatch on " + std::string(structure_name(backend)));
        }
    }
    for (int rep = 0; rep < 100; ++rep) {
        uint64_t universe = 100 + rng.next() % 4000;
        auto a = random_ids(1 + rng.next() % 400, universe);
        auto b = random_ids(1 + rng.next() % 400, universe);
        auto d = random_ids(1 + rng.next() % 400, universe);
        auto expected = merge2(merge2(a, b), d);
        for (StructureKind backend : backends) {
            std::vector<PostingList> lists;
            lists.push_back(PostingList::build(a, backend));
            lists.push_back(PostingList::build(b, backend));
            lists.push_back(PostingList::build(d, backend));
            c.require(intersect_many(lists) == expected,
                      "triple mismatch on " + std::string(structure_name(backend)));
        }
    }
    c.finish();
}

void criterion8_serialization() {
    Criterion c(8, "serialization round-trips, byte-stable dumps", 120.0);
    GeneratorConfig cfg;
    cfg.n = 50'000;
    cfg.run0_mean = 100;
    cfg.seed = 0x8e81a;

    // dataset bytes are a pure function of the config
    std::ostringstream d1, d2;
    generate(cfg).bits.save(d1);
    generate(cfg).bits.save(d2);
    c.require(d1.str() == d2.str(), "dataset bytes unstable");

    BitBuffer bits = generate(cfg).bits;
    uint64_t n = bits.size();

    auto sweep_equal = [&](const auto& x, const auto& y, auto succ, auto pred, auto rank,
                           auto acc) {
        for (uint64_t i = 1; i <= n; ++i) {
            if (succ(x, i) != succ(y, i)) return false;
            if (pred(x, i) != pred(y, i)) return false;
            if (rank(x, i) != rank(y, i)) return false;
            if (acc(x, i) != acc(y, i)) return false;
        }
        return true;
    };

    { // zombit
        ZombitVector a(bits), b(bits);
        std::ostringstream s1, s2;
        a.save(s1);
        b.save(s2);
        c.require(s1.str() == s2.str(), "zombit bytes unstable");
        std::istringstream in(s1.str());
        ZombitVector back = ZombitVector::load(in);
        c.require(sweep_equal(
                      a, back, [](const auto& v, uint64_t i) { return v.succ(i); },
                      [](const auto& v, uint64_t i) { return v.pred(i); },
                      [](const auto& v, uint64_t i) { return v.rank1(i); },
                      [](const auto& v, uint64_t i) { return v.access(i); }),
                  "zombit round-trip sweep");
    }
    { // zombit-rec
        RecursiveZombit a(bits), b(bits);
        std::ostringstream s1, s2;
        a.save(s1);
        b.save(s2);
        c.require(s1.str() == s2.str(), "zombit-rec bytes unstable");
        std::istringstream in(s1.str());
        RecursiveZombit back = RecursiveZombit::load(in);
        c.require(sweep_equal(
                      a, back, [](const auto& v, uint64_t i) { return v.succ(i); },
                      [](const auto& v, uint64_t i) { return v.pred(i); },
                      [](const auto& v, uint64_t i) { return v.rank1(i); },
                      [](const auto& v, uint64_t i) { return v.access(i); }),
                  "zombit-rec round-trip sweep");
    }
    { // oz
        OzVector a(bits), b(bits);
        std::ostringstream s1, s2;
        a.save(s1);
        b.save(s2);
        c.require(s1.str() == s2.str(), "oz bytes unstable");
        std::istringstream in(s1.str());
        OzVector back = OzVector::load(in);
        c.require(sweep_equal(
                      a, back, [](const auto& v, uint64_t i) { return v.succ(i); },
                      [](const auto& v, uint64_t i) { return v.pred(i); },
                      [](const auto& v, uint64_t i) { return v.rank1(i); },
                      [](const auto& v, uint64_t i) { return v.access(i); }),
                  "oz round-trip sweep");
    }
    { // sdarray
        SparseArray a = SparseArray::from_bits(bits), b = SparseArray::from_bits(bits);
        std::ostringstream s1, s2;
        a.save(s1);
        b.save(s2);
        c.require(s1.str() == s2.str(), "sdarray bytes unstable");
        std::istringstream in(s1.str());
        SparseArray back = SparseArray::load(in);
        c.require(sweep_equal(
                      a, back, [](const auto& v, uint64_t i) { return v.succ(i); },
                      [](const auto& v, uint64_t i) { return v.pred(i); },
                      [](const auto& v, uint64_t i) { return v.rank(i); },
                      [](const auto& v, uint64_t i) { return v.contains(i); }),
                  "sdarray round-trip sweep");
    }
    { // plain
        BitVector a{BitBuffer(bits)}, b{BitBuffer(bits)};
        std::ostringstream s1, s2;
        a.save(s1);
        b.save(s2);
        c.require(s1.str() == s2.str(), "plain bytes unstable");
        std::istringstream in(s1.str());
        BitVector back = BitVector::load(in);
        c.require(sweep_equal(
                      a, back, [](const auto& v, uint64_t i) { return v.succ1(i); },
                      [](const auto& v, uint64_t i) { return v.pred1(i); },
                      [](const auto& v, uint64_t i) { return v.rank1(i); },
                      [](const auto& v, uint64_t i) { return v.access(i); }),
                  "plain round-trip sweep");
    }
    c.finish();
}

} // namespace

int main() {
    std::cout << "acceptance suite" << std::endl;
    criterion1_golden();
    criterion2_and_3_oracle_and_bounds();
    criterion4_compression();
    criterion5_recursive_space();
    criterion6_latency();
    criterion7_intersection();
    criterion8_serialization();
    if (g_failures == 0) {
        std::cout << "all criteria passed" << std::endl;
        return 0;
    }
    std::cout << g_failures << " criteria failed" << std::endl;
    return 1;
}
