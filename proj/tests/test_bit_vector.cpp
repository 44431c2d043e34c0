#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "corpus.hpp"
#include "oracle.hpp"
#include "zombit/bit_vector.hpp"

using namespace zombit;
using testutil::Oracle;

namespace {
BitVector bv(std::string_view s) { return BitVector(BitBuffer::from_string(s)); }

// the 16-bit worked example used throughout: blocks of two are
// 11|10|00|01|11|10|00|00
const std::string_view kFig = "1110000111100000";
} // namespace

TEST_CASE("empty bitvector") {
    BitVector v;
    CHECK(v.size() == 0);
    CHECK(v.rank1(0) == 0);
    CHECK(v.succ1(1) == 1); // sentinel n+1
    CHECK(v.pred1(0) == 0);
    CHECK_THROWS_AS((void)v.access(1), std::out_of_range);
    CHECK_THROWS_AS((void)v.select1(1), std::invalid_argument);
    CHECK_THROWS_AS((void)v.rank1(1), std::out_of_range);
}

TEST_CASE("small examples") {
    CHECK(bv("1111").rank1(4) == 4);
    CHECK(bv("0001").access(4) == true);
    CHECK(bv("0001").access(1) == false);
    CHECK(bv("1010").rank1(0) == 0);
    CHECK(bv("1010").rank1(3) == 2);
    CHECK(bv("0100").select1(1) == 2);
    CHECK(bv("1111").select1(3) == 3);
    CHECK(bv("0000").succ1(1) == 5);
    CHECK(bv("0000").pred1(4) == 0);
    CHECK(bv("1000").pred1(1) == 1);
}

TEST_CASE("worked 16-bit example") {
    BitVector v = bv(kFig);
    CHECK(v.size() == 16);
    CHECK(v.rank1(16) == 7);
    CHECK(v.rank1(8) == 4);
    CHECK(v.access(3) == true);
    CHECK(v.select1(4) == 8);
    CHECK(v.succ1(3) == 3);
    CHECK(v.succ1(6) == 8);
    CHECK(v.pred1(6) == 3);
}

TEST_CASE("argument validation") {
    BitVector v = bv("10110");
    CHECK_THROWS_AS((void)v.access(0), std::out_of_range);
    CHECK_THROWS_AS((void)v.access(6), std::out_of_range);
    CHECK_THROWS_AS((void)v.rank1(6), std::out_of_range);
    CHECK_THROWS_AS((void)v.select1(0), std::invalid_argument);
    CHECK_THROWS_AS((void)v.select1(4), std::invalid_argument);
    CHECK_THROWS_AS((void)v.select0(3), std::invalid_argument);
    CHECK_THROWS_AS((void)v.succ1(7), std::out_of_range);
    CHECK_THROWS_AS((void)v.pred1(6), std::out_of_range);
    CHECK(v.succ1(6) == 6); // sentinel allowed as argument
}

TEST_CASE("oracle equivalence on 500 random bitvectors") {
    auto corpus = testutil::make_corpus(500, 4096, 0xb17c0de);
    for (const auto& bits : corpus) {
        Oracle oracle(bits);
        BitVector v((BitBuffer(bits)));
        uint64_t n = bits.size();
        REQUIRE(v.size() == n);
        REQUIRE(v.ones() == oracle.ones());
        for (uint64_t i = 0; i <= n; ++i) {
            REQUIRE(v.rank1(i) == oracle.rank1(i));
            REQUIRE(v.pred1(i) == oracle.pred1(i));
        }
        for (uint64_t i = 1; i <= n + 1; ++i) REQUIRE(v.succ1(i) == oracle.succ1(i));
        for (uint64_t i = 1; i <= n; ++i) REQUIRE(v.access(i) == oracle.access(i));
        for (uint64_t j = 1; j <= v.ones(); ++j) REQUIRE(v.select1(j) == oracle.select1(j));
        for (uint64_t j = 1; j <= v.zeros(); j += 7) REQUIRE(v.select0(j) == oracle.select0(j));
    }
}

TEST_CASE("rank/select/succ identities") {
    auto corpus = testutil::make_corpus(50, 2048, 42);
    for (const auto& bits : corpus) {
        BitVector v((BitBuffer(bits)));
        uint64_t n = v.size();
        for (uint64_t i = 0; i <= n; ++i) CHECK(v.rank0(i) + v.rank1(i) == i);
        for (uint64_t j = 1; j <= v.ones(); ++j) {
            CHECK(v.rank1(v.select1(j)) == j);
            CHECK(v.access(v.select1(j)) == true);
        }
        for (uint64_t i = 1; i <= n; ++i) {
            uint64_t s = v.succ1(i);
            CHECK(s >= i);
            if (s <= n) {
                CHECK(v.access(s) == true);
                CHECK(v.rank1(s - 1) == v.rank1(i - 1));
                // succ via the rank+select identity
                CHECK(s == v.select1(v.rank1(i - 1) + 1));
            }
        }
    }
}

TEST_CASE("directory overhead stays under n/4 for n >= 2^16") {
    for (uint64_t n : {uint64_t{1} << 16, (uint64_t{1} << 17) + 13, uint64_t{1} << 20}) {
        SplitMix64 rng(n);
        BitVector v(testutil::random_dense(rng, n, 50));
        CHECK(v.overhead_bits() <= n / 4 + 256);
    }
}

TEST_CASE("serialization round-trip, stable bytes") {
    SplitMix64 rng(7);
    BitBuffer bits = testutil::random_clustered(rng, 5000, 16.0);
    BitVector v((BitBuffer(bits)));

    std::ostringstream out1, out2;
    v.save(out1);
    v.save(out2);
    CHECK(out1.str() == out2.str());

    std::istringstream in(out1.str());
    BitVector w = BitVector::load(in);
    CHECK(w == v);
    for (uint64_t i = 1; i <= v.size(); ++i) {
        CHECK(w.succ1(i) == v.succ1(i));
        CHECK(w.rank1(i) == v.rank1(i));
    }
}

TEST_CASE("buffer append helpers") {
    BitBuffer a = BitBuffer::from_string("110010111");
    BitBuffer b;
    b.append_range(a, 3, 7); // 00101
    CHECK(b.size() == 5);
    CHECK(b == BitBuffer::from_string("00101"));
    b.append_run(true, 70);
    CHECK(b.size() == 75);
    CHECK(b.get(75));
    CHECK(measure_runs(b).one_runs == 2);

    RunStats st = measure_runs(BitBuffer::from_string("1110000111100000"));
    CHECK(st.one_runs == 2);
    CHECK(st.zero_runs == 2);
    CHECK(st.ones == 7);
}
