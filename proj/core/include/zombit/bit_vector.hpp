#pragma once

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "zombit/broadword.hpp"

namespace zombit {

// Positions are 1-based across the whole library. Successor queries report
// n+1 when no qualifying bit exists, predecessor queries report 0.

/// Mutable raw bit sequence; the build-time currency of every structure.
/// Bits above size() in the last word are kept zero.
class BitBuffer {
public:
    BitBuffer() = default;
    explicit BitBuffer(uint64_t n) : words_((n + 63) / 64, 0), n_(n) {}

    /// Parse "0100..." with position 1 being the first character.
    static BitBuffer from_string(std::string_view s);
    static BitBuffer from_words(std::vector<uint64_t> words, uint64_t n);

    uint64_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool get(uint64_t i) const { // i in [1, n]
        return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
    }
    void set(uint64_t i, bool v) {
        uint64_t mask = uint64_t{1} << ((i - 1) & 63);
        if (v) words_[(i - 1) >> 6] |= mask;
        else words_[(i - 1) >> 6] &= ~mask;
    }

    void push_back(bool v);
    /// Append len copies of bit v.
    void append_run(bool v, uint64_t len);
    /// Append src[lo..hi] (inclusive, 1-based).
    void append_range(const BitBuffer& src, uint64_t lo, uint64_t hi);
    void resize(uint64_t n);

    const std::vector<uint64_t>& words() const { return words_; }
    std::vector<uint64_t> take_words() && {
        n_ = 0;
        return std::move(words_);
    }

    bool operator==(const BitBuffer&) const = default;

    /// Length-prefixed little-endian word dump: n as 64-bit count, then
    /// ceil(n/64) words.
    void save(std::ostream& os) const;
    static BitBuffer load(std::istream& is);

private:
    void append_bits(uint64_t chunk, unsigned count); // chunk pre-masked
    void mask_tail();

    std::vector<uint64_t> words_;
    uint64_t n_ = 0;
};

/// Run profile of a raw bit sequence.
struct RunStats {
    uint64_t one_runs = 0;  // k, the number of maximal runs of 1s
    uint64_t zero_runs = 0;
    uint64_t ones = 0;
    double run1_mean = 0.0; // mean 1-run length, 0 when no runs
    double run0_mean = 0.0;
};

RunStats measure_runs(const BitBuffer& bits);

/// Plain bitvector with rank/select plus successor/predecessor directories.
///
/// rank uses a two-level directory (superblocks of absolute counts, blocks of
/// relative counts). succ/pred keep one pointer per superblock to the
/// next/previous 1-bit, so a query scans at most one superblock of words and
/// then follows a single pointer. Immutable once built.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(BitBuffer bits);

    uint64_t size() const { return n_; }
    uint64_t ones() const { return ones_; }
    uint64_t zeros() const { return n_ - ones_; }

    bool access(uint64_t i) const;      // i in [1, n]
    uint64_t rank1(uint64_t i) const;   // i in [0, n]
    uint64_t rank0(uint64_t i) const { return i - rank1(i); }
    uint64_t select1(uint64_t j) const; // j in [1, ones()]
    uint64_t select0(uint64_t j) const; // j in [1, zeros()]
    uint64_t succ1(uint64_t i) const;   // i in [1, n+1]; n+1 when none
    uint64_t pred1(uint64_t i) const;   // i in [0, n]; 0 when none

    uint64_t payload_bits() const { return n_; }
    uint64_t overhead_bits() const;

    const std::vector<uint64_t>& words() const { return words_; }
    BitBuffer to_buffer() const;

    /// Same wire format as BitBuffer; directories are rebuilt on load.
    void save(std::ostream& os) const;
    static BitVector load(std::istream& is);

    bool operator==(const BitVector& o) const {
        return n_ == o.n_ && words_ == o.words_;
    }

private:
    static constexpr uint64_t kSuperblockBits = 4096;
    static constexpr uint64_t kBlockBits = 512;
    static constexpr uint64_t kWordsPerSuperblock = kSuperblockBits / 64;

    void build_directories();

    std::vector<uint64_t> words_;
    uint64_t n_ = 0;
    uint64_t ones_ = 0;
    std::vector<uint64_t> sb_rank_;  // ones in [1, s * kSuperblockBits]
    std::vector<uint16_t> blk_rank_; // ones from superblock start to block start
    std::vector<uint64_t> succ_dir_; // first 1 at/after superblock start, else n+1
    std::vector<uint64_t> pred_dir_; // last 1 at/before superblock end, else 0
};

} // namespace zombit
