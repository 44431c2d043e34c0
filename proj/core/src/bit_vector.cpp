#include "zombit/bit_vector.hpp"

#include <algorithm>
#include <stdexcept>

#include "zombit/io.hpp"

namespace zombit {

using bits::low_mask;
using bits::popcount;
using bits::select_in_word;

// ---------------------------------------------------------------------------
// BitBuffer

BitBuffer BitBuffer::from_words(std::vector<uint64_t> words, uint64_t n) {
    BitBuffer b;
    b.words_ = std::move(words);
    b.words_.resize((n + 63) / 64, 0);
    b.n_ = n;
    b.mask_tail();
    return b;
}

BitBuffer BitBuffer::from_string(std::string_view s) {
    BitBuffer b(s.size());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '1') b.set(i + 1, true);
        else if (s[i] != '0') throw std::invalid_argument("BitBuffer: expected '0' or '1'");
    }
    return b;
}

void BitBuffer::mask_tail() {
    uint64_t r = n_ & 63;
    if (r != 0 && !words_.empty()) words_.back() &= low_mask(r);
}

void BitBuffer::push_back(bool v) {
    if ((n_ & 63) == 0) words_.push_back(0);
    ++n_;
    if (v) set(n_, true);
}

void BitBuffer::append_bits(uint64_t chunk, unsigned count) {
    if (count == 0) return;
    uint64_t r = n_ & 63;
    if (r == 0) {
        words_.push_back(chunk);
    } else {
        words_.back() |= chunk << r;
        if (r + count > 64) words_.push_back(chunk >> (64 - r));
    }
    n_ += count;
}

void BitBuffer::append_run(bool v, uint64_t len) {
    while (len > 0) {
        unsigned take = static_cast<unsigned>(std::min<uint64_t>(len, 64));
        append_bits(v ? low_mask(take) : 0, take);
        len -= take;
    }
}

void BitBuffer::append_range(const BitBuffer& src, uint64_t lo, uint64_t hi) {
    uint64_t left = hi - lo + 1;
    uint64_t p = lo - 1; // 0-based read cursor
    while (left > 0) {
        unsigned take = static_cast<unsigned>(std::min<uint64_t>(left, 64));
        uint64_t q = p >> 6, r = p & 63;
        uint64_t chunk = src.words_[q] >> r;
        if (r != 0 && q + 1 < src.words_.size()) chunk |= src.words_[q + 1] << (64 - r);
        append_bits(chunk & low_mask(take), take);
        p += take;
        left -= take;
    }
}

void BitBuffer::resize(uint64_t n) {
    words_.resize((n + 63) / 64, 0);
    n_ = n;
    mask_tail();
}

void BitBuffer::save(std::ostream& os) const {
    io::write_u64(os, n_);
    for (uint64_t w : words_) io::write_u64(os, w);
}

BitBuffer BitBuffer::load(std::istream& is) {
    BitBuffer b;
    b.n_ = io::read_u64(is);
    b.words_.resize((b.n_ + 63) / 64);
    for (auto& w : b.words_) w = io::read_u64(is);
    b.mask_tail();
    return b;
}

// ---------------------------------------------------------------------------
// run measurement

RunStats measure_runs(const BitBuffer& bits) {
    RunStats st;
    uint64_t n = bits.size();
    if (n == 0) return st;
    const auto& words = bits.words();
    uint64_t prev1 = 0, prev0 = 0; // last bit of the previous word, as bit 0
    for (size_t w = 0; w < words.size(); ++w) {
        uint64_t valid = std::min<uint64_t>(64, n - (uint64_t(w) << 6));
        uint64_t x = words[w];
        uint64_t z = ~x & low_mask(valid);
        st.ones += static_cast<uint64_t>(popcount(x));
        st.one_runs += static_cast<uint64_t>(popcount(x & ~((x << 1) | prev1)));
        st.zero_runs += static_cast<uint64_t>(popcount(z & ~((z << 1) | prev0)));
        prev1 = (x >> (valid - 1)) & 1;
        prev0 = prev1 ^ 1;
    }
    uint64_t zeros = n - st.ones;
    if (st.one_runs > 0) st.run1_mean = static_cast<double>(st.ones) / static_cast<double>(st.one_runs);
    if (st.zero_runs > 0) st.run0_mean = static_cast<double>(zeros) / static_cast<double>(st.zero_runs);
    return st;
}

// ---------------------------------------------------------------------------
// BitVector

BitVector::BitVector(BitBuffer bits) : n_(bits.size()) {
    words_ = std::move(bits).take_words();
    words_.resize((n_ + 63) / 64);
    build_directories();
}

void BitVector::build_directories() {
    uint64_t nsb = n_ / kSuperblockBits + 1;
    uint64_t nblk = n_ / kBlockBits + 1;
    sb_rank_.assign(nsb, 0);
    blk_rank_.assign(nblk, 0);

    uint64_t total = 0, in_sb = 0;
    for (uint64_t b = 0; b < nblk; ++b) {
        if (b % (kSuperblockBits / kBlockBits) == 0) {
            sb_rank_[b * kBlockBits / kSuperblockBits] = total;
            in_sb = 0;
        }
        blk_rank_[b] = static_cast<uint16_t>(in_sb);
        uint64_t w0 = b * (kBlockBits / 64);
        uint64_t w1 = std::min<uint64_t>(w0 + kBlockBits / 64, words_.size());
        uint64_t c = 0;
        for (uint64_t w = w0; w < w1; ++w) c += static_cast<uint64_t>(popcount(words_[w]));
        total += c;
        in_sb += c;
    }
    ones_ = total;

    succ_dir_.assign(nsb, n_ + 1);
    uint64_t next = n_ + 1;
    for (uint64_t s = nsb; s-- > 0;) {
        uint64_t w0 = s * kWordsPerSuperblock;
        uint64_t w1 = std::min<uint64_t>(w0 + kWordsPerSuperblock, words_.size());
        for (uint64_t w = w0; w < w1; ++w) {
            if (words_[w]) {
                next = (w << 6) + static_cast<uint64_t>(std::countr_zero(words_[w])) + 1;
                break;
            }
        }
        succ_dir_[s] = next;
    }

    pred_dir_.assign(nsb, 0);
    uint64_t prev = 0;
    for (uint64_t s = 0; s < nsb; ++s) {
        uint64_t w0 = s * kWordsPerSuperblock;
        uint64_t w1 = std::min<uint64_t>(w0 + kWordsPerSuperblock, words_.size());
        for (uint64_t w = w1; w-- > w0;) {
            if (words_[w]) {
                prev = (w << 6) + 63 - static_cast<uint64_t>(std::countl_zero(words_[w])) + 1;
                break;
            }
        }
        pred_dir_[s] = prev;
    }
}

bool BitVector::access(uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("BitVector::access: position out of range");
    return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1u;
}

uint64_t BitVector::rank1(uint64_t i) const {
    if (i > n_) throw std::out_of_range("BitVector::rank1: position out of range");
    if (i == 0) return 0;
    uint64_t r = sb_rank_[i / kSuperblockBits] + blk_rank_[i / kBlockBits];
    uint64_t w0 = (i / kBlockBits) * (kBlockBits / 64);
    uint64_t w = i >> 6;
    for (uint64_t k = w0; k < w; ++k) r += static_cast<uint64_t>(popcount(words_[k]));
    uint64_t rem = i & 63;
    if (rem) r += static_cast<uint64_t>(popcount(words_[w] & low_mask(rem)));
    return r;
}

uint64_t BitVector::select1(uint64_t j) const {
    if (j < 1 || j > ones_) throw std::invalid_argument("BitVector::select1: rank out of range");
    // superblock: largest s with sb_rank_[s] < j
    uint64_t lo = 0, hi = sb_rank_.size() - 1;
    while (lo < hi) {
        uint64_t mid = (lo + hi + 1) / 2;
        if (sb_rank_[mid] < j) lo = mid;
        else hi = mid - 1;
    }
    uint64_t s = lo;
    uint64_t b = s * (kSuperblockBits / kBlockBits);
    uint64_t blast = std::min<uint64_t>(b + kSuperblockBits / kBlockBits, blk_rank_.size());
    while (b + 1 < blast && sb_rank_[s] + blk_rank_[b + 1] < j) ++b;
    uint64_t target = j - sb_rank_[s] - blk_rank_[b];
    for (uint64_t w = b * (kBlockBits / 64);; ++w) {
        uint64_t c = static_cast<uint64_t>(popcount(words_[w]));
        if (target <= c)
            return (w << 6) + select_in_word(words_[w], static_cast<unsigned>(target)) + 1;
        target -= c;
    }
}

uint64_t BitVector::select0(uint64_t j) const {
    if (j < 1 || j > zeros()) throw std::invalid_argument("BitVector::select0: rank out of range");
    auto sb_zeros = [&](uint64_t s) { return s * kSuperblockBits - sb_rank_[s]; };
    uint64_t lo = 0, hi = sb_rank_.size() - 1;
    while (lo < hi) {
        uint64_t mid = (lo + hi + 1) / 2;
        if (sb_zeros(mid) < j) lo = mid;
        else hi = mid - 1;
    }
    uint64_t s = lo;
    auto blk_zeros = [&](uint64_t b) {
        return (b * kBlockBits - s * kSuperblockBits) - blk_rank_[b];
    };
    uint64_t b = s * (kSuperblockBits / kBlockBits);
    uint64_t blast = std::min<uint64_t>(b + kSuperblockBits / kBlockBits, blk_rank_.size());
    while (b + 1 < blast && sb_zeros(s) + blk_zeros(b + 1) < j) ++b;
    uint64_t target = j - sb_zeros(s) - blk_zeros(b);
    for (uint64_t w = b * (kBlockBits / 64);; ++w) {
        uint64_t valid = std::min<uint64_t>(64, n_ - (w << 6));
        uint64_t inv = ~words_[w] & low_mask(valid);
        uint64_t c = static_cast<uint64_t>(popcount(inv));
        if (target <= c)
            return (w << 6) + select_in_word(inv, static_cast<unsigned>(target)) + 1;
        target -= c;
    }
}

uint64_t BitVector::succ1(uint64_t i) const {
    if (i < 1 || i > n_ + 1) throw std::out_of_range("BitVector::succ1: position out of range");
    if (i > n_) return n_ + 1;
    uint64_t p = i - 1;
    uint64_t w = p >> 6;
    uint64_t word = words_[w] & ~low_mask(p & 63);
    if (word) return (w << 6) + static_cast<uint64_t>(std::countr_zero(word)) + 1;
    uint64_t s = p / kSuperblockBits;
    uint64_t w1 = std::min<uint64_t>((s + 1) * kWordsPerSuperblock, words_.size());
    for (uint64_t k = w + 1; k < w1; ++k)
        if (words_[k]) return (k << 6) + static_cast<uint64_t>(std::countr_zero(words_[k])) + 1;
    return s + 1 < succ_dir_.size() ? succ_dir_[s + 1] : n_ + 1;
}

uint64_t BitVector::pred1(uint64_t i) const {
    if (i > n_) throw std::out_of_range("BitVector::pred1: position out of range");
    if (i == 0) return 0;
    uint64_t p = i - 1;
    uint64_t w = p >> 6;
    uint64_t word = words_[w] & low_mask((p & 63) + 1);
    if (word) return (w << 6) + 63 - static_cast<uint64_t>(std::countl_zero(word)) + 1;
    uint64_t s = p / kSuperblockBits;
    for (uint64_t k = w; k-- > s * kWordsPerSuperblock;)
        if (words_[k]) return (k << 6) + 63 - static_cast<uint64_t>(std::countl_zero(words_[k])) + 1;
    return s == 0 ? 0 : pred_dir_[s - 1];
}

uint64_t BitVector::overhead_bits() const {
    return 64 * sb_rank_.size() + 16 * blk_rank_.size() +
           64 * (succ_dir_.size() + pred_dir_.size());
}

BitBuffer BitVector::to_buffer() const {
    return BitBuffer::from_words(words_, n_);
}

void BitVector::save(std::ostream& os) const {
    io::write_u64(os, n_);
    for (uint64_t w : words_) io::write_u64(os, w);
}

BitVector BitVector::load(std::istream& is) {
    return BitVector(BitBuffer::load(is));
}

} // namespace zombit
