#include "zombit/sparse_array.hpp"

#include <bit>
#include <stdexcept>

#include "zombit/io.hpp"

namespace zombit {

using bits::low_mask;

namespace {
constexpr uint64_t kMagic = 0x3159524153445A41ULL; // "AZDSARY1"
constexpr uint64_t kVersion = 1;

void pack_low(std::vector<uint64_t>& words, uint64_t idx, uint64_t width, uint64_t value) {
    if (width == 0) return;
    uint64_t p = idx * width;
    uint64_t w = p >> 6, off = p & 63;
    words[w] |= value << off;
    if (off + width > 64) words[w + 1] |= value >> (64 - off);
}

} // namespace

SparseArray::SparseArray(const std::vector<uint64_t>& positions, uint64_t universe)
    : n_(universe), m_(positions.size()) {
    uint64_t prev = 0;
    for (uint64_t p : positions) {
        if (p <= prev) throw std::invalid_argument("SparseArray: positions must be strictly increasing and >= 1");
        if (p > n_) throw std::invalid_argument("SparseArray: position exceeds universe");
        prev = p;
    }

    r_ = (m_ == 0 || m_ >= n_) ? 0 : static_cast<uint64_t>(std::bit_width(n_ / m_)) - 1;

    low_.assign((m_ * r_ + 63) / 64, 0);
    uint64_t nbuckets = (m_ == 0) ? 0 : ((n_ - 1) >> r_) + 1;
    BitBuffer h(0);
    uint64_t cur = 0;
    for (uint64_t idx = 0; idx < m_; ++idx) {
        uint64_t v = positions[idx] - 1;
        uint64_t bucket = v >> r_;
        while (cur < bucket) {
            h.push_back(false);
            ++cur;
        }
        h.push_back(true);
        pack_low(low_, idx, r_, v & low_mask(r_));
    }
    while (cur < nbuckets) {
        h.push_back(false);
        ++cur;
    }
    high_ = BitVector(std::move(h));
}

SparseArray SparseArray::from_bits(const BitBuffer& bits) {
    std::vector<uint64_t> positions;
    const auto& words = bits.words();
    for (size_t w = 0; w < words.size(); ++w) {
        uint64_t x = words[w];
        while (x) {
            positions.push_back((uint64_t(w) << 6) + static_cast<uint64_t>(std::countr_zero(x)) + 1);
            x &= x - 1;
        }
    }
    return SparseArray(positions, bits.size());
}

uint64_t SparseArray::low_at(uint64_t idx) const {
    if (r_ == 0) return 0;
    uint64_t p = idx * r_;
    uint64_t w = p >> 6, off = p & 63;
    uint64_t v = low_[w] >> off;
    if (off + r_ > 64) v |= low_[w + 1] << (64 - off);
    return v & low_mask(r_);
}

uint64_t SparseArray::elems_before_bucket(uint64_t h) const {
    if (h == 0) return 0;
    return high_.select0(h) - h;
}

uint64_t SparseArray::select(uint64_t j) const {
    if (j < 1 || j > m_) throw std::invalid_argument("SparseArray::select: rank out of range");
    uint64_t p = high_.select1(j);
    uint64_t bucket = p - j;
    return (bucket << r_) + low_at(j - 1) + 1;
}

uint64_t SparseArray::succ(uint64_t x) const {
    if (x < 1 || x > n_ + 1) throw std::out_of_range("SparseArray::succ: position out of range");
    if (m_ == 0 || x > n_) return n_ + 1;
    uint64_t v = x - 1;
    uint64_t bucket = v >> r_;
    uint64_t vl = v & low_mask(r_);
    uint64_t lo = elems_before_bucket(bucket);
    uint64_t hi = elems_before_bucket(bucket + 1);
    // first element of this bucket with low part >= vl
    uint64_t a = lo + 1, b = hi, found = 0;
    while (a <= b) {
        uint64_t mid = a + (b - a) / 2;
        if (low_at(mid - 1) >= vl) {
            found = mid;
            b = mid - 1;
        } else {
            a = mid + 1;
        }
    }
    if (found) return (bucket << r_) + low_at(found - 1) + 1;
    if (hi < m_) return select(hi + 1); // first element of a later bucket
    return n_ + 1;
}

uint64_t SparseArray::rank(uint64_t x) const {
    if (x > n_) throw std::out_of_range("SparseArray::rank: position out of range");
    if (x == 0 || m_ == 0) return 0;
    uint64_t v = x - 1;
    uint64_t bucket = v >> r_;
    uint64_t vl = v & low_mask(r_);
    uint64_t lo = elems_before_bucket(bucket);
    uint64_t hi = elems_before_bucket(bucket + 1);
    // count elements of this bucket with low part <= vl
    uint64_t a = lo + 1, b = hi, last = lo;
    while (a <= b) {
        uint64_t mid = a + (b - a) / 2;
        if (low_at(mid - 1) <= vl) {
            last = mid;
            a = mid + 1;
        } else {
            b = mid - 1;
        }
    }
    return last;
}

uint64_t SparseArray::pred(uint64_t x) const {
    if (x > n_) throw std::out_of_range("SparseArray::pred: position out of range");
    if (x == 0 || m_ == 0) return 0;
    uint64_t r = rank(x);
    return r == 0 ? 0 : select(r);
}

bool SparseArray::contains(uint64_t x) const {
    if (x < 1 || x > n_) throw std::out_of_range("SparseArray::contains: position out of range");
    return succ(x) == x;
}

std::vector<uint64_t> SparseArray::decode() const {
    std::vector<uint64_t> out;
    out.reserve(m_);
    for (uint64_t j = 1; j <= m_; ++j) out.push_back(select(j));
    return out;
}

void SparseArray::save(std::ostream& os) const {
    io::write_u64(os, kMagic);
    io::write_u64(os, kVersion);
    io::write_u64(os, n_);
    io::write_u64(os, m_);
    io::write_u64(os, r_);
    high_.save(os);
    for (uint64_t w : low_) io::write_u64(os, w);
}

SparseArray SparseArray::load(std::istream& is) {
    io::check_magic(is, kMagic, "SparseArray");
    if (io::read_u64(is) != kVersion) throw std::runtime_error("SparseArray: unsupported version");
    SparseArray sa;
    sa.n_ = io::read_u64(is);
    sa.m_ = io::read_u64(is);
    sa.r_ = io::read_u64(is);
    sa.high_ = BitVector::load(is);
    sa.low_.resize((sa.m_ * sa.r_ + 63) / 64);
    for (auto& w : sa.low_) w = io::read_u64(is);
    if (sa.high_.ones() != sa.m_) throw std::runtime_error("SparseArray: inconsistent stream");
    return sa;
}

} // namespace zombit
