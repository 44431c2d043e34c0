#include "zombit/oz_vector.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "zombit/io.hpp"

namespace zombit {

using bits::low_mask;

namespace {
constexpr uint64_t kMagic = 0x315443565A4F5A41ULL; // "AZOZVCT1"
constexpr uint64_t kVersion = 1;

// maximal runs in order of appearance: (value, length)
std::vector<std::pair<bool, uint64_t>> extract_runs(const BitBuffer& bits) {
    std::vector<std::pair<bool, uint64_t>> runs;
    uint64_t n = bits.size();
    if (n == 0) return runs;
    const auto& words = bits.words();
    bool cur = bits.get(1);
    uint64_t len = 0;
    for (size_t w = 0; w < words.size(); ++w) {
        uint64_t valid = std::min<uint64_t>(64, n - (uint64_t(w) << 6));
        uint64_t processed = 0;
        while (processed < valid) {
            uint64_t chunk = words[w] >> processed;
            if (cur) chunk = ~chunk;
            chunk &= low_mask(valid - processed);
            if (chunk == 0) {
                len += valid - processed;
                processed = valid;
            } else {
                uint64_t step = static_cast<uint64_t>(std::countr_zero(chunk));
                len += step;
                processed += step;
                runs.emplace_back(cur, len);
                cur = !cur;
                len = 0;
            }
        }
    }
    runs.emplace_back(cur, len);
    return runs;
}

// unary stream marks: one mark per run plus a final sentinel mark
SparseArray marks_for(const std::vector<uint64_t>& lengths) {
    std::vector<uint64_t> marks;
    marks.reserve(lengths.size() + 1);
    uint64_t p = 1;
    marks.push_back(p);
    for (uint64_t len : lengths) {
        p += len + 1;
        marks.push_back(p);
    }
    return SparseArray(marks, p);
}

} // namespace

OzVector::OzVector(const BitBuffer& bits) : n_(bits.size()) {
    std::vector<uint64_t> one_lens, zero_lens;
    for (const auto& [value, len] : extract_runs(bits)) {
        if (value) one_lens.push_back(len);
        else zero_lens.push_back(len);
    }
    first_bit_ = n_ > 0 && bits.get(1);
    k_ = one_lens.size();
    k0_ = zero_lens.size();
    onar_ = marks_for(one_lens);
    znar_ = marks_for(zero_lens);
}

uint64_t OzVector::ones_prefix(uint64_t j) const {
    return onar_.select(j + 1) - (j + 1);
}

uint64_t OzVector::zeros_prefix(uint64_t j) const {
    return znar_.select(j + 1) - (j + 1);
}

uint64_t OzVector::run_start(uint64_t j) const {
    uint64_t zeros = first_bit_ ? zeros_prefix(j - 1) : zeros_prefix(j);
    return ones_prefix(j - 1) + zeros + 1;
}

uint64_t OzVector::run_end(uint64_t j) const {
    uint64_t zeros = first_bit_ ? zeros_prefix(j - 1) : zeros_prefix(j);
    return ones_prefix(j) + zeros;
}

bool OzVector::access(uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("OzVector::access: position out of range");
    if (k_ == 0) return false;
    // largest run with start <= i
    uint64_t a = 1, b = k_, j = 0;
    while (a <= b) {
        uint64_t mid = a + (b - a) / 2;
        if (run_start(mid) <= i) {
            j = mid;
            a = mid + 1;
        } else {
            b = mid - 1;
        }
    }
    return j != 0 && i <= run_end(j);
}

uint64_t OzVector::rank1(uint64_t i) const {
    if (i > n_) throw std::out_of_range("OzVector::rank1: position out of range");
    if (i == 0 || k_ == 0) return 0;
    uint64_t a = 1, b = k_, j = 0;
    while (a <= b) {
        uint64_t mid = a + (b - a) / 2;
        if (run_start(mid) <= i) {
            j = mid;
            a = mid + 1;
        } else {
            b = mid - 1;
        }
    }
    if (j == 0) return 0;
    return ones_prefix(j - 1) + std::min(run_end(j), i) - run_start(j) + 1;
}

uint64_t OzVector::succ(uint64_t i) const {
    if (i < 1 || i > n_ + 1) throw std::out_of_range("OzVector::succ: position out of range");
    if (k_ == 0 || i > n_) return n_ + 1;
    // smallest run with end >= i
    uint64_t a = 1, b = k_, j = 0;
    while (a <= b) {
        uint64_t mid = a + (b - a) / 2;
        if (run_end(mid) >= i) {
            j = mid;
            b = mid - 1;
        } else {
            a = mid + 1;
        }
    }
    if (j == 0) return n_ + 1;
    return std::max(run_start(j), i);
}

uint64_t OzVector::pred(uint64_t i) const {
    if (i > n_) throw std::out_of_range("OzVector::pred: position out of range");
    if (k_ == 0 || i == 0) return 0;
    uint64_t a = 1, b = k_, j = 0;
    while (a <= b) {
        uint64_t mid = a + (b - a) / 2;
        if (run_start(mid) <= i) {
            j = mid;
            a = mid + 1;
        } else {
            b = mid - 1;
        }
    }
    if (j == 0) return 0;
    return std::min(run_end(j), i);
}

BitBuffer OzVector::decode() const {
    BitBuffer out;
    uint64_t next_one = 1, next_zero = 1;
    bool cur = first_bit_;
    while (out.size() < n_) {
        uint64_t len;
        if (cur) {
            len = ones_prefix(next_one) - ones_prefix(next_one - 1);
            ++next_one;
        } else {
            len = zeros_prefix(next_zero) - zeros_prefix(next_zero - 1);
            ++next_zero;
        }
        out.append_run(cur, len);
        cur = !cur;
    }
    return out;
}

void OzVector::save(std::ostream& os) const {
    io::write_u64(os, kMagic);
    io::write_u64(os, kVersion);
    io::write_u64(os, n_);
    io::write_u64(os, k_);
    io::write_u64(os, k0_);
    io::write_u8(os, first_bit_ ? 1 : 0);
    onar_.save(os);
    znar_.save(os);
}

OzVector OzVector::load(std::istream& is) {
    io::check_magic(is, kMagic, "OzVector");
    if (io::read_u64(is) != kVersion) throw std::runtime_error("OzVector: unsupported version");
    OzVector oz;
    oz.n_ = io::read_u64(is);
    oz.k_ = io::read_u64(is);
    oz.k0_ = io::read_u64(is);
    oz.first_bit_ = io::read_u8(is) != 0;
    oz.onar_ = SparseArray::load(is);
    oz.znar_ = SparseArray::load(is);
    if (oz.onar_.count() != oz.k_ + 1 || oz.znar_.count() != oz.k0_ + 1)
        throw std::runtime_error("OzVector: inconsistent stream");
    return oz;
}

} // namespace zombit
