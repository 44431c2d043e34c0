#include "zombit/zombit_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "zombit/io.hpp"

namespace zombit {

using bits::low_mask;

namespace {

constexpr uint64_t kMagic = 0x315443564254424DULL; // "MBTBVCT1"
constexpr uint64_t kVersion = 1;

// any 1-bit in the 0-based range [p, p + len)?
bool range_has_one(const std::vector<uint64_t>& words, uint64_t p, uint64_t len) {
    while (len > 0) {
        uint64_t w = p >> 6, off = p & 63;
        uint64_t take = std::min<uint64_t>(len, 64 - off);
        if ((words[w] >> off) & low_mask(take)) return true;
        p += take;
        len -= take;
    }
    return false;
}

// any 0-bit in the 0-based range [p, p + len)?
bool range_has_zero(const std::vector<uint64_t>& words, uint64_t p, uint64_t len) {
    while (len > 0) {
        uint64_t w = p >> 6, off = p & 63;
        uint64_t take = std::min<uint64_t>(len, 64 - off);
        if ((~words[w] >> off) & low_mask(take)) return true;
        p += take;
        len -= take;
    }
    return false;
}

} // namespace

namespace detail {

uint64_t default_beta(uint64_t n, uint64_t k) {
    if (n == 0) return 1;
    uint64_t kk = std::max<uint64_t>(k, 1);
    // smallest beta with beta^2 * kk >= n, i.e. ceil(sqrt(n / kk));
    // beta^2 * kk stays near n, far below the uint64_t range
    uint64_t b = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(n) / static_cast<double>(kk))));
    if (b == 0) b = 1;
    while (b > 1 && (b - 1) * (b - 1) * kk >= n) --b;
    while (b * b * kk < n) ++b;
    return b;
}

Decomposition decompose(const BitBuffer& bits, std::optional<uint64_t> beta_override) {
    if (beta_override && *beta_override == 0)
        throw std::invalid_argument("zombit: block size must be positive");

    Decomposition d;
    d.n = bits.size();
    d.k = measure_runs(bits).one_runs;
    d.beta = beta_override ? *beta_override : default_beta(d.n, d.k);
    d.nblocks = (d.n + d.beta - 1) / d.beta;

    const auto& words = bits.words();
    for (uint64_t j = 1; j <= d.nblocks; ++j) {
        uint64_t lo = (j - 1) * d.beta + 1;
        uint64_t hi = std::min(j * d.beta, d.n);
        uint64_t len = hi - lo + 1;
        // the final partial block is classified on its real positions only
        bool has_one = range_has_one(words, lo - 1, len);
        bool has_zero = range_has_zero(words, lo - 1, len);
        bool mixed = has_one && has_zero;
        d.u_bits.push_back(!mixed);
        d.o_bits.push_back(has_one);
        if (mixed) {
            ++d.t;
            d.m_bits.append_range(bits, lo, hi);
            if (hi - lo + 1 < d.beta) d.m_bits.append_run(false, d.beta - len);
        }
    }
    return d;
}

} // namespace detail

ZombitVector::ZombitVector(const BitBuffer& bits, std::optional<uint64_t> beta_override) {
    auto d = detail::decompose(bits, beta_override);
    n_ = d.n;
    k_ = d.k;
    beta_ = d.beta;
    nblocks_ = d.nblocks;
    t_ = d.t;
    u_ = BitVector(std::move(d.u_bits));
    o_ = BitVector(std::move(d.o_bits));
    m_ = BitVector(std::move(d.m_bits));
}

bool ZombitVector::access(uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("ZombitVector::access: position out of range");
    uint64_t j = block_of(i);
    if (u_.access(j)) return o_.access(j);
    uint64_t q = u_.rank0(j);
    return m_.access(beg(q) + delta(i));
}

uint64_t ZombitVector::rank1(uint64_t i) const {
    if (i > n_) throw std::out_of_range("ZombitVector::rank1: position out of range");
    if (i == 0) return 0;
    uint64_t j = block_of(i);
    uint64_t p1 = u_.rank1(j - 1);          // uniform blocks before X_j
    uint64_t q1 = (j - 1) - p1;             // mixed blocks before X_j
    uint64_t b1 = p1 - o_.rank0(j - 1);     // full-of-ones blocks before X_j
    uint64_t base = b1 * beta_;
    if (u_.access(j)) {
        uint64_t before = m_.rank1(q1 * beta_); // end of mixed block q1; 0 when q1 = 0
        if (o_.access(j)) return base + before + delta(i) + 1;
        return base + before;
    }
    return base + m_.rank1(beg(q1 + 1) + delta(i));
}

uint64_t ZombitVector::succ(uint64_t i) const {
    if (i < 1 || i > n_ + 1) throw std::out_of_range("ZombitVector::succ: position out of range");
    if (i > n_) return n_ + 1;
    uint64_t j = block_of(i);
    uint64_t q = u_.rank0(j);
    bool have_s = false;
    uint64_t s = 0;
    if (u_.access(j)) {
        if (o_.access(j)) return i;
    } else {
        s = m_.succ1(beg(q) + delta(i));
        if (s <= end(q)) {
            uint64_t r = beg(j) + delta(s);
            return r > n_ ? n_ + 1 : r;
        }
        have_s = true; // s is already succ(M, beg(q+1))
    }
    // jump to the next block containing a 1
    uint64_t jn = o_.succ1(j + 1);
    if (jn > nblocks_) return n_ + 1;
    if (u_.access(jn)) return beg(jn);
    uint64_t s2 = have_s ? s : m_.succ1(beg(q + 1));
    uint64_t r = beg(jn) + delta(s2);
    return r > n_ ? n_ + 1 : r;
}

uint64_t ZombitVector::pred(uint64_t i) const {
    if (i > n_) throw std::out_of_range("ZombitVector::pred: position out of range");
    if (i == 0 || n_ == 0) return 0;
    uint64_t j = block_of(i);
    uint64_t q = u_.rank0(j);
    bool have_s = false;
    uint64_t s = 0;
    bool j_uniform = u_.access(j);
    if (j_uniform) {
        if (o_.access(j)) return i;
    } else {
        s = m_.pred1(beg(q) + delta(i));
        if (s >= beg(q)) return beg(j) + delta(s);
        have_s = true; // s is already pred(M, end(q-1)), possibly 0
    }
    // jump to the previous block containing a 1
    if (j == 1) return 0;
    uint64_t jp = o_.pred1(j - 1);
    if (jp == 0) return 0;
    if (u_.access(jp)) return end(jp);
    uint64_t qp = j_uniform ? q : q - 1; // mixed index of block jp
    uint64_t s2 = have_s ? s : m_.pred1(end(qp));
    return beg(jp) + delta(s2);
}

uint64_t ZombitVector::overhead_bits() const {
    return u_.overhead_bits() + o_.overhead_bits() + m_.overhead_bits();
}

BitBuffer ZombitVector::decode() const {
    BitBuffer out;
    BitBuffer m_raw = m_.to_buffer();
    uint64_t q = 0;
    for (uint64_t j = 1; j <= nblocks_; ++j) {
        uint64_t lo = beg(j);
        uint64_t hi = std::min(end(j), n_);
        if (u_.access(j)) {
            out.append_run(o_.access(j), hi - lo + 1);
        } else {
            ++q;
            out.append_range(m_raw, (q - 1) * beta_ + 1, (q - 1) * beta_ + (hi - lo + 1));
        }
    }
    return out;
}

void ZombitVector::save(std::ostream& os) const {
    io::write_u64(os, kMagic);
    io::write_u64(os, kVersion);
    io::write_u64(os, n_);
    io::write_u64(os, k_);
    io::write_u64(os, beta_);
    io::write_u64(os, t_);
    u_.save(os);
    o_.save(os);
    m_.save(os);
}

ZombitVector ZombitVector::load(std::istream& is) {
    io::check_magic(is, kMagic, "ZombitVector");
    if (io::read_u64(is) != kVersion) throw std::runtime_error("ZombitVector: unsupported version");
    ZombitVector z;
    z.n_ = io::read_u64(is);
    z.k_ = io::read_u64(is);
    z.beta_ = io::read_u64(is);
    z.t_ = io::read_u64(is);
    z.nblocks_ = z.beta_ ? (z.n_ + z.beta_ - 1) / z.beta_ : 0;
    z.u_ = BitVector::load(is);
    z.o_ = BitVector::load(is);
    z.m_ = BitVector::load(is);
    if (z.u_.size() != z.nblocks_ || z.o_.size() != z.nblocks_ || z.m_.size() != z.t_ * z.beta_)
        throw std::runtime_error("ZombitVector: inconsistent stream");
    return z;
}

} // namespace zombit
