#include "zombit/recursive_zombit.hpp"

#include <algorithm>
#include <stdexcept>

#include "zombit/io.hpp"

namespace zombit {

namespace {
constexpr uint64_t kMagic = 0x31434552544D425AULL; // "ZBMTREC1"
constexpr uint64_t kVersion = 1;
} // namespace

RecursiveZombit::RecursiveZombit(const BitBuffer& bits, uint64_t max_depth,
                                 std::optional<uint64_t> beta_override)
    : level_(0), max_depth_(max_depth) {
    if (max_depth == 0) throw std::invalid_argument("RecursiveZombit: max depth must be >= 1");
    if (max_depth > 255) throw std::invalid_argument("RecursiveZombit: max depth too large");
    init(detail::decompose(bits, beta_override));
}

RecursiveZombit::RecursiveZombit(detail::Decomposition d, uint64_t level, uint64_t max_depth)
    : level_(level), max_depth_(max_depth) {
    init(std::move(d));
}

void RecursiveZombit::init(detail::Decomposition d) {
    n_ = d.n;
    k_ = d.k;
    beta_ = d.beta;
    nblocks_ = d.nblocks;
    t_ = d.t;
    u_ = BitVector(std::move(d.u_bits));
    o_ = BitVector(std::move(d.o_bits));

    BitBuffer m = std::move(d.m_bits);
    if (level_ < max_depth_ && m.size() > 0) {
        auto child = detail::decompose(m, std::nullopt);
        uint64_t child_payload = 2 * child.nblocks + child.t * child.beta;
        if (child.beta >= 2 && child_payload < m.size()) {
            rec_ = std::unique_ptr<RecursiveZombit>(
                new RecursiveZombit(std::move(child), level_ + 1, max_depth_));
            return;
        }
    }
    m_plain_ = BitVector(std::move(m));
}

bool RecursiveZombit::access(uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("RecursiveZombit::access: position out of range");
    uint64_t j = block_of(i);
    if (u_.access(j)) return o_.access(j);
    uint64_t q = u_.rank0(j);
    return m_access(beg(q) + delta(i));
}

uint64_t RecursiveZombit::rank1(uint64_t i) const {
    if (i > n_) throw std::out_of_range("RecursiveZombit::rank1: position out of range");
    if (i == 0) return 0;
    uint64_t j = block_of(i);
    uint64_t p1 = u_.rank1(j - 1);
    uint64_t q1 = (j - 1) - p1;
    uint64_t b1 = p1 - o_.rank0(j - 1);
    uint64_t base = b1 * beta_;
    if (u_.access(j)) {
        uint64_t before = m_rank1(q1 * beta_);
        if (o_.access(j)) return base + before + delta(i) + 1;
        return base + before;
    }
    return base + m_rank1(beg(q1 + 1) + delta(i));
}

uint64_t RecursiveZombit::succ(uint64_t i) const {
    if (i < 1 || i > n_ + 1) throw std::out_of_range("RecursiveZombit::succ: position out of range");
    if (i > n_) return n_ + 1;
    uint64_t j = block_of(i);
    uint64_t q = u_.rank0(j);
    bool have_s = false;
    uint64_t s = 0;
    if (u_.access(j)) {
        if (o_.access(j)) return i;
    } else {
        s = m_succ(beg(q) + delta(i));
        if (s <= end(q)) {
            uint64_t r = beg(j) + delta(s);
            return r > n_ ? n_ + 1 : r;
        }
        have_s = true;
    }
    uint64_t jn = o_.succ1(j + 1);
    if (jn > nblocks_) return n_ + 1;
    if (u_.access(jn)) return beg(jn);
    uint64_t s2 = have_s ? s : m_succ(beg(q + 1));
    uint64_t r = beg(jn) + delta(s2);
    return r > n_ ? n_ + 1 : r;
}

uint64_t RecursiveZombit::pred(uint64_t i) const {
    if (i > n_) throw std::out_of_range("RecursiveZombit::pred: position out of range");
    if (i == 0 || n_ == 0) return 0;
    uint64_t j = block_of(i);
    uint64_t q = u_.rank0(j);
    bool have_s = false;
    uint64_t s = 0;
    bool j_uniform = u_.access(j);
    if (j_uniform) {
        if (o_.access(j)) return i;
    } else {
        s = m_pred(beg(q) + delta(i));
        if (s >= beg(q)) return beg(j) + delta(s);
        have_s = true;
    }
    if (j == 1) return 0;
    uint64_t jp = o_.pred1(j - 1);
    if (jp == 0) return 0;
    if (u_.access(jp)) return end(jp);
    uint64_t qp = j_uniform ? q : q - 1;
    uint64_t s2 = have_s ? s : m_pred(end(qp));
    return beg(jp) + delta(s2);
}

uint64_t RecursiveZombit::payload_bits() const {
    return 2 * nblocks_ + (rec_ ? rec_->payload_bits() : m_plain_.payload_bits());
}

uint64_t RecursiveZombit::overhead_bits() const {
    return u_.overhead_bits() + o_.overhead_bits() +
           (rec_ ? rec_->overhead_bits() : m_plain_.overhead_bits());
}

BitBuffer RecursiveZombit::flatten_m() const {
    return rec_ ? rec_->decode() : m_plain_.to_buffer();
}

BitBuffer RecursiveZombit::decode() const {
    BitBuffer out;
    BitBuffer m_raw = flatten_m();
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

void RecursiveZombit::save_node(std::ostream& os) const {
    io::write_u8(os, static_cast<uint8_t>(level_));
    io::write_u64(os, n_);
    io::write_u64(os, k_);
    io::write_u64(os, beta_);
    io::write_u64(os, t_);
    u_.save(os);
    o_.save(os);
    io::write_u8(os, rec_ ? 1 : 0);
    if (rec_) rec_->save_node(os);
    else m_plain_.save(os);
}

void RecursiveZombit::save(std::ostream& os) const {
    io::write_u64(os, kMagic);
    io::write_u64(os, kVersion);
    io::write_u64(os, max_depth_);
    save_node(os);
}

RecursiveZombit RecursiveZombit::load_node(std::istream& is, uint64_t max_depth) {
    RecursiveZombit r;
    r.max_depth_ = max_depth;
    r.level_ = io::read_u8(is);
    r.n_ = io::read_u64(is);
    r.k_ = io::read_u64(is);
    r.beta_ = io::read_u64(is);
    r.t_ = io::read_u64(is);
    r.nblocks_ = r.beta_ ? (r.n_ + r.beta_ - 1) / r.beta_ : 0;
    r.u_ = BitVector::load(is);
    r.o_ = BitVector::load(is);
    uint8_t tag = io::read_u8(is);
    if (tag == 1) {
        r.rec_ = std::make_unique<RecursiveZombit>(load_node(is, max_depth));
    } else {
        r.m_plain_ = BitVector::load(is);
    }
    if (r.u_.size() != r.nblocks_ || r.o_.size() != r.nblocks_)
        throw std::runtime_error("RecursiveZombit: inconsistent stream");
    return r;
}

RecursiveZombit RecursiveZombit::load(std::istream& is) {
    io::check_magic(is, kMagic, "RecursiveZombit");
    if (io::read_u64(is) != kVersion)
        throw std::runtime_error("RecursiveZombit: unsupported version");
    uint64_t max_depth = io::read_u64(is);
    return load_node(is, max_depth);
}

} // namespace zombit
