#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>

#include "zombit/zombit_vector.hpp"

namespace zombit {

/// Recursive variant of ZombitVector: the mixed-block store M is itself
/// represented as a zombit, down to at most max_depth levels, trading
/// O(levels) query time for space converging to O(k) bits.
///
/// Recursion on M stops when any of these holds: the depth limit is reached,
/// the default block size for M would be below 2, or the child decomposition
/// would not be strictly smaller than storing M plain. The last rule makes
/// the total payload monotonically smaller-or-equal than the flat zombit
/// built with the same top-level block size.
class RecursiveZombit {
public:
    static constexpr uint64_t kDefaultMaxDepth = 8;

    RecursiveZombit() = default;
    explicit RecursiveZombit(const BitBuffer& bits, uint64_t max_depth = kDefaultMaxDepth,
                             std::optional<uint64_t> beta_override = std::nullopt);

    uint64_t size() const { return n_; }
    uint64_t runs() const { return k_; }
    uint64_t beta() const { return beta_; }
    uint64_t blocks() const { return nblocks_; }
    uint64_t mixed_blocks() const { return t_; }
    uint64_t level() const { return level_; }
    uint64_t max_depth() const { return max_depth_; }
    /// Deepest level present in the tree (0 when M is stored plain at the top).
    uint64_t depth() const { return rec_ ? rec_->depth() : level_; }

    bool access(uint64_t i) const;     // i in [1, n]
    uint64_t rank1(uint64_t i) const;  // i in [0, n]
    uint64_t rank0(uint64_t i) const { return i - rank1(i); }
    uint64_t succ(uint64_t i) const;   // i in [1, n+1]; n+1 when none
    uint64_t pred(uint64_t i) const;   // i in [0, n]; 0 when none

    uint64_t payload_bits() const;
    uint64_t overhead_bits() const;
    uint64_t size_in_bits() const { return payload_bits() + overhead_bits(); }

    BitBuffer decode() const;
    /// Reconstruction of this level's mixed-block store.
    BitBuffer flatten_m() const;

    const BitVector& u() const { return u_; }
    const BitVector& o() const { return o_; }
    bool m_is_recursive() const { return rec_ != nullptr; }
    const RecursiveZombit* m_child() const { return rec_.get(); }
    const BitVector& m_plain() const { return m_plain_; }

    void save(std::ostream& os) const;
    static RecursiveZombit load(std::istream& is);

private:
    RecursiveZombit(detail::Decomposition d, uint64_t level, uint64_t max_depth);
    void init(detail::Decomposition d);
    void save_node(std::ostream& os) const;
    static RecursiveZombit load_node(std::istream& is, uint64_t max_depth);

    uint64_t block_of(uint64_t i) const { return (i + beta_ - 1) / beta_; }
    uint64_t beg(uint64_t b) const { return (b - 1) * beta_ + 1; }
    uint64_t end(uint64_t b) const { return b * beta_; }
    uint64_t delta(uint64_t i) const { return (i - 1) % beta_; }

    // queries on the mixed store, dispatched to the child representation
    bool m_access(uint64_t p) const { return rec_ ? rec_->access(p) : m_plain_.access(p); }
    uint64_t m_rank1(uint64_t p) const { return rec_ ? rec_->rank1(p) : m_plain_.rank1(p); }
    uint64_t m_succ(uint64_t p) const { return rec_ ? rec_->succ(p) : m_plain_.succ1(p); }
    uint64_t m_pred(uint64_t p) const { return rec_ ? rec_->pred(p) : m_plain_.pred1(p); }

    uint64_t n_ = 0, k_ = 0, beta_ = 1, nblocks_ = 0, t_ = 0;
    uint64_t level_ = 0;
    uint64_t max_depth_ = kDefaultMaxDepth;
    BitVector u_, o_;
    BitVector m_plain_;                    // base layer when rec_ is null
    std::unique_ptr<RecursiveZombit> rec_; // recursive layer otherwise
};

} // namespace zombit
