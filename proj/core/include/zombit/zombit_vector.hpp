#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "zombit/bit_vector.hpp"

namespace zombit {

namespace detail {

/// Block classification shared by ZombitVector and RecursiveZombit.
struct Decomposition {
    uint64_t n = 0;      // input length
    uint64_t k = 0;      // runs of 1s in the input
    uint64_t beta = 1;   // block size
    uint64_t nblocks = 0;
    uint64_t t = 0;      // mixed blocks
    BitBuffer u_bits;
    BitBuffer o_bits;
    BitBuffer m_bits;    // mixed blocks concatenated, zero-padded to beta
};

uint64_t default_beta(uint64_t n, uint64_t k);
Decomposition decompose(const BitBuffer& bits, std::optional<uint64_t> beta_override);

} // namespace detail

/// Block-classified compressed bitvector with constant-time access, rank and
/// successor/predecessor.
///
/// The input is split into blocks of beta bits. U marks which blocks are
/// uniform, O marks which blocks contain at least one 1-bit, and M stores the
/// mixed blocks verbatim in input order. With the default
/// beta = ceil(sqrt(n/k)) the payload is O(sqrt(kn)) bits for k runs of 1s.
class ZombitVector {
public:
    ZombitVector() = default;
    explicit ZombitVector(const BitBuffer& bits,
                          std::optional<uint64_t> beta_override = std::nullopt);

    uint64_t size() const { return n_; }
    uint64_t runs() const { return k_; }
    uint64_t beta() const { return beta_; }
    uint64_t blocks() const { return nblocks_; }
    uint64_t mixed_blocks() const { return t_; }
    uint64_t uniform_blocks() const { return nblocks_ - t_; }

    bool access(uint64_t i) const;     // i in [1, n]
    uint64_t rank1(uint64_t i) const;  // i in [0, n]
    uint64_t rank0(uint64_t i) const { return i - rank1(i); }
    uint64_t succ(uint64_t i) const;   // i in [1, n+1]; n+1 when none
    uint64_t pred(uint64_t i) const;   // i in [0, n]; 0 when none

    uint64_t payload_bits() const { return 2 * nblocks_ + t_ * beta_; }
    uint64_t overhead_bits() const;
    uint64_t size_in_bits() const { return payload_bits() + overhead_bits(); }

    /// Exact reconstruction of the input.
    BitBuffer decode() const;

    const BitVector& u() const { return u_; }
    const BitVector& o() const { return o_; }
    const BitVector& m() const { return m_; }

    void save(std::ostream& os) const;
    static ZombitVector load(std::istream& is);

private:
    uint64_t block_of(uint64_t i) const { return (i + beta_ - 1) / beta_; }
    uint64_t beg(uint64_t b) const { return (b - 1) * beta_ + 1; }
    uint64_t end(uint64_t b) const { return b * beta_; }
    uint64_t delta(uint64_t i) const { return (i - 1) % beta_; }

    uint64_t n_ = 0, k_ = 0, beta_ = 1, nblocks_ = 0, t_ = 0;
    BitVector u_, o_, m_;
};

} // namespace zombit
