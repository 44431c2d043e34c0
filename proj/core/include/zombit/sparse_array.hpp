#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "zombit/bit_vector.hpp"

namespace zombit {

/// Elias-Fano encoding of a sorted set of 1-based positions over a universe
/// [1, n]. Each stored value minus one is split into r low bits, kept in the
/// packed array L, and high bits, represented as per-bucket unary counts
/// (1^count 0) in the bitvector H. select is one H lookup; rank and succ
/// locate the bucket via select0 on H and binary-search its low bits.
class SparseArray {
public:
    SparseArray() = default;
    SparseArray(const std::vector<uint64_t>& positions, uint64_t universe);
    /// Positions of the 1-bits of a raw bitvector.
    static SparseArray from_bits(const BitBuffer& bits);

    uint64_t universe() const { return n_; }
    uint64_t count() const { return m_; }
    uint64_t low_width() const { return r_; }

    uint64_t select(uint64_t j) const; // j in [1, m]; the j-th smallest position
    uint64_t succ(uint64_t x) const;   // x in [1, n+1]; smallest stored >= x, else n+1
    uint64_t pred(uint64_t x) const;   // x in [0, n]; largest stored <= x, else 0
    uint64_t rank(uint64_t x) const;   // x in [0, n]; stored positions <= x
    bool contains(uint64_t x) const;   // x in [1, n]

    std::vector<uint64_t> decode() const;

    uint64_t payload_bits() const { return high_.payload_bits() + m_ * r_; }
    uint64_t overhead_bits() const { return high_.overhead_bits(); }
    uint64_t size_in_bits() const { return payload_bits() + overhead_bits(); }

    const BitVector& high() const { return high_; }

    void save(std::ostream& os) const;
    static SparseArray load(std::istream& is);

private:
    uint64_t low_at(uint64_t idx) const; // idx is 0-based
    uint64_t elems_before_bucket(uint64_t h) const;

    uint64_t n_ = 0, m_ = 0, r_ = 0;
    std::vector<uint64_t> low_; // m values of r bits each, packed
    BitVector high_;
};

} // namespace zombit
