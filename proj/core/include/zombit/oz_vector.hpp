#pragma once

#include <cstdint>
#include <iosfwd>

#include "zombit/sparse_array.hpp"

namespace zombit {

/// Run-compressed bitvector. The lengths of the 1-runs and 0-runs are unary
/// coded into two streams whose run-start marks are kept in sparse arrays
/// (onar, znar). Queries locate the containing or following 1-run by binary
/// search over the cumulative run boundaries, so succ/pred cost O(log k).
class OzVector {
public:
    OzVector() = default;
    explicit OzVector(const BitBuffer& bits);

    uint64_t size() const { return n_; }
    uint64_t runs() const { return k_; } // runs of 1s
    bool first_bit() const { return first_bit_; }

    bool access(uint64_t i) const;     // i in [1, n]
    uint64_t rank1(uint64_t i) const;  // i in [0, n]
    uint64_t rank0(uint64_t i) const { return i - rank1(i); }
    uint64_t succ(uint64_t i) const;   // i in [1, n+1]; n+1 when none
    uint64_t pred(uint64_t i) const;   // i in [0, n]; 0 when none

    uint64_t payload_bits() const { return onar_.payload_bits() + znar_.payload_bits() + 1; }
    uint64_t overhead_bits() const { return onar_.overhead_bits() + znar_.overhead_bits(); }
    uint64_t size_in_bits() const { return payload_bits() + overhead_bits(); }

    BitBuffer decode() const;

    const SparseArray& one_marks() const { return onar_; }
    const SparseArray& zero_marks() const { return znar_; }

    void save(std::ostream& os) const;
    static OzVector load(std::istream& is);

private:
    uint64_t ones_prefix(uint64_t j) const;  // total length of the first j 1-runs
    uint64_t zeros_prefix(uint64_t j) const; // total length of the first j 0-runs
    uint64_t run_start(uint64_t j) const;    // j-th 1-run, 1-based
    uint64_t run_end(uint64_t j) const;

    uint64_t n_ = 0;
    uint64_t k_ = 0;  // 1-runs
    uint64_t k0_ = 0; // 0-runs
    bool first_bit_ = false;
    SparseArray onar_, znar_;
};

} // namespace zombit
