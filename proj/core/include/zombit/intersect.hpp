#pragma once

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "zombit/bit_vector.hpp"
#include "zombit/oz_vector.hpp"
#include "zombit/recursive_zombit.hpp"
#include "zombit/sparse_array.hpp"
#include "zombit/structure_kind.hpp"
#include "zombit/zombit_vector.hpp"

namespace zombit {

/// Sorted document-id list behind a succ-capable structure. Ids are 1-based
/// and bounded by the list's universe.
class PostingList {
public:
    PostingList() = default;
    /// ids must be strictly increasing and >= 1. The universe defaults to the
    /// largest id.
    static PostingList build(const std::vector<uint64_t>& ids, StructureKind backend,
                             std::optional<uint64_t> universe = std::nullopt);

    uint64_t universe() const { return n_; }
    uint64_t count() const { return m_; }
    StructureKind backend() const { return kind_; }

    /// Smallest stored id >= x, or universe()+1 when none. Any x >= 1 is
    /// accepted; values beyond the universe resolve to the sentinel.
    uint64_t next_geq(uint64_t x) const;

    std::vector<uint64_t> decode() const;

private:
    uint64_t n_ = 0, m_ = 0;
    StructureKind kind_ = StructureKind::kPlain;
    std::variant<std::monostate, ZombitVector, RecursiveZombit, OzVector, SparseArray, BitVector> impl_;
};

/// Successor-driven adaptive intersection of two lists, ascending.
std::vector<uint64_t> intersect(const PostingList& a, const PostingList& b);

/// Candidate-driven k-way intersection, k >= 2.
std::vector<uint64_t> intersect_many(std::span<const PostingList> lists);

} // namespace zombit
