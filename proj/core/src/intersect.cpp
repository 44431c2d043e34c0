#include "zombit/intersect.hpp"

#include <stdexcept>

namespace zombit {

PostingList PostingList::build(const std::vector<uint64_t>& ids, StructureKind backend,
                               std::optional<uint64_t> universe) {
    uint64_t prev = 0;
    for (uint64_t id : ids) {
        if (id <= prev) throw std::invalid_argument("PostingList: ids must be strictly increasing and >= 1");
        prev = id;
    }
    PostingList pl;
    pl.kind_ = backend;
    pl.m_ = ids.size();
    pl.n_ = universe.value_or(prev);
    if (pl.n_ < prev) throw std::invalid_argument("PostingList: universe smaller than the largest id");

    if (backend == StructureKind::kSdArray) {
        pl.impl_ = SparseArray(ids, pl.n_);
        return pl;
    }
    BitBuffer bits(pl.n_);
    for (uint64_t id : ids) bits.set(id, true);
    switch (backend) {
        case StructureKind::kZombit: pl.impl_ = ZombitVector(bits); break;
        case StructureKind::kZombitRec: pl.impl_ = RecursiveZombit(bits); break;
        case StructureKind::kOz: pl.impl_ = OzVector(bits); break;
        case StructureKind::kPlain: pl.impl_ = BitVector(std::move(bits)); break;
        case StructureKind::kSdArray: break; // handled above
    }
    return pl;
}

uint64_t PostingList::next_geq(uint64_t x) const {
    if (x > n_) return n_ + 1;
    if (x < 1) x = 1;
    return std::visit(
        [&](const auto& s) -> uint64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, std::monostate>) return n_ + 1;
            else if constexpr (std::is_same_v<T, BitVector>) return s.succ1(x);
            else return s.succ(x);
        },
        impl_);
}

std::vector<uint64_t> PostingList::decode() const {
    std::vector<uint64_t> out;
    out.reserve(m_);
    uint64_t x = 1;
    while (x <= n_) {
        uint64_t y = next_geq(x);
        if (y > n_) break;
        out.push_back(y);
        x = y + 1;
    }
    return out;
}

std::vector<uint64_t> intersect(const PostingList& a, const PostingList& b) {
    std::vector<uint64_t> out;
    uint64_t x = 1;
    for (;;) {
        uint64_t y = a.next_geq(x);
        if (y > a.universe()) break;
        uint64_t z = b.next_geq(y);
        if (z > b.universe()) break;
        if (z == y) {
            out.push_back(y);
            x = y + 1;
        } else {
            x = z;
        }
    }
    return out;
}

std::vector<uint64_t> intersect_many(std::span<const PostingList> lists) {
    if (lists.size() < 2) throw std::invalid_argument("intersect_many: need at least two lists");
    std::vector<uint64_t> out;
    uint64_t x = 1;
    for (;;) {
        uint64_t y = lists[0].next_geq(x);
        if (y > lists[0].universe()) return out;
        bool confirmed = true;
        for (size_t l = 1; l < lists.size(); ++l) {
            uint64_t z = lists[l].next_geq(y);
            if (z > lists[l].universe()) return out;
            if (z != y) {
                x = z; // skip straight to the other list's candidate
                confirmed = false;
                break;
            }
        }
        if (confirmed) {
            out.push_back(y);
            x = y + 1;
        }
    }
}

} // namespace zombit
