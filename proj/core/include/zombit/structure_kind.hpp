#pragma once

#include <optional>
#include <string_view>

namespace zombit {

/// The succ-capable structures this library ships.
enum class StructureKind {
    kZombit,
    kZombitRec,
    kOz,
    kSdArray,
    kPlain,
};

inline constexpr std::string_view structure_name(StructureKind kind) {
    switch (kind) {
        case StructureKind::kZombit: return "zombit";
        case StructureKind::kZombitRec: return "zombit-rec";
        case StructureKind::kOz: return "oz";
        case StructureKind::kSdArray: return "sdarray";
        case StructureKind::kPlain: return "plain";
    }
    return "?";
}

inline constexpr std::optional<StructureKind> parse_structure(std::string_view name) {
    if (name == "zombit") return StructureKind::kZombit;
    if (name == "zombit-rec") return StructureKind::kZombitRec;
    if (name == "oz") return StructureKind::kOz;
    if (name == "sdarray") return StructureKind::kSdArray;
    if (name == "plain") return StructureKind::kPlain;
    return std::nullopt;
}

} // namespace zombit
