#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "reltop/element_set.hpp"
#include "reltop/relation.hpp"
#include "reltop/set_family.hpp"

namespace reltop {

// The four neighborhood operators derived from a binary relation.
enum class NeighborhoodKind {
    successor,      // {y | (x,y) in R}
    predecessor,    // {y | (y,x) in R}
    succ_and_pred,  // intersection of the two
    succ_or_pred,   // union of the two
};

inline constexpr std::array<NeighborhoodKind, 4> all_kinds = {
    NeighborhoodKind::successor,
    NeighborhoodKind::predecessor,
    NeighborhoodKind::succ_and_pred,
    NeighborhoodKind::succ_or_pred,
};

// Short stable tokens used by the CLI and in reports: s, p, s-and-p, s-or-p.
std::string_view kind_token(NeighborhoodKind kind);
std::optional<NeighborhoodKind> kind_from_token(std::string_view token);

// Membership word of N_kind(x); the cheap form used in inner loops.
std::uint64_t neighborhood_bits(const BinaryRelation& relation, NeighborhoodKind kind,
                                std::size_t x);

ElementSet neighborhood(const BinaryRelation& relation, NeighborhoodKind kind, std::size_t x);
// Label-addressed variant; throws UnknownLabel.
ElementSet neighborhood(const BinaryRelation& relation, NeighborhoodKind kind,
                        std::string_view label);

// The family {N_kind(x) : x in U}, deduplicated; empty neighborhoods are kept.
SetFamily neighborhood_family(const BinaryRelation& relation, NeighborhoodKind kind);

// Pointwise containment of succ-and-pred inside successor/predecessor inside
// succ-or-pred, at every element. Holds for every relation.
bool check_neighborhood_sandwich(const BinaryRelation& relation);

}  // namespace reltop
