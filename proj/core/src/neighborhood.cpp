#include "reltop/neighborhood.hpp"

namespace reltop {

std::string_view kind_token(NeighborhoodKind kind) {
    switch (kind) {
        case NeighborhoodKind::successor: return "s";
        case NeighborhoodKind::predecessor: return "p";
        case NeighborhoodKind::succ_and_pred: return "s-and-p";
        case NeighborhoodKind::succ_or_pred: return "s-or-p";
    }
    return "?";
}

std::optional<NeighborhoodKind> kind_from_token(std::string_view token) {
    for (auto kind : all_kinds)
        if (token == kind_token(kind)) return kind;
    return std::nullopt;
}

std::uint64_t neighborhood_bits(const BinaryRelation& relation, NeighborhoodKind kind,
                                std::size_t x) {
    switch (kind) {
        case NeighborhoodKind::successor: return relation.successor_bits(x);
        case NeighborhoodKind::predecessor: return relation.predecessor_bits(x);
        case NeighborhoodKind::succ_and_pred:
            return relation.successor_bits(x) & relation.predecessor_bits(x);
        case NeighborhoodKind::succ_or_pred:
            return relation.successor_bits(x) | relation.predecessor_bits(x);
    }
    return 0;
}

ElementSet neighborhood(const BinaryRelation& relation, NeighborhoodKind kind, std::size_t x) {
    return ElementSet(relation.universe(), neighborhood_bits(relation, kind, x));
}

ElementSet neighborhood(const BinaryRelation& relation, NeighborhoodKind kind,
                        std::string_view label) {
    return neighborhood(relation, kind, relation.universe()->index(label));
}

SetFamily neighborhood_family(const BinaryRelation& relation, NeighborhoodKind kind) {
    std::vector<ElementSet> members;
    members.reserve(relation.size());
    for (std::size_t x = 0; x < relation.size(); ++x)
        members.push_back(neighborhood(relation, kind, x));
    return SetFamily(relation.universe(), std::move(members));
}

bool check_neighborhood_sandwich(const BinaryRelation& relation) {
    for (std::size_t x = 0; x < relation.size(); ++x) {
        std::uint64_t succ = relation.successor_bits(x);
        std::uint64_t pred = relation.predecessor_bits(x);
        std::uint64_t both = succ & pred;
        std::uint64_t either = succ | pred;
        if ((both & ~succ) || (both & ~pred)) return false;
        if ((succ & ~either) || (pred & ~either)) return false;
    }
    return true;
}

}  // namespace reltop
