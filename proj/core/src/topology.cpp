#include "reltop/topology.hpp"

#include <unordered_set>

#include "reltop/neighborhood.hpp"

namespace reltop {

namespace {

std::vector<std::uint64_t> member_masks(const SetFamily& family) {
    std::vector<std::uint64_t> masks;
    masks.reserve(family.size());
    for (const auto& member : family.members()) masks.push_back(member.bits());
    return masks;
}

SetFamily family_from_masks(const UniversePtr& universe, const std::vector<std::uint64_t>& masks) {
    std::vector<ElementSet> members;
    members.reserve(masks.size());
    for (auto mask : masks) members.emplace_back(universe, mask);
    return SetFamily(universe, std::move(members));
}

}  // namespace

Topology::Topology(SetFamily opens) : opens_(std::move(opens)) {
    if (!is_topology(opens_)) throw NotATopology();
}

bool contains_empty_and_universe(const SetFamily& family) {
    return family.contains_mask(0) && family.contains_mask(full_mask(family.universe()->size()));
}

bool closed_under_union(const SetFamily& family) {
    auto masks = member_masks(family);
    std::unordered_set<std::uint64_t> present(masks.begin(), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (!present.count(masks[i] | masks[j])) return false;
    return true;
}

bool closed_under_intersection(const SetFamily& family) {
    auto masks = member_masks(family);
    std::unordered_set<std::uint64_t> present(masks.begin(), masks.end());
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = i + 1; j < masks.size(); ++j)
            if (!present.count(masks[i] & masks[j])) return false;
    return true;
}

bool is_topology(const SetFamily& family) {
    return contains_empty_and_universe(family) && closed_under_union(family) &&
           closed_under_intersection(family);
}

BaseConditions base_conditions(const SetFamily& family) {
    BaseConditions result;
    std::size_t n = family.universe()->size();
    result.covers = family.union_bits() == full_mask(n);
    result.refinement = true;
    auto masks = member_masks(family);
    for (std::size_t i = 0; i < masks.size() && result.refinement; ++i) {
        for (std::size_t j = i; j < masks.size() && result.refinement; ++j) {
            std::uint64_t meet = masks[i] & masks[j];
            std::uint64_t rest = meet;
            while (rest) {
                std::uint64_t x_bit = rest & (0 - rest);
                rest &= rest - 1;
                bool witnessed = false;
                for (auto z : masks) {
                    if ((z & x_bit) && (z & ~meet) == 0) {
                        witnessed = true;
                        break;
                    }
                }
                if (!witnessed) {
                    result.refinement = false;
                    break;
                }
            }
        }
    }
    return result;
}

bool is_cover(const SetFamily& family) {
    return family.union_bits() == full_mask(family.universe()->size());
}

std::vector<std::string> uncovered(const SetFamily& family) {
    const auto& universe = *family.universe();
    std::uint64_t covered = family.union_bits();
    std::vector<std::string> missing;
    for (std::size_t i = 0; i < universe.size(); ++i)
        if (!((covered >> i) & 1u)) missing.push_back(universe.label(i));
    return missing;
}

bool subbase_criterion(const BinaryRelation& relation, NeighborhoodKind kind) {
    auto profile = relation_profile(relation);
    switch (kind) {
        case NeighborhoodKind::successor: return profile.inverse_serial;
        case NeighborhoodKind::predecessor: return profile.serial;
        case NeighborhoodKind::succ_and_pred:
            return profile.symmetric && (profile.serial || profile.inverse_serial);
        case NeighborhoodKind::succ_or_pred: return profile.serial || profile.inverse_serial;
    }
    return false;
}

Topology generate_topology(const SetFamily& subbase) {
    if (!is_cover(subbase)) throw NotACover(uncovered(subbase));
    const auto& universe = subbase.universe();
    std::uint64_t full = full_mask(universe->size());

    // Fixpoint closure under pairwise union/intersection, seeded with the
    // subbase plus {} and U. Each mask is combined with every mask discovered
    // before it, so the loop terminates once nothing new appears.
    std::vector<std::uint64_t> opens = {0, full};
    std::unordered_set<std::uint64_t> seen(opens.begin(), opens.end());
    for (const auto& member : subbase.members()) {
        if (seen.insert(member.bits()).second) opens.push_back(member.bits());
    }
    for (std::size_t i = 1; i < opens.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            std::uint64_t join = opens[i] | opens[j];
            if (seen.insert(join).second) opens.push_back(join);
            std::uint64_t meet = opens[i] & opens[j];
            if (seen.insert(meet).second) opens.push_back(meet);
        }
    }
    return Topology(family_from_masks(universe, opens));
}

Topology induced_topology(const BinaryRelation& relation, NeighborhoodKind kind) {
    return generate_topology(neighborhood_family(relation, kind));
}

bool is_base(const SetFamily& base, const Topology& topology) {
    if (!same_universe(base.universe(), topology.universe())) throw UniverseMismatch();
    for (const auto& member : base.members())
        if (!topology.is_open(member)) throw NotSubfamily();
    auto base_masks = member_masks(base);
    for (const auto& open : topology.opens().members()) {
        std::uint64_t target = open.bits();
        std::uint64_t acc = 0;
        for (auto b : base_masks)
            if ((b & ~target) == 0) acc |= b;
        if (acc != target) return false;
    }
    return true;
}

ElementSet interior(const Topology& topology, const ElementSet& set) {
    if (!same_universe(topology.universe(), set.universe())) throw UniverseMismatch();
    std::uint64_t target = set.bits();
    std::uint64_t acc = 0;
    for (const auto& open : topology.opens().members())
        if ((open.bits() & ~target) == 0) acc |= open.bits();
    return ElementSet(topology.universe(), acc);
}

ElementSet closure(const Topology& topology, const ElementSet& set) {
    if (!same_universe(topology.universe(), set.universe())) throw UniverseMismatch();
    std::uint64_t full = full_mask(topology.universe()->size());
    std::uint64_t acc = full;
    for (const auto& open : topology.opens().members()) {
        std::uint64_t closed = full & ~open.bits();
        if ((set.bits() & ~closed) == 0) acc &= closed;
    }
    return ElementSet(topology.universe(), acc);
}

bool refines(const SetFamily& coarse, const SetFamily& fine) {
    if (!same_universe(coarse.universe(), fine.universe())) throw UniverseMismatch();
    for (const auto& member : coarse.members()) {
        bool contained = false;
        for (const auto& host : fine.members()) {
            if ((member.bits() & ~host.bits()) == 0) {
                contained = true;
                break;
            }
        }
        if (!contained) return false;
    }
    return true;
}

TopologyOrder compare_topologies(const Topology& left, const Topology& right) {
    if (!same_universe(left.universe(), right.universe())) throw UniverseMismatch();
    auto in = [](const SetFamily& a, const SetFamily& b) {
        for (const auto& member : a.members())
            if (!b.contains_mask(member.bits())) return false;
        return true;
    };
    bool l_in_r = in(left.opens(), right.opens());
    bool r_in_l = in(right.opens(), left.opens());
    if (l_in_r && r_in_l) return TopologyOrder::equal;
    if (l_in_r) return TopologyOrder::strictly_subset;
    if (r_in_l) return TopologyOrder::strictly_superset;
    return TopologyOrder::incomparable;
}

std::string to_string(TopologyOrder order) {
    switch (order) {
        case TopologyOrder::equal: return "equal";
        case TopologyOrder::strictly_subset: return "strictly-subset";
        case TopologyOrder::strictly_superset: return "strictly-superset";
        case TopologyOrder::incomparable: return "incomparable";
    }
    return "?";
}

}  // namespace reltop
