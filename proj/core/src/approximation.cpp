#include "reltop/approximation.hpp"

#include <stdexcept>

namespace reltop {

namespace {

void require_same(const BinaryRelation& relation, const ElementSet& set) {
    if (!same_universe(relation.universe(), set.universe())) throw UniverseMismatch();
}

}  // namespace

ElementSet lower_approx(const BinaryRelation& relation, NeighborhoodKind kind,
                        const ElementSet& set) {
    require_same(relation, set);
    std::uint64_t x_bits = set.bits();
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < relation.size(); ++x) {
        std::uint64_t nbr = neighborhood_bits(relation, kind, x);
        if ((nbr & ~x_bits) == 0) out |= std::uint64_t{1} << x;
    }
    return ElementSet(relation.universe(), out);
}

ElementSet upper_approx(const BinaryRelation& relation, NeighborhoodKind kind,
                        const ElementSet& set) {
    require_same(relation, set);
    std::uint64_t x_bits = set.bits();
    std::uint64_t out = 0;
    for (std::size_t x = 0; x < relation.size(); ++x) {
        if (neighborhood_bits(relation, kind, x) & x_bits) out |= std::uint64_t{1} << x;
    }
    return ElementSet(relation.universe(), out);
}

ApproximationTable::ApproximationTable(std::array<ApproximationPair, 4> pairs)
    : pairs_(std::move(pairs)) {}

const ApproximationPair& ApproximationTable::pair(NeighborhoodKind kind) const {
    for (const auto& p : pairs_)
        if (p.kind == kind) return p;
    throw std::logic_error("approximation table misses a kind");
}

ApproximationTable approximation_table(const BinaryRelation& relation, const ElementSet& set) {
    std::array<ApproximationPair, 4> pairs = {
        ApproximationPair{all_kinds[0], lower_approx(relation, all_kinds[0], set),
                          upper_approx(relation, all_kinds[0], set)},
        ApproximationPair{all_kinds[1], lower_approx(relation, all_kinds[1], set),
                          upper_approx(relation, all_kinds[1], set)},
        ApproximationPair{all_kinds[2], lower_approx(relation, all_kinds[2], set),
                          upper_approx(relation, all_kinds[2], set)},
        ApproximationPair{all_kinds[3], lower_approx(relation, all_kinds[3], set),
                          upper_approx(relation, all_kinds[3], set)},
    };
    // The unconditional inclusion chains; a violation can only mean a defect in
    // the operators themselves.
    const auto& s = pairs[0];
    const auto& p = pairs[1];
    const auto& sp = pairs[2];
    const auto& su = pairs[3];
    bool chains_ok = su.lower.is_subset_of(s.lower) && s.lower.is_subset_of(sp.lower) &&
                     su.lower.is_subset_of(p.lower) && p.lower.is_subset_of(sp.lower) &&
                     sp.upper.is_subset_of(s.upper) && s.upper.is_subset_of(su.upper) &&
                     sp.upper.is_subset_of(p.upper) && p.upper.is_subset_of(su.upper);
    if (!chains_ok) throw std::logic_error("approximation inclusion chains violated");
    return ApproximationTable(std::move(pairs));
}

}  // namespace reltop
