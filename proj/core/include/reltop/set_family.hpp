#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "reltop/element_set.hpp"
#include "reltop/universe.hpp"

namespace reltop {

// A deduplicated collection of subsets of one universe, kept in canonical order
// (cardinality, then lexicographic by ascending member indices). The empty set
// is an ordinary member when present.
class SetFamily {
public:
    SetFamily(UniversePtr universe, std::vector<ElementSet> members);
    static SetFamily of(UniversePtr universe, std::initializer_list<std::uint64_t> masks);

    const UniversePtr& universe() const { return universe_; }
    const std::vector<ElementSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    bool contains(const ElementSet& set) const;
    bool contains_mask(std::uint64_t mask) const;

    // Union of all members as a membership word.
    std::uint64_t union_bits() const;

    bool operator==(const SetFamily& rhs) const;
    bool operator!=(const SetFamily& rhs) const { return !(*this == rhs); }

    // Renders "{{}, {a}, {a,c}}".
    std::string to_string() const;

private:
    UniversePtr universe_;
    std::vector<ElementSet> members_;
};

}  // namespace reltop
