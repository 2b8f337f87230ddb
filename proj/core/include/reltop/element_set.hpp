#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "reltop/universe.hpp"

namespace reltop {

// Membership word with the n lowest bits usable.
inline std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// A subset of a universe, stored as a 64-bit membership word (bit i = element i).
// Value type: immutable in spirit, cheap to copy, shares the universe handle.
class ElementSet {
public:
    ElementSet(UniversePtr universe, std::uint64_t bits = 0);

    static ElementSet empty(UniversePtr universe) { return ElementSet(std::move(universe), 0); }
    static ElementSet full(UniversePtr universe);
    static ElementSet of(UniversePtr universe, std::initializer_list<std::string_view> labels);
    static ElementSet from_labels(UniversePtr universe, const std::vector<std::string>& labels);

    const UniversePtr& universe() const { return universe_; }
    std::uint64_t bits() const { return bits_; }
    std::size_t cardinality() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool is_empty() const { return bits_ == 0; }

    bool contains(std::size_t i) const { return (bits_ >> i) & 1u; }
    bool contains(std::string_view label) const;

    // Same-universe set derived from a raw membership word.
    ElementSet with_bits(std::uint64_t bits) const { return ElementSet(universe_, bits); }

    ElementSet operator|(const ElementSet& rhs) const;
    ElementSet operator&(const ElementSet& rhs) const;
    ElementSet operator-(const ElementSet& rhs) const;
    ElementSet operator^(const ElementSet& rhs) const;
    ElementSet operator~() const;

    bool is_subset_of(const ElementSet& rhs) const;

    bool operator==(const ElementSet& rhs) const;
    bool operator!=(const ElementSet& rhs) const { return !(*this == rhs); }

    std::vector<std::size_t> indices() const;
    std::vector<std::string> labels() const;

    // Renders "{a,c}" in universe order; "{}" when empty.
    std::string to_string() const;

private:
    void require_same_universe(const ElementSet& rhs) const;

    UniversePtr universe_;
    std::uint64_t bits_;
};

ElementSet complement(const ElementSet& set);

// Canonical order on subsets of one universe: by cardinality, then
// lexicographically by the ascending index sequence of the members.
bool canonical_mask_less(std::uint64_t a, std::uint64_t b);

}  // namespace reltop
