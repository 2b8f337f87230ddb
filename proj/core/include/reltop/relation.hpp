#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "reltop/element_set.hpp"
#include "reltop/universe.hpp"

namespace reltop {

// A binary relation on a universe, stored as one successor bit-row per element:
// bit y of row x is set iff (x, y) is in the relation.
class BinaryRelation {
public:
    BinaryRelation(UniversePtr universe,
                   const std::vector<std::pair<std::string, std::string>>& pairs);

    // Decodes the row-major bit encoding (bit x*n+y <=> pair (x,y)); needs n*n <= 64.
    static BinaryRelation from_bits(UniversePtr universe, std::uint64_t code);
    std::uint64_t to_bits() const;

    const UniversePtr& universe() const { return universe_; }
    std::size_t size() const { return rows_.size(); }

    bool contains(std::size_t x, std::size_t y) const { return (rows_[x] >> y) & 1u; }
    std::uint64_t successor_bits(std::size_t x) const { return rows_[x]; }
    std::uint64_t predecessor_bits(std::size_t y) const;

    std::size_t pair_count() const;
    // Row-major (x ascending, then y) label pairs; the canonical serialization order.
    std::vector<std::pair<std::string, std::string>> pairs() const;

    BinaryRelation transpose() const;

    bool operator==(const BinaryRelation& rhs) const;
    bool operator!=(const BinaryRelation& rhs) const { return !(*this == rhs); }

private:
    BinaryRelation(UniversePtr universe, std::vector<std::uint64_t> rows);

    UniversePtr universe_;
    std::vector<std::uint64_t> rows_;
};

BinaryRelation make_relation(UniversePtr universe,
                             const std::vector<std::pair<std::string, std::string>>& pairs);

struct RelationProfile {
    bool serial = false;
    bool inverse_serial = false;
    bool reflexive = false;
    bool symmetric = false;
    bool transitive = false;
    bool preorder = false;     // reflexive and transitive
    bool tolerance = false;    // reflexive and symmetric
    bool equivalence = false;  // reflexive, symmetric and transitive

    bool operator==(const RelationProfile&) const = default;
};

// Definitional scan of the relation property flags.
RelationProfile relation_profile(const BinaryRelation& relation);

}  // namespace reltop
