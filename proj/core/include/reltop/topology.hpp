#pragma once

#include <string>
#include <vector>

#include "reltop/element_set.hpp"
#include "reltop/neighborhood.hpp"
#include "reltop/relation.hpp"
#include "reltop/set_family.hpp"

namespace reltop {

// A topology on a finite universe: a family of open sets validated against
// the axioms (contains {} and U, closed under union and intersection).
class Topology {
public:
    // Throws NotATopology unless the family satisfies all three axioms.
    explicit Topology(SetFamily opens);

    const SetFamily& opens() const { return opens_; }
    const UniversePtr& universe() const { return opens_.universe(); }
    std::size_t size() const { return opens_.size(); }
    bool is_open(const ElementSet& set) const { return opens_.contains(set); }

    bool operator==(const Topology& other) const { return opens_ == other.opens_; }

private:
    SetFamily opens_;
};

// Axiom checks, usable on arbitrary families.
bool contains_empty_and_universe(const SetFamily& family);
bool closed_under_union(const SetFamily& family);
bool closed_under_intersection(const SetFamily& family);
bool is_topology(const SetFamily& family);

// Base conditions: the family covers the universe, and any point in the
// intersection of two members lies in a third member inside the intersection.
struct BaseConditions {
    bool covers;
    bool refinement;  // pairwise-intersection condition

    bool both() const { return covers && refinement; }
};

BaseConditions base_conditions(const SetFamily& family);

// Does `family` cover the universe (union of members == U)?
bool is_cover(const SetFamily& family);

// Elements not covered by any member, as labels (empty iff is_cover).
std::vector<std::string> uncovered(const SetFamily& family);

// The relation-property side of the per-kind subbase theorems:
//   successor      -> inverse serial
//   predecessor    -> serial
//   succ_and_pred  -> symmetric and (serial or inverse serial)
//   succ_or_pred   -> serial or inverse serial
// For successor/predecessor this is equivalent to the neighborhood family
// covering the universe; for the combined kinds it implies the cover but the
// converse can fail (see the verification harness).
bool subbase_criterion(const BinaryRelation& relation, NeighborhoodKind kind);

// Smallest topology containing the family. Throws NotACover when the family
// does not cover the universe.
Topology generate_topology(const SetFamily& subbase);

// generate_topology applied to the neighborhood family of (relation, kind).
Topology induced_topology(const BinaryRelation& relation, NeighborhoodKind kind);

// Is `base` a base for `topology`? Requires base to be a subfamily of the
// open sets (throws NotSubfamily otherwise); then every open set must be a
// union of base members (the empty union yields {}).
bool is_base(const SetFamily& base, const Topology& topology);

// Largest open set inside `set` / smallest closed set containing it.
ElementSet interior(const Topology& topology, const ElementSet& set);
ElementSet closure(const Topology& topology, const ElementSet& set);

// The family ordering: every member of `coarse` is a subset of at least one
// member of `fine`. Throws UniverseMismatch.
bool refines(const SetFamily& coarse, const SetFamily& fine);

// Exact comparison of two topologies' open families on one universe.
enum class TopologyOrder {
    equal,
    strictly_subset,    // left's opens form a proper subset of right's
    strictly_superset,  // left's opens form a proper superset of right's
    incomparable,
};

TopologyOrder compare_topologies(const Topology& left, const Topology& right);

std::string to_string(TopologyOrder order);

}  // namespace reltop
