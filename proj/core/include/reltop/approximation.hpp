#pragma once

#include <array>

#include "reltop/element_set.hpp"
#include "reltop/neighborhood.hpp"
#include "reltop/relation.hpp"

namespace reltop {

// Lower approximation: elements whose neighborhood is contained in X.
// An element with an empty neighborhood always qualifies (vacuous inclusion);
// this is deliberate and not normalized away, so the lower approximation can
// strictly contain the upper one for non-serial relations.
ElementSet lower_approx(const BinaryRelation& relation, NeighborhoodKind kind,
                        const ElementSet& set);

// Upper approximation: elements whose neighborhood meets X.
ElementSet upper_approx(const BinaryRelation& relation, NeighborhoodKind kind,
                        const ElementSet& set);

struct ApproximationPair {
    NeighborhoodKind kind;
    ElementSet lower;
    ElementSet upper;
};

// The eight approximation sets of one (relation, subset) pair, one lower/upper
// pair per neighborhood kind, in the canonical kind order.
class ApproximationTable {
public:
    explicit ApproximationTable(std::array<ApproximationPair, 4> pairs);

    const std::array<ApproximationPair, 4>& pairs() const { return pairs_; }
    const ApproximationPair& pair(NeighborhoodKind kind) const;

private:
    std::array<ApproximationPair, 4> pairs_;
};

// Computes all eight sets and verifies the inclusion chains between kinds
// before returning.
ApproximationTable approximation_table(const BinaryRelation& relation, const ElementSet& set);

}  // namespace reltop
