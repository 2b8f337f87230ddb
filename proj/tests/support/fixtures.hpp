#pragma once

#include "reltop/relation.hpp"

// The worked four-element relation used as a golden fixture throughout the
// tests: five pairs, chosen so that none of the standard relation properties
// hold and the successor neighborhood of d is empty.
inline reltop::BinaryRelation worked_example() {
    auto universe = reltop::make_universe({"a", "b", "c", "d"});
    return reltop::make_relation(
        universe, {{"a", "a"}, {"a", "c"}, {"b", "c"}, {"c", "a"}, {"c", "d"}});
}
