#include <doctest.h>

#include "fixtures.hpp"
#include "reltop/approximation.hpp"
#include "reltop/errors.hpp"

using namespace reltop;

TEST_CASE("approximations of the worked example match hand computation") {
    auto rel = worked_example();
    const auto& u = rel.universe();
    auto x = ElementSet::from_labels(u, {"a", "b"});

    auto table = approximation_table(rel, x);
    CHECK(table.pair(NeighborhoodKind::successor).lower.to_string() == "{d}");
    CHECK(table.pair(NeighborhoodKind::successor).upper.to_string() == "{a,c}");
    CHECK(table.pair(NeighborhoodKind::predecessor).lower.to_string() == "{b,c}");
    CHECK(table.pair(NeighborhoodKind::predecessor).upper.to_string() == "{a,c}");
    CHECK(table.pair(NeighborhoodKind::succ_and_pred).lower.to_string() == "{b,c,d}");
    CHECK(table.pair(NeighborhoodKind::succ_and_pred).upper.to_string() == "{a,c}");
    CHECK(table.pair(NeighborhoodKind::succ_or_pred).lower.to_string() == "{}");
    CHECK(table.pair(NeighborhoodKind::succ_or_pred).upper.to_string() == "{a,c}");

    // pairs() lists the kinds in canonical order and agrees with the
    // standalone operators.
    for (std::size_t k = 0; k < all_kinds.size(); ++k) {
        const auto& entry = table.pairs()[k];
        CHECK(entry.kind == all_kinds[k]);
        CHECK(entry.lower == lower_approx(rel, entry.kind, x));
        CHECK(entry.upper == upper_approx(rel, entry.kind, x));
    }
}

TEST_CASE("empty successor neighborhoods invert the usual inclusion") {
    auto rel = worked_example();
    const auto& u = rel.universe();
    constexpr auto succ = NeighborhoodKind::successor;

    // d has no successor, so it lands in every lower approximation and in no
    // upper approximation. This is the untouched boundary case: the lower
    // approximation of even the empty set is nonempty, and the lower
    // approximation of the full universe strictly contains the upper one.
    CHECK(lower_approx(rel, succ, ElementSet::empty(u)).to_string() == "{d}");
    CHECK(upper_approx(rel, succ, ElementSet::empty(u)).to_string() == "{}");
    CHECK(lower_approx(rel, succ, ElementSet::full(u)).to_string() == "{a,b,c,d}");
    CHECK(upper_approx(rel, succ, ElementSet::full(u)).to_string() == "{a,b,c}");
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        auto x = ElementSet(u, mask);
        CHECK(lower_approx(rel, succ, x).contains(3));   // d, by vacuous inclusion
        CHECK(!upper_approx(rel, succ, x).contains(3));  // d never meets anything
    }
}

TEST_CASE("lower and upper are dual through complement") {
    auto rel = worked_example();
    const auto& u = rel.universe();
    for (auto kind : all_kinds) {
        for (std::uint64_t mask = 0; mask < 16; ++mask) {
            auto x = ElementSet(u, mask);
            CHECK(lower_approx(rel, kind, x) == complement(upper_approx(rel, kind, complement(x))));
            CHECK(upper_approx(rel, kind, x) == complement(lower_approx(rel, kind, complement(x))));
        }
    }
}

TEST_CASE("both operators are monotone in the approximated set") {
    auto rel = worked_example();
    const auto& u = rel.universe();
    for (auto kind : all_kinds) {
        for (std::uint64_t lo = 0; lo < 16; ++lo) {
            for (std::uint64_t hi = lo; hi < 16; ++hi) {
                if ((lo & hi) != lo) continue;
                auto small = ElementSet(u, lo);
                auto large = ElementSet(u, hi);
                CHECK(lower_approx(rel, kind, small).is_subset_of(lower_approx(rel, kind, large)));
                CHECK(upper_approx(rel, kind, small).is_subset_of(upper_approx(rel, kind, large)));
            }
        }
    }
}

TEST_CASE("approximating a set from a different universe is rejected") {
    auto rel = worked_example();
    auto other = make_universe({"x", "y"});
    CHECK_THROWS_AS(lower_approx(rel, NeighborhoodKind::successor, ElementSet::empty(other)),
                    UniverseMismatch);
    CHECK_THROWS_AS(approximation_table(rel, ElementSet::full(other)), UniverseMismatch);
}
