#include "reltop/relation.hpp"

#include <bit>

namespace reltop {

BinaryRelation::BinaryRelation(UniversePtr universe,
                               const std::vector<std::pair<std::string, std::string>>& pairs)
    : universe_(std::move(universe)), rows_(universe_->size(), 0) {
    for (const auto& [from, to] : pairs) {
        rows_[universe_->index(from)] |= std::uint64_t{1} << universe_->index(to);
    }
}

BinaryRelation::BinaryRelation(UniversePtr universe, std::vector<std::uint64_t> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {}

BinaryRelation BinaryRelation::from_bits(UniversePtr universe, std::uint64_t code) {
    std::size_t n = universe->size();
    if (n * n > 64) throw SizeOutOfRange(n, 1, 8);
    std::vector<std::uint64_t> rows(n);
    for (std::size_t x = 0; x < n; ++x) rows[x] = (code >> (x * n)) & full_mask(n);
    return BinaryRelation(std::move(universe), std::move(rows));
}

std::uint64_t BinaryRelation::to_bits() const {
    std::size_t n = rows_.size();
    if (n * n > 64) throw SizeOutOfRange(n, 1, 8);
    std::uint64_t code = 0;
    for (std::size_t x = 0; x < n; ++x) code |= rows_[x] << (x * n);
    return code;
}

std::uint64_t BinaryRelation::predecessor_bits(std::size_t y) const {
    std::uint64_t bits = 0;
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        bits |= ((rows_[x] >> y) & 1u) << x;
    }
    return bits;
}

std::size_t BinaryRelation::pair_count() const {
    std::size_t count = 0;
    for (auto row : rows_) count += static_cast<std::size_t>(std::popcount(row));
    return count;
}

std::vector<std::pair<std::string, std::string>> BinaryRelation::pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(pair_count());
    for (std::size_t x = 0; x < rows_.size(); ++x) {
        for (std::size_t y = 0; y < rows_.size(); ++y) {
            if (contains(x, y)) out.emplace_back(universe_->label(x), universe_->label(y));
        }
    }
    return out;
}

BinaryRelation BinaryRelation::transpose() const {
    std::vector<std::uint64_t> rows(rows_.size());
    for (std::size_t y = 0; y < rows_.size(); ++y) rows[y] = predecessor_bits(y);
    return BinaryRelation(universe_, std::move(rows));
}

bool BinaryRelation::operator==(const BinaryRelation& rhs) const {
    return same_universe(universe_, rhs.universe_) && rows_ == rhs.rows_;
}

BinaryRelation make_relation(UniversePtr universe,
                             const std::vector<std::pair<std::string, std::string>>& pairs) {
    return BinaryRelation(std::move(universe), pairs);
}

RelationProfile relation_profile(const BinaryRelation& relation) {
    std::size_t n = relation.size();
    RelationProfile profile;
    profile.serial = true;
    profile.inverse_serial = true;
    profile.reflexive = true;
    profile.symmetric = true;
    profile.transitive = true;

    std::uint64_t range = 0;
    for (std::size_t x = 0; x < n; ++x) {
        std::uint64_t row = relation.successor_bits(x);
        range |= row;
        if (row == 0) profile.serial = false;
        if (!((row >> x) & 1u)) profile.reflexive = false;
        if (row != relation.predecessor_bits(x)) profile.symmetric = false;

        // Everything reachable in two steps from x must already be a successor.
        std::uint64_t reach = 0;
        std::uint64_t rest = row;
        while (rest) {
            std::size_t y = static_cast<std::size_t>(std::countr_zero(rest));
            rest &= rest - 1;
            reach |= relation.successor_bits(y);
        }
        if (reach & ~row) profile.transitive = false;
    }
    profile.inverse_serial = range == full_mask(n);
    profile.preorder = profile.reflexive && profile.transitive;
    profile.tolerance = profile.reflexive && profile.symmetric;
    profile.equivalence = profile.tolerance && profile.transitive;
    return profile;
}

}  // namespace reltop
