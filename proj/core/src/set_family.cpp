#include "reltop/set_family.hpp"

#include <algorithm>

namespace reltop {

SetFamily::SetFamily(UniversePtr universe, std::vector<ElementSet> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
    for (const auto& member : members_) {
        if (!same_universe(member.universe(), universe_)) throw UniverseMismatch();
    }
    std::sort(members_.begin(), members_.end(), [](const ElementSet& a, const ElementSet& b) {
        return canonical_mask_less(a.bits(), b.bits());
    });
    members_.erase(std::unique(members_.begin(), members_.end(),
                               [](const ElementSet& a, const ElementSet& b) {
                                   return a.bits() == b.bits();
                               }),
                   members_.end());
}

SetFamily SetFamily::of(UniversePtr universe, std::initializer_list<std::uint64_t> masks) {
    std::vector<ElementSet> members;
    members.reserve(masks.size());
    for (auto mask : masks) members.emplace_back(universe, mask);
    return SetFamily(std::move(universe), std::move(members));
}

bool SetFamily::contains(const ElementSet& set) const {
    if (!same_universe(set.universe(), universe_)) throw UniverseMismatch();
    return contains_mask(set.bits());
}

bool SetFamily::contains_mask(std::uint64_t mask) const {
    return std::any_of(members_.begin(), members_.end(),
                       [mask](const ElementSet& m) { return m.bits() == mask; });
}

std::uint64_t SetFamily::union_bits() const {
    std::uint64_t bits = 0;
    for (const auto& member : members_) bits |= member.bits();
    return bits;
}

bool SetFamily::operator==(const SetFamily& rhs) const {
    if (!same_universe(universe_, rhs.universe_)) return false;
    if (members_.size() != rhs.members_.size()) return false;
    for (std::size_t i = 0; i < members_.size(); ++i)
        if (members_[i].bits() != rhs.members_[i].bits()) return false;
    return true;
}

std::string SetFamily::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i) out += ", ";
        out += members_[i].to_string();
    }
    out += "}";
    return out;
}

}  // namespace reltop
