#include "reltop/element_set.hpp"

#include <stdexcept>

namespace reltop {

ElementSet::ElementSet(UniversePtr universe, std::uint64_t bits)
    : universe_(std::move(universe)), bits_(bits) {
    if (!universe_) throw std::invalid_argument("ElementSet requires a universe");
    if (bits_ & ~full_mask(universe_->size()))
        throw std::invalid_argument("membership bits outside the universe");
}

ElementSet ElementSet::full(UniversePtr universe) {
    auto bits = full_mask(universe->size());
    return ElementSet(std::move(universe), bits);
}

ElementSet ElementSet::of(UniversePtr universe, std::initializer_list<std::string_view> labels) {
    std::uint64_t bits = 0;
    for (auto label : labels) bits |= std::uint64_t{1} << universe->index(label);
    return ElementSet(std::move(universe), bits);
}

ElementSet ElementSet::from_labels(UniversePtr universe, const std::vector<std::string>& labels) {
    std::uint64_t bits = 0;
    for (const auto& label : labels) bits |= std::uint64_t{1} << universe->index(label);
    return ElementSet(std::move(universe), bits);
}

bool ElementSet::contains(std::string_view label) const { return contains(universe_->index(label)); }

ElementSet ElementSet::operator|(const ElementSet& rhs) const {
    require_same_universe(rhs);
    return with_bits(bits_ | rhs.bits_);
}

ElementSet ElementSet::operator&(const ElementSet& rhs) const {
    require_same_universe(rhs);
    return with_bits(bits_ & rhs.bits_);
}

ElementSet ElementSet::operator-(const ElementSet& rhs) const {
    require_same_universe(rhs);
    return with_bits(bits_ & ~rhs.bits_);
}

ElementSet ElementSet::operator^(const ElementSet& rhs) const {
    require_same_universe(rhs);
    return with_bits(bits_ ^ rhs.bits_);
}

ElementSet ElementSet::operator~() const {
    return with_bits(~bits_ & full_mask(universe_->size()));
}

bool ElementSet::is_subset_of(const ElementSet& rhs) const {
    require_same_universe(rhs);
    return (bits_ & ~rhs.bits_) == 0;
}

bool ElementSet::operator==(const ElementSet& rhs) const {
    return same_universe(universe_, rhs.universe_) && bits_ == rhs.bits_;
}

std::vector<std::size_t> ElementSet::indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < universe_->size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::vector<std::string> ElementSet::labels() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < universe_->size(); ++i)
        if (contains(i)) out.push_back(universe_->label(i));
    return out;
}

std::string ElementSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < universe_->size(); ++i) {
        if (!contains(i)) continue;
        if (!first) out += ",";
        out += universe_->label(i);
        first = false;
    }
    out += "}";
    return out;
}

void ElementSet::require_same_universe(const ElementSet& rhs) const {
    if (!same_universe(universe_, rhs.universe_)) throw UniverseMismatch();
}

ElementSet complement(const ElementSet& set) { return ~set; }

bool canonical_mask_less(std::uint64_t a, std::uint64_t b) {
    auto ca = std::popcount(a);
    auto cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    if (a == b) return false;
    // Same cardinality: the set owning the lowest differing element comes first.
    std::uint64_t diff = a ^ b;
    return (a & (diff & -diff)) != 0;
}

}  // namespace reltop
