#include "reltop/universe.hpp"

namespace reltop {

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw EmptyUniverse();
    if (labels_.size() > max_size) throw UniverseTooLarge(labels_.size());
    index_.reserve(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second) throw DuplicateLabel(labels_[i]);
    }
}

std::size_t Universe::index(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw UnknownLabel(std::string(label));
}

std::optional<std::size_t> Universe::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

UniversePtr make_universe(std::vector<std::string> labels) {
    return std::make_shared<const Universe>(std::move(labels));
}

UniversePtr make_indexed_universe(std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return std::make_shared<const Universe>(std::move(labels));
}

}  // namespace reltop
