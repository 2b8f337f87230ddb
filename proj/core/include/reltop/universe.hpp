#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "reltop/errors.hpp"

namespace reltop {

// A finite, non-empty, ordered universe of distinctly labeled elements.
// Element order is declaration order; all set output is rendered in it.
// Immutable after construction and safe to share across threads.
class Universe {
public:
    static constexpr std::size_t max_size = 64;

    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }

    // Index of a label; throws UnknownLabel.
    std::size_t index(std::string_view label) const;
    std::optional<std::size_t> find(std::string_view label) const;

    bool operator==(const Universe& other) const { return labels_ == other.labels_; }
    bool operator!=(const Universe& other) const { return !(*this == other); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> labels);

// Universe with labels "1".."n", used when enumerating abstract relations.
UniversePtr make_indexed_universe(std::size_t n);

// True when two handles denote the same universe (pointer or content equality).
inline bool same_universe(const UniversePtr& a, const UniversePtr& b) {
    return a == b || (a && b && *a == *b);
}

}  // namespace reltop
