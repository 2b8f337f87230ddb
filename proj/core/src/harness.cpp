#include "reltop/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <exception>
#include <numeric>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

#include "reltop/element_set.hpp"
#include "reltop/neighborhood.hpp"
#include "reltop/topology.hpp"

namespace reltop::harness {

namespace {

using ordered_json = nlohmann::ordered_json;

// Subsets of an n-element universe in canonical order (cardinality, then
// lexicographic by member indices); "first counterexample" means first in
// this order.
const std::vector<std::uint64_t>& canonical_order(std::size_t n) {
    static const std::array<std::vector<std::uint64_t>, 9> tables = [] {
        std::array<std::vector<std::uint64_t>, 9> all;
        for (std::size_t n = 0; n <= 8; ++n) {
            auto& order = all[n];
            order.resize(std::size_t{1} << n);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), canonical_mask_less);
        }
        return all;
    }();
    return tables.at(n);
}

// Everything one relation's checks need, with the expensive pieces
// (approximation tables, families, topologies) built once on first use and
// shared by every proposition that touches the relation.
struct Ctx {
    BinaryRelation rel;
    std::size_t n = 0;
    std::uint64_t full = 0;
    RelationProfile profile;
    std::array<std::array<std::uint64_t, 8>, 4> nbr{};
    std::array<std::uint64_t, 4> family_union{};
    const std::vector<std::uint64_t>* canon = nullptr;

    explicit Ctx(BinaryRelation relation) : rel(std::move(relation)) { init(); }

    void reset(BinaryRelation relation) {
        rel = std::move(relation);
        init();
    }

    bool cover(int k) const { return family_union[static_cast<std::size_t>(k)] == full; }

    const std::vector<std::uint64_t>& lower(int k) {
        ensure_approx(k);
        return lower_[static_cast<std::size_t>(k)];
    }
    const std::vector<std::uint64_t>& upper(int k) {
        ensure_approx(k);
        return upper_[static_cast<std::size_t>(k)];
    }

    // Distinct neighborhood masks, ascending.
    const std::vector<std::uint64_t>& fam(int k) {
        auto ki = static_cast<std::size_t>(k);
        if (!fam_ready_[ki]) {
            auto& f = fam_[ki];
            f.assign(nbr[ki].begin(), nbr[ki].begin() + static_cast<std::ptrdiff_t>(n));
            std::sort(f.begin(), f.end());
            f.erase(std::unique(f.begin(), f.end()), f.end());
            fam_ready_[ki] = true;
        }
        return fam_[ki];
    }

    // Open-set masks of the induced topology, ascending. Callers only ask
    // under hypotheses that guarantee the family covers the universe.
    const std::vector<std::uint64_t>& topo(int k) {
        auto ki = static_cast<std::size_t>(k);
        if (!topo_ready_[ki]) {
            build_topology(fam(k), topo_[ki]);
            topo_ready_[ki] = true;
        }
        return topo_[ki];
    }

    std::string mask_str(std::uint64_t mask) const {
        return ElementSet(rel.universe(), mask).to_string();
    }
    const std::string& label(std::size_t x) const { return rel.universe()->label(x); }

private:
    void init() {
        n = rel.size();
        full = full_mask(n);
        profile = relation_profile(rel);
        for (std::size_t k = 0; k < 4; ++k) {
            family_union[k] = 0;
            for (std::size_t x = 0; x < n; ++x) {
                nbr[k][x] = neighborhood_bits(rel, all_kinds[k], x);
                family_union[k] |= nbr[k][x];
            }
        }
        approx_ready_.fill(false);
        fam_ready_.fill(false);
        topo_ready_.fill(false);
        canon = &canonical_order(n);
    }

    void ensure_approx(int k) {
        auto ki = static_cast<std::size_t>(k);
        if (approx_ready_[ki]) return;
        std::size_t subsets = std::size_t{1} << n;
        auto& lo = lower_[ki];
        auto& up = upper_[ki];
        lo.assign(subsets, 0);
        up.assign(subsets, 0);
        for (std::uint64_t m = 0; m < subsets; ++m) {
            std::uint64_t lo_bits = 0;
            std::uint64_t up_bits = 0;
            for (std::size_t x = 0; x < n; ++x) {
                std::uint64_t nb = nbr[ki][x];
                lo_bits |= static_cast<std::uint64_t>((nb & ~m) == 0) << x;
                up_bits |= static_cast<std::uint64_t>((nb & m) != 0) << x;
            }
            lo[m] = lo_bits;
            up[m] = up_bits;
        }
        approx_ready_[ki] = true;
    }

    // Pairwise union/intersection fixpoint from the family plus {} and U;
    // membership tracked in a 2^n-entry byte table (n <= 8).
    void build_topology(const std::vector<std::uint64_t>& family, std::vector<std::uint64_t>& out) {
        std::size_t subsets = std::size_t{1} << n;
        std::fill_n(present_.begin(), subsets, static_cast<unsigned char>(0));
        out.clear();
        auto push = [&](std::uint64_t mask) {
            if (!present_[mask]) {
                present_[mask] = 1;
                out.push_back(mask);
            }
        };
        push(0);
        push(full);
        for (auto mask : family) push(mask);
        for (std::size_t i = 1; i < out.size(); ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                push(out[i] | out[j]);
                push(out[i] & out[j]);
            }
        }
        std::sort(out.begin(), out.end());
    }

    std::array<std::vector<std::uint64_t>, 4> lower_, upper_;
    std::array<bool, 4> approx_ready_{};
    std::array<std::vector<std::uint64_t>, 4> fam_;
    std::array<bool, 4> fam_ready_{};
    std::array<std::vector<std::uint64_t>, 4> topo_;
    std::array<bool, 4> topo_ready_{};
    std::array<unsigned char, 256> present_{};
};

std::string tok(int k) { return std::string(kind_token(all_kinds[static_cast<std::size_t>(k)])); }

Counterexample cex(const Ctx& c, const char* check,
                   std::vector<std::pair<std::string, std::string>> witnesses, std::string observed,
                   std::string expected) {
    return Counterexample{check, c.rel, std::move(witnesses), std::move(observed),
                          std::move(expected)};
}

// ---- hypotheses ------------------------------------------------------------

bool hyp_true(const Ctx&) { return true; }
bool hyp_reflexive(const Ctx& c) { return c.profile.reflexive; }
bool hyp_symmetric(const Ctx& c) { return c.profile.symmetric; }
bool hyp_transitive(const Ctx& c) { return c.profile.transitive; }
bool hyp_serial(const Ctx& c) { return c.profile.serial; }
bool hyp_inverse_serial(const Ctx& c) { return c.profile.inverse_serial; }
bool hyp_serial_or_inverse(const Ctx& c) { return c.profile.serial || c.profile.inverse_serial; }
bool hyp_sym_and_serial(const Ctx& c) { return c.profile.symmetric && c.profile.serial; }
bool hyp_sym_and_either(const Ctx& c) {
    return c.profile.symmetric && (c.profile.serial || c.profile.inverse_serial);
}
bool hyp_tolerance(const Ctx& c) { return c.profile.tolerance; }
bool hyp_equivalence(const Ctx& c) { return c.profile.equivalence; }
bool hyp_preorder(const Ctx& c) { return c.profile.preorder; }
bool hyp_cover_s(const Ctx& c) { return c.cover(0); }
bool hyp_cover_p(const Ctx& c) { return c.cover(1); }
bool hyp_cover_sp(const Ctx& c) { return c.cover(2); }
bool hyp_cover_su(const Ctx& c) { return c.cover(3); }

// ---- approximation-law checks ----------------------------------------------

std::optional<Counterexample> run_duality(Ctx& c) {
    for (int k = 0; k < 4; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        for (auto m : *c.canon) {
            std::uint64_t dual = c.full & ~up[c.full & ~m];
            if (lo[m] != dual)
                return cex(c, "duality", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "lower(X) = " + c.mask_str(lo[m]),
                           "complement(upper(complement(X))) = " + c.mask_str(dual));
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_boundary(Ctx& c) {
    for (int k = 0; k < 4; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        if (lo[c.full] != c.full)
            return cex(c, "boundary", {{"kind", tok(k)}, {"X", c.mask_str(c.full)}},
                       "lower(U) = " + c.mask_str(lo[c.full]), "U = " + c.mask_str(c.full));
        if (up[0] != 0)
            return cex(c, "boundary", {{"kind", tok(k)}, {"X", "{}"}},
                       "upper({}) = " + c.mask_str(up[0]), "{}");
    }
    return std::nullopt;
}

std::optional<Counterexample> run_distributivity(Ctx& c) {
    for (int k = 0; k < 4; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        for (auto mx : *c.canon) {
            for (auto my : *c.canon) {
                std::uint64_t lhs = lo[mx & my];
                std::uint64_t rhs = lo[mx] & lo[my];
                if (lhs != rhs)
                    return cex(c, "distributivity",
                               {{"kind", tok(k)}, {"X", c.mask_str(mx)}, {"Y", c.mask_str(my)}},
                               "lower(X intersect Y) = " + c.mask_str(lhs),
                               "lower(X) intersect lower(Y) = " + c.mask_str(rhs));
                std::uint64_t ulhs = up[mx | my];
                std::uint64_t urhs = up[mx] | up[my];
                if (ulhs != urhs)
                    return cex(c, "distributivity",
                               {{"kind", tok(k)}, {"X", c.mask_str(mx)}, {"Y", c.mask_str(my)}},
                               "upper(X union Y) = " + c.mask_str(ulhs),
                               "upper(X) union upper(Y) = " + c.mask_str(urhs));
            }
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_bounds(Ctx& c) {
    for (int k = 0; k < 4; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        for (auto m : *c.canon) {
            if (lo[m] & ~m)
                return cex(c, "bounds", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "lower(X) = " + c.mask_str(lo[m]), "subset of X = " + c.mask_str(m));
            if (m & ~up[m])
                return cex(c, "bounds", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "upper(X) = " + c.mask_str(up[m]), "superset of X = " + c.mask_str(m));
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_galois(Ctx& c) {
    for (int k = 0; k < 4; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        for (auto m : *c.canon) {
            std::uint64_t lu = lo[up[m]];
            if (m & ~lu)
                return cex(c, "galois", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "lower(upper(X)) = " + c.mask_str(lu),
                           "superset of X = " + c.mask_str(m));
            std::uint64_t ul = up[lo[m]];
            if (ul & ~m)
                return cex(c, "galois", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "upper(lower(X)) = " + c.mask_str(ul), "subset of X = " + c.mask_str(m));
        }
    }
    return std::nullopt;
}

// Transitivity transfers to the transpose and to the intersection with the
// transpose, but not to the union; the union kind is deliberately excluded.
std::optional<Counterexample> run_idempotence(Ctx& c) {
    for (int k = 0; k < 3; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        for (auto m : *c.canon) {
            std::uint64_t l = lo[m];
            if (l & ~lo[l])
                return cex(c, "idempotence", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "lower(X) = " + c.mask_str(l),
                           "subset of lower(lower(X)) = " + c.mask_str(lo[l]));
            std::uint64_t u = up[m];
            if (up[u] & ~u)
                return cex(c, "idempotence", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "upper(upper(X)) = " + c.mask_str(up[u]),
                           "subset of upper(X) = " + c.mask_str(u));
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_sandwich(Ctx& c) {
    for (std::size_t x = 0; x < c.n; ++x) {
        std::uint64_t s = c.nbr[0][x];
        std::uint64_t p = c.nbr[1][x];
        std::uint64_t sp = c.nbr[2][x];
        std::uint64_t su = c.nbr[3][x];
        const char* broken = nullptr;
        std::uint64_t inner = 0, outer = 0;
        if (sp & ~s) { broken = "s-and-p inside s"; inner = sp; outer = s; }
        else if (sp & ~p) { broken = "s-and-p inside p"; inner = sp; outer = p; }
        else if (s & ~su) { broken = "s inside s-or-p"; inner = s; outer = su; }
        else if (p & ~su) { broken = "p inside s-or-p"; inner = p; outer = su; }
        if (broken)
            return cex(c, "sandwich", {{"x", c.label(x)}},
                       std::string(broken) + " fails: " + c.mask_str(inner) + " vs " +
                           c.mask_str(outer),
                       "pointwise containment");
    }
    return std::nullopt;
}

// ---- cover characterizations -----------------------------------------------

std::string property_summary(const Ctx& c) {
    std::string out = "serial=";
    out += c.profile.serial ? "true" : "false";
    out += " inverse_serial=";
    out += c.profile.inverse_serial ? "true" : "false";
    out += " symmetric=";
    out += c.profile.symmetric ? "true" : "false";
    return out;
}

std::optional<Counterexample> cover_forward(Ctx& c, int k, const char* check) {
    if (c.cover(k)) return std::nullopt;
    return cex(c, check, {{"kind", tok(k)}},
               "family union = " + c.mask_str(c.family_union[static_cast<std::size_t>(k)]),
               "cover of U = " + c.mask_str(c.full));
}

std::optional<Counterexample> cover_converse(Ctx& c, bool property, const char* expected, int k) {
    if (property) return std::nullopt;
    return cex(c, "converse", {{"kind", tok(k)}}, property_summary(c), expected);
}

std::optional<Counterexample> run_p08_forward(Ctx& c) { return cover_forward(c, 0, "forward"); }
std::optional<Counterexample> run_p08_converse(Ctx& c) {
    return cover_converse(c, c.profile.inverse_serial, "inverse serial", 0);
}
std::optional<Counterexample> run_p09_forward(Ctx& c) { return cover_forward(c, 1, "forward"); }
std::optional<Counterexample> run_p09_converse(Ctx& c) {
    return cover_converse(c, c.profile.serial, "serial", 1);
}
std::optional<Counterexample> run_p10_forward(Ctx& c) { return cover_forward(c, 2, "forward"); }
std::optional<Counterexample> run_p10_converse(Ctx& c) {
    return cover_converse(c, hyp_sym_and_either(c), "symmetric and (serial or inverse serial)", 2);
}
std::optional<Counterexample> run_p11_forward(Ctx& c) { return cover_forward(c, 3, "forward"); }
std::optional<Counterexample> run_p11_converse(Ctx& c) {
    return cover_converse(c, hyp_serial_or_inverse(c), "serial or inverse serial", 3);
}

std::optional<Counterexample> run_serial_equivalence(Ctx& c) {
    if (c.profile.serial == c.profile.inverse_serial) return std::nullopt;
    return cex(c, "equivalence", {}, property_summary(c),
               "serial and inverse serial coincide for symmetric relations");
}

// ---- collapse and ordering checks -------------------------------------------

std::optional<Counterexample> run_family_collapse(Ctx& c) {
    for (int k = 1; k < 4; ++k) {
        if (c.fam(0) != c.fam(k))
            return cex(c, "families", {{"kinds", "s vs " + tok(k)}},
                       "family(" + tok(k) + ") has " + std::to_string(c.fam(k).size()) +
                           " member(s)",
                       "all four neighborhood families equal");
    }
    return std::nullopt;
}

std::optional<Counterexample> run_topology_collapse(Ctx& c) {
    for (int k = 1; k < 4; ++k) {
        if (c.topo(0) != c.topo(k))
            return cex(c, "topologies", {{"kinds", "s vs " + tok(k)}},
                       "topology(" + tok(k) + ") has " + std::to_string(c.topo(k).size()) +
                           " open(s)",
                       "all four induced topologies equal");
    }
    return std::nullopt;
}

std::optional<Counterexample> run_quasi_discrete(Ctx& c) {
    // For an equivalence the distinct successor neighborhoods are the classes.
    const auto& classes = c.fam(0);
    std::vector<std::uint64_t> unions;
    unions.reserve(std::size_t{1} << classes.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << classes.size()); ++pick) {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if ((pick >> i) & 1u) mask |= classes[i];
        unions.push_back(mask);
    }
    std::sort(unions.begin(), unions.end());
    unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
    if (unions != c.topo(0))
        return cex(c, "quasi-discrete", {},
                   "opens = " + std::to_string(c.topo(0).size()) + " set(s)",
                   "opens = unions of equivalence classes (" + std::to_string(unions.size()) +
                       " set(s))");
    for (auto open : c.topo(0)) {
        std::uint64_t closed = c.full & ~open;
        if (!std::binary_search(c.topo(0).begin(), c.topo(0).end(), closed))
            return cex(c, "quasi-discrete", {{"open", c.mask_str(open)}},
                       "complement " + c.mask_str(closed) + " is not open",
                       "every open set is also closed");
    }
    return std::nullopt;
}

bool refines_masks(const std::vector<std::uint64_t>& coarse,
                   const std::vector<std::uint64_t>& fine) {
    for (auto a : coarse) {
        bool contained = false;
        for (auto b : fine) {
            if ((a & ~b) == 0) {
                contained = true;
                break;
            }
        }
        if (!contained) return false;
    }
    return true;
}

// Kind pairs whose orderings the reflexive / serial / inverse-serial claims
// assert: (coarse, fine).
constexpr std::array<std::pair<int, int>, 4> reflexive_pairs = {
    {{2, 0}, {2, 1}, {0, 3}, {1, 3}}};

std::optional<Counterexample> family_refinement(Ctx& c, const char* check,
                                                const std::pair<int, int>* pairs,
                                                std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        auto [lo, hi] = pairs[i];
        if (!refines_masks(c.fam(lo), c.fam(hi)))
            return cex(c, check, {{"coarse-kind", tok(lo)}, {"fine-kind", tok(hi)}},
                       "a member of family(" + tok(lo) + ") fits inside no member of family(" +
                           tok(hi) + ")",
                       "family(" + tok(lo) + ") refines family(" + tok(hi) + ")");
    }
    return std::nullopt;
}

std::optional<Counterexample> topology_subset(Ctx& c, const char* check,
                                              const std::pair<int, int>* pairs,
                                              std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        auto [lo, hi] = pairs[i];
        if (!std::includes(c.topo(hi).begin(), c.topo(hi).end(), c.topo(lo).begin(),
                           c.topo(lo).end())) {
            std::uint64_t witness = 0;
            for (auto open : c.topo(lo)) {
                if (!std::binary_search(c.topo(hi).begin(), c.topo(hi).end(), open)) {
                    witness = open;
                    break;
                }
            }
            return cex(c, check, {{"coarse-kind", tok(lo)}, {"fine-kind", tok(hi)}},
                       "open " + c.mask_str(witness) + " of topology(" + tok(lo) +
                           ") is not open in topology(" + tok(hi) + ")",
                       "opens(" + tok(lo) + ") subset of opens(" + tok(hi) + ")");
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> topology_refine(Ctx& c, const char* check,
                                              const std::pair<int, int>* pairs,
                                              std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) {
        auto [lo, hi] = pairs[i];
        if (!refines_masks(c.topo(lo), c.topo(hi)))
            return cex(c, check, {{"coarse-kind", tok(lo)}, {"fine-kind", tok(hi)}},
                       "an open of topology(" + tok(lo) + ") fits inside no open of topology(" +
                           tok(hi) + ")",
                       "topology(" + tok(lo) + ") refines topology(" + tok(hi) + ")");
    }
    return std::nullopt;
}

constexpr std::pair<int, int> serial_pair{1, 3};
constexpr std::pair<int, int> inverse_pair{0, 3};

std::optional<Counterexample> run_p14_refl_fam(Ctx& c) {
    return family_refinement(c, "reflexive-families", reflexive_pairs.data(),
                             reflexive_pairs.size());
}
std::optional<Counterexample> run_p14_refl_topo_sub(Ctx& c) {
    return topology_subset(c, "reflexive-topologies-subset", reflexive_pairs.data(),
                           reflexive_pairs.size());
}
std::optional<Counterexample> run_p14_refl_topo_ref(Ctx& c) {
    return topology_refine(c, "reflexive-topologies-refine", reflexive_pairs.data(),
                           reflexive_pairs.size());
}
std::optional<Counterexample> run_p14_serial_fam(Ctx& c) {
    return family_refinement(c, "serial-families", &serial_pair, 1);
}
std::optional<Counterexample> run_p14_serial_topo_sub(Ctx& c) {
    return topology_subset(c, "serial-topologies-subset", &serial_pair, 1);
}
std::optional<Counterexample> run_p14_serial_topo_ref(Ctx& c) {
    return topology_refine(c, "serial-topologies-refine", &serial_pair, 1);
}
std::optional<Counterexample> run_p14_inv_fam(Ctx& c) {
    return family_refinement(c, "inverse-serial-families", &inverse_pair, 1);
}
std::optional<Counterexample> run_p14_inv_topo_sub(Ctx& c) {
    return topology_subset(c, "inverse-serial-topologies-subset", &inverse_pair, 1);
}
std::optional<Counterexample> run_p14_inv_topo_ref(Ctx& c) {
    return topology_refine(c, "inverse-serial-topologies-refine", &inverse_pair, 1);
}

// ---- approximation chains ----------------------------------------------------

struct ChainLink {
    int from_kind;
    bool from_lower;  // false = upper, true = lower; from/to of one inclusion
    int to_kind;
    bool to_lower;
};

std::optional<Counterexample> chain_check(Ctx& c, const char* check, const ChainLink* links,
                                          std::size_t count, bool through_x, int x_kind) {
    auto value = [&](int kind, bool is_lower, std::uint64_t m) {
        return is_lower ? c.lower(kind)[m] : c.upper(kind)[m];
    };
    auto name = [&](int kind, bool is_lower) {
        return std::string(is_lower ? "lower" : "upper") + "(" + tok(kind) + ")";
    };
    for (auto m : *c.canon) {
        for (std::size_t i = 0; i < count; ++i) {
            std::uint64_t a = value(links[i].from_kind, links[i].from_lower, m);
            std::uint64_t b = value(links[i].to_kind, links[i].to_lower, m);
            if (a & ~b)
                return cex(c, check, {{"X", c.mask_str(m)}},
                           name(links[i].from_kind, links[i].from_lower) + " = " + c.mask_str(a),
                           "subset of " + name(links[i].to_kind, links[i].to_lower) + " = " +
                               c.mask_str(b));
        }
        if (through_x) {
            std::uint64_t lo = c.lower(x_kind)[m];
            std::uint64_t up = c.upper(x_kind)[m];
            if (lo & ~m)
                return cex(c, check, {{"X", c.mask_str(m)}},
                           "lower(" + tok(x_kind) + ") = " + c.mask_str(lo),
                           "subset of X = " + c.mask_str(m));
            if (m & ~up)
                return cex(c, check, {{"X", c.mask_str(m)}},
                           "upper(" + tok(x_kind) + ") = " + c.mask_str(up),
                           "superset of X = " + c.mask_str(m));
        }
    }
    return std::nullopt;
}

// Unconditional inclusion chains between the four kinds.
constexpr std::array<ChainLink, 8> p15_links = {{
    {3, true, 0, true},   // lower s-or-p inside lower s
    {0, true, 2, true},   // lower s inside lower s-and-p
    {3, true, 1, true},   // lower s-or-p inside lower p
    {1, true, 2, true},   // lower p inside lower s-and-p
    {2, false, 0, false},  // upper s-and-p inside upper s
    {0, false, 3, false},  // upper s inside upper s-or-p
    {2, false, 1, false},  // upper s-and-p inside upper p
    {1, false, 3, false},  // upper p inside upper s-or-p
}};

std::optional<Counterexample> run_chains(Ctx& c) {
    return chain_check(c, "chains", p15_links.data(), p15_links.size(), false, 0);
}

std::optional<Counterexample> lower_upper_check(Ctx& c, int k) {
    const auto& lo = c.lower(k);
    const auto& up = c.upper(k);
    for (auto m : *c.canon) {
        if (lo[m] & ~up[m])
            return cex(c, "lower-upper", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                       "lower(X) = " + c.mask_str(lo[m]),
                       "subset of upper(X) = " + c.mask_str(up[m]));
    }
    return std::nullopt;
}

constexpr std::array<ChainLink, 3> p16_links = {{
    {3, true, 0, true},    // lower s-or-p inside lower s
    {0, true, 0, false},   // lower s inside upper s
    {0, false, 3, false},  // upper s inside upper s-or-p
}};
constexpr std::array<ChainLink, 3> p17_links = {{
    {3, true, 1, true},
    {1, true, 1, false},
    {1, false, 3, false},
}};

std::optional<Counterexample> run_p16_lower_upper(Ctx& c) { return lower_upper_check(c, 0); }
std::optional<Counterexample> run_p16_chain(Ctx& c) {
    return chain_check(c, "chain", p16_links.data(), p16_links.size(), false, 0);
}
std::optional<Counterexample> run_p17_lower_upper(Ctx& c) { return lower_upper_check(c, 1); }
std::optional<Counterexample> run_p17_chain(Ctx& c) {
    return chain_check(c, "chain", p17_links.data(), p17_links.size(), false, 0);
}
std::optional<Counterexample> run_p18_lower_upper(Ctx& c) { return lower_upper_check(c, 2); }

std::optional<Counterexample> run_p19_sandwich(Ctx& c) {
    for (int k = 0; k < 4; ++k) {
        const auto& lo = c.lower(k);
        const auto& up = c.upper(k);
        for (auto m : *c.canon) {
            if (lo[m] & ~m)
                return cex(c, "sandwich", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "lower(X) = " + c.mask_str(lo[m]), "subset of X = " + c.mask_str(m));
            if (m & ~up[m])
                return cex(c, "sandwich", {{"kind", tok(k)}, {"X", c.mask_str(m)}},
                           "upper(X) = " + c.mask_str(up[m]), "superset of X = " + c.mask_str(m));
        }
    }
    return std::nullopt;
}

constexpr std::array<ChainLink, 4> p19_s_links = {{
    {3, true, 0, true},    // lower s-or-p inside lower s
    {0, true, 2, true},    // lower s inside lower s-and-p
    {2, false, 0, false},  // upper s-and-p inside upper s
    {0, false, 3, false},  // upper s inside upper s-or-p
}};
constexpr std::array<ChainLink, 4> p19_p_links = {{
    {3, true, 1, true},
    {1, true, 2, true},
    {2, false, 1, false},
    {1, false, 3, false},
}};

std::optional<Counterexample> run_p19_chain_s(Ctx& c) {
    return chain_check(c, "chain-s", p19_s_links.data(), p19_s_links.size(), true, 2);
}
std::optional<Counterexample> run_p19_chain_p(Ctx& c) {
    return chain_check(c, "chain-p", p19_p_links.data(), p19_p_links.size(), true, 2);
}

std::optional<Counterexample> run_p20_lower_collapse(Ctx& c) {
    const auto& base = c.lower(0);
    for (int k = 1; k < 4; ++k) {
        const auto& other = c.lower(k);
        for (auto m : *c.canon) {
            if (base[m] != other[m])
                return cex(c, "lower-collapse", {{"kinds", "s vs " + tok(k)}, {"X", c.mask_str(m)}},
                           "lower(" + tok(k) + ") = " + c.mask_str(other[m]),
                           "lower(s) = " + c.mask_str(base[m]));
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_p20_upper_collapse(Ctx& c) {
    const auto& base = c.upper(0);
    for (int k = 1; k < 4; ++k) {
        const auto& other = c.upper(k);
        for (auto m : *c.canon) {
            if (base[m] != other[m])
                return cex(c, "upper-collapse", {{"kinds", "s vs " + tok(k)}, {"X", c.mask_str(m)}},
                           "upper(" + tok(k) + ") = " + c.mask_str(other[m]),
                           "upper(s) = " + c.mask_str(base[m]));
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_p20_bounds(Ctx& c) {
    const auto& lo = c.lower(0);
    const auto& up = c.upper(0);
    for (auto m : *c.canon) {
        if ((lo[m] & ~m) || (m & ~up[m]))
            return cex(c, "bounds", {{"X", c.mask_str(m)}},
                       "lower = " + c.mask_str(lo[m]) + ", upper = " + c.mask_str(up[m]),
                       "lower(X) subset of X subset of upper(X)");
    }
    return std::nullopt;
}

// ---- pointwise inclusion vs family refinement --------------------------------

bool pointwise_included(const Ctx& c, int i, int j) {
    for (std::size_t x = 0; x < c.n; ++x)
        if (c.nbr[static_cast<std::size_t>(i)][x] & ~c.nbr[static_cast<std::size_t>(j)][x])
            return false;
    return true;
}

std::optional<Counterexample> run_p21_forward(Ctx& c) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (pointwise_included(c, i, j) && !refines_masks(c.fam(i), c.fam(j)))
                return cex(c, "forward", {{"from-kind", tok(i)}, {"to-kind", tok(j)}},
                           "pointwise inclusion holds but the family refinement fails",
                           "pointwise inclusion implies family refinement");
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> run_p21_converse(Ctx& c) {
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            if (!refines_masks(c.fam(i), c.fam(j)) || pointwise_included(c, i, j)) continue;
            std::size_t witness = 0;
            for (std::size_t x = 0; x < c.n; ++x) {
                if (c.nbr[static_cast<std::size_t>(i)][x] &
                    ~c.nbr[static_cast<std::size_t>(j)][x]) {
                    witness = x;
                    break;
                }
            }
            return cex(c, "converse",
                       {{"from-kind", tok(i)}, {"to-kind", tok(j)}, {"x", c.label(witness)}},
                       "family refinement holds but N(" + c.label(witness) + ") = " +
                           c.mask_str(c.nbr[static_cast<std::size_t>(i)][witness]) +
                           " is not inside " +
                           c.mask_str(c.nbr[static_cast<std::size_t>(j)][witness]),
                       "family refinement implies pointwise inclusion");
        }
    }
    return std::nullopt;
}

// ---- base conditions under preorders ------------------------------------------

std::optional<Counterexample> base_check(Ctx& c, int k, const char* check) {
    const auto& family = c.fam(k);
    // B1: the family covers U (guaranteed here: preorders are reflexive).
    if (!c.cover(k))
        return cex(c, check, {{"kind", tok(k)}},
                   "family union = " + c.mask_str(c.family_union[static_cast<std::size_t>(k)]),
                   "covers U");
    // B2: points in pairwise intersections are witnessed by an inner member.
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i; j < family.size(); ++j) {
            std::uint64_t meet = family[i] & family[j];
            std::uint64_t rest = meet;
            while (rest) {
                std::uint64_t x_bit = rest & (0 - rest);
                rest &= rest - 1;
                bool witnessed = false;
                for (auto z : family) {
                    if ((z & x_bit) && (z & ~meet) == 0) {
                        witnessed = true;
                        break;
                    }
                }
                if (!witnessed) {
                    auto x = static_cast<std::size_t>(std::countr_zero(x_bit));
                    return cex(c, check, {{"kind", tok(k)}, {"x", c.label(x)}},
                               "no member contains " + c.label(x) + " inside " + c.mask_str(meet),
                               "base condition B2");
                }
            }
        }
    }
    // The family must be a base of its own generated topology: every open is a
    // union of family members.
    for (auto open : c.topo(k)) {
        std::uint64_t acc = 0;
        for (auto b : family)
            if ((b & ~open) == 0) acc |= b;
        if (acc != open)
            return cex(c, check, {{"kind", tok(k)}, {"open", c.mask_str(open)}},
                       "union of inner members = " + c.mask_str(acc),
                       "open set rebuilt from family members");
    }
    return std::nullopt;
}

std::optional<Counterexample> run_p22_s(Ctx& c) { return base_check(c, 0, "successor"); }
std::optional<Counterexample> run_p22_p(Ctx& c) { return base_check(c, 1, "predecessor"); }
std::optional<Counterexample> run_p22_sp(Ctx& c) { return base_check(c, 2, "succ-and-pred"); }
std::optional<Counterexample> run_p22_su(Ctx& c) { return base_check(c, 3, "succ-or-pred"); }

// ---- registry ------------------------------------------------------------------

struct CheckImpl {
    CheckSpec spec;
    bool (*hyp)(const Ctx&);
    std::optional<Counterexample> (*run)(Ctx&);
};

const std::array<std::vector<CheckImpl>, proposition_count>& registry() {
    static const std::array<std::vector<CheckImpl>, proposition_count> table = {{
        /* P01 */ {{{"duality", true}, hyp_true, run_duality}},
        /* P02 */ {{{"boundary", true}, hyp_true, run_boundary}},
        /* P03 */ {{{"distributivity", true}, hyp_true, run_distributivity}},
        /* P04 */ {{{"bounds", true}, hyp_reflexive, run_bounds}},
        /* P05 */ {{{"galois", true}, hyp_symmetric, run_galois}},
        /* P06 */ {{{"idempotence", true}, hyp_transitive, run_idempotence}},
        /* P07 */ {{{"sandwich", true}, hyp_true, run_sandwich}},
        /* P08 */
        {{{"forward", true}, hyp_inverse_serial, run_p08_forward},
         {{"converse", true}, hyp_cover_s, run_p08_converse}},
        /* P09 */
        {{{"forward", true}, hyp_serial, run_p09_forward},
         {{"converse", true}, hyp_cover_p, run_p09_converse}},
        /* P10 */
        {{{"forward", true}, hyp_sym_and_either, run_p10_forward},
         {{"converse", false}, hyp_cover_sp, run_p10_converse}},
        /* P11 */
        {{{"forward", true}, hyp_serial_or_inverse, run_p11_forward},
         {{"converse", false}, hyp_cover_su, run_p11_converse}},
        /* P12 */ {{{"equivalence", true}, hyp_symmetric, run_serial_equivalence}},
        /* P13 */
        {{{"families", true}, hyp_sym_and_serial, run_family_collapse},
         {{"topologies", true}, hyp_sym_and_serial, run_topology_collapse},
         {{"quasi-discrete", true}, hyp_equivalence, run_quasi_discrete}},
        /* P14 */
        {{{"reflexive-families", true}, hyp_reflexive, run_p14_refl_fam},
         {{"reflexive-topologies-subset", false}, hyp_reflexive, run_p14_refl_topo_sub},
         {{"reflexive-topologies-refine", false}, hyp_reflexive, run_p14_refl_topo_ref},
         {{"serial-families", true}, hyp_serial, run_p14_serial_fam},
         {{"serial-topologies-subset", false}, hyp_serial, run_p14_serial_topo_sub},
         {{"serial-topologies-refine", false}, hyp_serial, run_p14_serial_topo_ref},
         {{"inverse-serial-families", true}, hyp_inverse_serial, run_p14_inv_fam},
         {{"inverse-serial-topologies-subset", false}, hyp_inverse_serial, run_p14_inv_topo_sub},
         {{"inverse-serial-topologies-refine", false}, hyp_inverse_serial, run_p14_inv_topo_ref}},
        /* P15 */ {{{"chains", true}, hyp_true, run_chains}},
        /* P16 */
        {{{"lower-upper", true}, hyp_serial, run_p16_lower_upper},
         {{"chain", true}, hyp_serial, run_p16_chain}},
        /* P17 */
        {{{"lower-upper", true}, hyp_inverse_serial, run_p17_lower_upper},
         {{"chain", true}, hyp_inverse_serial, run_p17_chain}},
        /* P18 */ {{{"lower-upper", true}, hyp_sym_and_either, run_p18_lower_upper}},
        /* P19 */
        {{{"sandwich", true}, hyp_reflexive, run_p19_sandwich},
         {{"chain-s", true}, hyp_reflexive, run_p19_chain_s},
         {{"chain-p", true}, hyp_reflexive, run_p19_chain_p}},
        /* P20 */
        {{{"lower-collapse", true}, hyp_tolerance, run_p20_lower_collapse},
         {{"upper-collapse", true}, hyp_tolerance, run_p20_upper_collapse},
         {{"bounds", true}, hyp_tolerance, run_p20_bounds}},
        /* P21 */
        {{{"forward", true}, hyp_true, run_p21_forward},
         {{"converse", false}, hyp_true, run_p21_converse}},
        /* P22 */
        {{{"successor", true}, hyp_preorder, run_p22_s},
         {{"predecessor", true}, hyp_preorder, run_p22_p},
         {{"succ-and-pred", true}, hyp_preorder, run_p22_sp},
         {{"succ-or-pred", false}, hyp_preorder, run_p22_su}},
    }};
    return table;
}

std::size_t prop_index(PropositionId id) { return static_cast<std::size_t>(id); }

}  // namespace

std::string to_string(PropositionId id) {
    auto number = prop_index(id) + 1;
    return number < 10 ? "P0" + std::to_string(number) : "P" + std::to_string(number);
}

PropositionId proposition_from_string(std::string_view id) {
    if (id.size() == 3 && (id[0] == 'P' || id[0] == 'p') && id[1] >= '0' && id[1] <= '9' &&
        id[2] >= '0' && id[2] <= '9') {
        int number = (id[1] - '0') * 10 + (id[2] - '0');
        if (number >= 1 && number <= static_cast<int>(proposition_count))
            return static_cast<PropositionId>(number - 1);
    }
    throw UnknownProposition(std::string(id));
}

const std::vector<PropositionInfo>& catalog() {
    static const std::vector<PropositionInfo> entries = {
        {PropositionId::P01, "none", "lower and upper approximations are dual under complement"},
        {PropositionId::P02, "none",
         "lower approximation fixes the universe; upper approximation fixes the empty set"},
        {PropositionId::P03, "none",
         "lower approximation distributes over intersection; upper over union"},
        {PropositionId::P04, "reflexive",
         "every set sits between its lower and upper approximations"},
        {PropositionId::P05, "symmetric",
         "X is inside lower(upper(X)) and upper(lower(X)) is inside X"},
        {PropositionId::P06, "transitive",
         "lower(X) is inside lower(lower(X)); upper(upper(X)) is inside upper(X) "
         "(kinds s, p, s-and-p)"},
        {PropositionId::P07, "none", "pointwise neighborhood sandwich between the four kinds"},
        {PropositionId::P08, "none",
         "the successor family covers the universe exactly for inverse serial relations"},
        {PropositionId::P09, "none",
         "the predecessor family covers the universe exactly for serial relations"},
        {PropositionId::P10, "none",
         "symmetric with serial-or-inverse-serial makes the s-and-p family a cover "
         "(converse explored)"},
        {PropositionId::P11, "none",
         "serial-or-inverse-serial makes the s-or-p family a cover (converse explored)"},
        {PropositionId::P12, "symmetric", "serial and inverse serial coincide"},
        {PropositionId::P13, "symmetric and serial",
         "the four neighborhood families and induced topologies collapse; equivalences are "
         "quasi-discrete"},
        {PropositionId::P14, "reflexive / serial / inverse serial (per check)",
         "orderings between the four neighborhood families and their topologies"},
        {PropositionId::P15, "none",
         "inclusion chains between the four lower and the four upper approximations"},
        {PropositionId::P16, "serial", "lower(s) is inside upper(s), with the s-or-p chain"},
        {PropositionId::P17, "inverse serial",
         "lower(p) is inside upper(p), with the s-or-p chain"},
        {PropositionId::P18, "symmetric and (serial or inverse serial)",
         "lower(s-and-p) is inside upper(s-and-p)"},
        {PropositionId::P19, "reflexive",
         "four-way sandwich and the two seven-term approximation chains through X"},
        {PropositionId::P20, "tolerance",
         "all four lower and all four upper approximations collapse, with lower inside X "
         "inside upper"},
        {PropositionId::P21, "none",
         "pointwise neighborhood inclusion implies family refinement (converse explored)"},
        {PropositionId::P22, "preorder",
         "neighborhood families satisfy the base conditions and base their topologies "
         "(s-or-p explored)"},
    };
    return entries;
}

const std::vector<CheckSpec>& proposition_checks(PropositionId id) {
    static const std::array<std::vector<CheckSpec>, proposition_count> specs = [] {
        std::array<std::vector<CheckSpec>, proposition_count> out;
        for (std::size_t i = 0; i < proposition_count; ++i)
            for (const auto& impl : registry()[i]) out[i].push_back(impl.spec);
        return out;
    }();
    return specs[prop_index(id)];
}

RelationStream::RelationStream(std::size_t n) {
    if (n < 1 || n > 4) throw SizeOutOfRange(n, 1, 4);
    universe_ = make_indexed_universe(n);
    count_ = std::uint64_t{1} << (n * n);
}

BinaryRelation RelationStream::at(std::uint64_t code) const {
    if (code >= count_) throw SizeOutOfRange(static_cast<std::size_t>(code), 0, count_ - 1);
    return BinaryRelation::from_bits(universe_, code);
}

std::vector<CheckOutcome> evaluate_proposition(PropositionId id, const BinaryRelation& relation) {
    if (relation.size() > 8) throw SizeOutOfRange(relation.size(), 1, 8);
    Ctx ctx(relation);
    std::vector<CheckOutcome> outcomes;
    for (const auto& impl : registry()[prop_index(id)]) {
        CheckOutcome outcome;
        outcome.hypothesis_satisfied = impl.hyp(ctx);
        if (outcome.hypothesis_satisfied) outcome.counterexample = impl.run(ctx);
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

std::optional<Counterexample> check_proposition(PropositionId id, const BinaryRelation& relation) {
    for (auto& outcome : evaluate_proposition(id, relation))
        if (outcome.counterexample) return std::move(outcome.counterexample);
    return std::nullopt;
}

std::string report_status(const PropositionReport& report) {
    if (!report.gating_holds) return "FAIL";
    return report.holds ? "PASS" : "REPORTED";
}

namespace {

struct CheckAccum {
    std::uint64_t hyp = 0;
    std::uint64_t vac = 0;
    std::uint64_t cexes = 0;
};

struct PropAccum {
    std::vector<CheckAccum> checks;
    std::vector<Counterexample> recorded;  // capped, relation codes ascending
    double elapsed_ms = 0.0;
};

// Distinct relation codes drawn for one universe size, ascending. Raw engine
// words are masked rather than passed through a distribution so the draw is
// identical on every platform.
std::vector<std::uint64_t> sampled_codes(std::uint64_t seed, std::size_t n,
                                         std::uint64_t sample_count) {
    std::mt19937_64 engine(seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(n));
    std::uint64_t mask = full_mask(n * n);
    std::vector<std::uint64_t> codes;
    codes.reserve(sample_count);
    for (std::uint64_t i = 0; i < sample_count; ++i) codes.push_back(engine() & mask);
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

void validate(const SweepConfig& config, unsigned jobs) {
    if (jobs == 0) throw InvalidConfig("worker count must be at least 1");
    if (config.max_n < 1) throw InvalidConfig("max_n must be at least 1");
    if (config.mode == SweepMode::exhaustive) {
        if (config.max_n > 4)
            throw InvalidConfig("exhaustive mode supports universe sizes up to 4");
    } else {
        if (config.max_n > 8) throw InvalidConfig("sampled mode supports universe sizes up to 8");
        if (!config.seed) throw InvalidConfig("sampled mode requires a seed");
        if (config.sample_count == 0) throw InvalidConfig("sample_count must be at least 1");
    }
}

std::vector<PropositionId> selected_props(const SweepConfig& config) {
    std::vector<PropositionId> props = config.props;
    if (props.empty()) {
        props.reserve(proposition_count);
        for (std::size_t i = 0; i < proposition_count; ++i)
            props.push_back(static_cast<PropositionId>(i));
    }
    std::sort(props.begin(), props.end());
    props.erase(std::unique(props.begin(), props.end()), props.end());
    return props;
}

}  // namespace

std::vector<PropositionReport> run_suite(const SweepConfig& config, unsigned jobs) {
    validate(config, jobs);
    auto props = selected_props(config);
    const auto& impls = registry();

    // reports_by_n[n-1][pi]
    std::vector<std::vector<PropositionReport>> reports_by_n;

    for (std::size_t n = 1; n <= config.max_n; ++n) {
        UniversePtr universe = make_indexed_universe(n);
        std::vector<std::uint64_t> codes;
        std::uint64_t total;
        if (config.mode == SweepMode::sampled) {
            codes = sampled_codes(*config.seed, n, config.sample_count);
            total = codes.size();
        } else {
            total = std::uint64_t{1} << (n * n);
        }

        unsigned workers = jobs;
        if (static_cast<std::uint64_t>(workers) > total)
            workers = static_cast<unsigned>(total > 0 ? total : 1);

        std::vector<std::vector<PropAccum>> partials(workers);
        std::vector<std::exception_ptr> failures(workers);

        auto work = [&](unsigned w) {
            auto& local = partials[w];
            local.resize(props.size());
            for (std::size_t pi = 0; pi < props.size(); ++pi)
                local[pi].checks.resize(impls[prop_index(props[pi])].size());

            std::uint64_t per = (total + workers - 1) / workers;
            std::uint64_t lo = per * w;
            std::uint64_t hi = std::min(total, lo + per);
            std::optional<Ctx> ctx;
            for (std::uint64_t idx = lo; idx < hi; ++idx) {
                std::uint64_t code = config.mode == SweepMode::sampled ? codes[idx] : idx;
                BinaryRelation relation = BinaryRelation::from_bits(universe, code);
                if (ctx)
                    ctx->reset(std::move(relation));
                else
                    ctx.emplace(std::move(relation));
                for (std::size_t pi = 0; pi < props.size(); ++pi) {
                    const auto& checks = impls[prop_index(props[pi])];
                    auto& acc = local[pi];
                    auto started = std::chrono::steady_clock::now();
                    for (std::size_t ci = 0; ci < checks.size(); ++ci) {
                        if (!checks[ci].hyp(*ctx)) {
                            ++acc.checks[ci].vac;
                            continue;
                        }
                        ++acc.checks[ci].hyp;
                        if (auto found = checks[ci].run(*ctx)) {
                            ++acc.checks[ci].cexes;
                            if (acc.recorded.size() < config.max_counterexamples)
                                acc.recorded.push_back(std::move(*found));
                        }
                    }
                    acc.elapsed_ms += std::chrono::duration<double, std::milli>(
                                          std::chrono::steady_clock::now() - started)
                                          .count();
                }
            }
        };

        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(workers);
            for (unsigned w = 0; w < workers; ++w) {
                pool.emplace_back([&, w] {
                    try {
                        work(w);
                    } catch (...) {
                        failures[w] = std::current_exception();
                    }
                });
            }
            for (auto& t : pool) t.join();
            for (auto& failure : failures)
                if (failure) std::rethrow_exception(failure);
        }

        // Merge in worker order: chunks are ascending code ranges, so the
        // concatenated counterexample lists are already in encoding order.
        std::vector<PropositionReport> merged(props.size());
        for (std::size_t pi = 0; pi < props.size(); ++pi) {
            auto& report = merged[pi];
            report.id = props[pi];
            report.n = n;
            report.relations_checked = total;
            report.subsets_checked = std::uint64_t{1} << n;
            const auto& checks = impls[prop_index(props[pi])];
            report.checks.resize(checks.size());
            for (std::size_t ci = 0; ci < checks.size(); ++ci) {
                auto& out = report.checks[ci];
                out.name = checks[ci].spec.name;
                out.gating = checks[ci].spec.gating;
                for (const auto& partial : partials) {
                    out.hypothesis_satisfied += partial[pi].checks[ci].hyp;
                    out.vacuous += partial[pi].checks[ci].vac;
                    out.counterexample_count += partial[pi].checks[ci].cexes;
                }
                out.holds = out.counterexample_count == 0;
                if (!out.holds) {
                    report.holds = false;
                    if (out.gating) report.gating_holds = false;
                }
            }
            for (auto& partial : partials) {
                report.elapsed_ms += partial[pi].elapsed_ms;
                for (auto& found : partial[pi].recorded) {
                    if (report.counterexamples.size() < config.max_counterexamples)
                        report.counterexamples.push_back(std::move(found));
                }
            }
        }
        reports_by_n.push_back(std::move(merged));
    }

    std::vector<PropositionReport> reports;
    reports.reserve(props.size() * config.max_n);
    for (std::size_t pi = 0; pi < props.size(); ++pi)
        for (std::size_t ni = 0; ni < reports_by_n.size(); ++ni)
            reports.push_back(std::move(reports_by_n[ni][pi]));
    return reports;
}

std::string report_json(const SweepConfig& config, const std::vector<PropositionReport>& reports,
                        bool include_timings) {
    ordered_json doc;
    auto& cfg = doc["config"];
    cfg["mode"] = config.mode == SweepMode::exhaustive ? "exhaustive" : "sampled";
    cfg["max_n"] = config.max_n;
    auto& props = cfg["props"] = ordered_json::array();
    for (auto id : selected_props(config)) props.push_back(to_string(id));
    if (config.mode == SweepMode::sampled) {
        cfg["sample_count"] = config.sample_count;
        cfg["seed"] = *config.seed;
    }
    cfg["max_counterexamples"] = config.max_counterexamples;

    auto& out = doc["reports"] = ordered_json::array();
    for (const auto& report : reports) {
        ordered_json r;
        r["prop"] = to_string(report.id);
        r["n"] = report.n;
        r["relations_checked"] = report.relations_checked;
        r["subsets_checked"] = report.subsets_checked;
        r["holds"] = report.holds;
        r["gating_holds"] = report.gating_holds;
        r["status"] = report_status(report);
        std::uint64_t total = 0;
        auto& checks = r["checks"] = ordered_json::array();
        for (const auto& check : report.checks) {
            ordered_json c;
            c["name"] = check.name;
            c["gating"] = check.gating;
            c["hypothesis_satisfied"] = check.hypothesis_satisfied;
            c["vacuous"] = check.vacuous;
            c["counterexample_count"] = check.counterexample_count;
            c["holds"] = check.holds;
            checks.push_back(std::move(c));
            total += check.counterexample_count;
        }
        r["counterexample_total"] = total;
        auto& cexes = r["counterexamples"] = ordered_json::array();
        for (const auto& found : report.counterexamples) {
            ordered_json entry;
            entry["check"] = found.check;
            auto& rel = entry["relation"];
            rel["universe"] = found.relation.universe()->labels();
            auto& pairs = rel["pairs"] = ordered_json::array();
            for (const auto& [from, to] : found.relation.pairs()) pairs.push_back({from, to});
            auto& witnesses = entry["witnesses"] = ordered_json::object();
            for (const auto& [name, value] : found.witnesses) witnesses[name] = value;
            entry["observed"] = found.observed;
            entry["expected"] = found.expected;
            cexes.push_back(std::move(entry));
        }
        if (include_timings) r["elapsed_ms"] = report.elapsed_ms;
        out.push_back(std::move(r));
    }
    return doc.dump(2);
}

}  // namespace reltop::harness
