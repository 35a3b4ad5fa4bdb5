#pragma once

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "depthlab/bigint.hpp"
#include "depthlab/errors.hpp"
#include "depthlab/permutation.hpp"

namespace depthlab {

inline constexpr std::size_t default_enumeration_bound = 100000;

/// Largest group order for which elements are enumerated explicitly.
/// DEPTHLAB_MAX_ORDER overrides the default of 100000.
inline std::size_t enumeration_bound()
{
    if (const char* env = std::getenv("DEPTHLAB_MAX_ORDER")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<std::size_t>(v);
    }
    return default_enumeration_bound;
}

/// A finite permutation group, with a base and strong generating set built
/// deterministically by Schreier-Sims at construction.
///
/// Element enumeration is lazy, thread-safe and shared between copies.
class PermGroup {
public:
    using point_type = Permutation::point_type;

    PermGroup(std::size_t degree, std::vector<Permutation> generators)
        : degree_(degree), generators_(std::move(generators)),
          cache_(std::make_shared<Cache>())
    {
        for (const auto& g : generators_)
            if (g.degree() != degree_)
                throw input_error("generator " + g.to_cycles() + " has degree " +
                                  std::to_string(g.degree()) + ", expected " +
                                  std::to_string(degree_));
        build_bsgs();
        order_ = 1;
        for (const auto& level : levels_)
            order_ *= level.orbit.size();
    }

    static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }
    const BigInt& order() const noexcept { return order_; }

    /// Order as a machine integer; throws resource_error when above the
    /// enumeration bound.
    std::size_t small_order() const
    {
        if (order_ > BigInt(enumeration_bound()))
            throw resource_error("group order " + order_.str() +
                                 " exceeds the enumeration bound " +
                                 std::to_string(enumeration_bound()));
        return static_cast<std::size_t>(order_);
    }

    std::vector<point_type> base() const
    {
        std::vector<point_type> b;
        for (const auto& level : levels_)
            b.push_back(level.point);
        return b;
    }

    std::vector<std::size_t> fundamental_orbit_lengths() const
    {
        std::vector<std::size_t> lens;
        for (const auto& level : levels_)
            lens.push_back(level.orbit.size());
        return lens;
    }

    std::vector<Permutation> strong_generators() const
    {
        std::vector<Permutation> all;
        for (const auto& level : levels_)
            all.insert(all.end(), level.generators.begin(), level.generators.end());
        return all;
    }

    bool contains(const Permutation& g) const
    {
        if (g.degree() != degree_)
            return false;
        auto [residue, depth] = sift(g, 0);
        return depth == levels_.size() && residue.is_identity();
    }

    /// True when every generator of `h` belongs to this group.
    bool contains(const PermGroup& h) const
    {
        if (h.degree() != degree_)
            return false;
        return std::all_of(h.generators_.begin(), h.generators_.end(),
                           [this](const Permutation& g) { return contains(g); });
    }

    /// All elements in lexicographic order; the identity comes first.
    const std::vector<Permutation>& elements() const
    {
        std::size_t n = small_order();
        std::call_once(cache_->once, [&] { enumerate(n); });
        return cache_->elements;
    }

    std::optional<std::size_t> index_of(const Permutation& g) const
    {
        elements();
        auto it = cache_->index.find(g);
        if (it == cache_->index.end())
            return std::nullopt;
        return it->second;
    }

    std::size_t index_of_member(const Permutation& g) const
    {
        auto idx = index_of(g);
        if (!idx)
            throw internal_error("permutation " + g.to_cycles() + " is not a group element");
        return *idx;
    }

    Permutation identity() const { return Permutation(degree_); }

private:
    struct Level {
        point_type point = 0;
        std::vector<Permutation> generators;
        std::vector<point_type> orbit;
        std::vector<std::optional<Permutation>> transversal;
    };

    struct Cache {
        std::once_flag once;
        std::vector<Permutation> elements;
        std::unordered_map<Permutation, std::size_t> index;
    };

    std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const
    {
        for (std::size_t j = from; j < levels_.size(); ++j) {
            const auto& u = levels_[j].transversal[h(levels_[j].point)];
            if (!u)
                return {std::move(h), j};
            h = u->inverse() * h;
        }
        return {std::move(h), levels_.size()};
    }

    void rebuild_transversals()
    {
        for (std::size_t i = 0; i < levels_.size(); ++i) {
            auto& level = levels_[i];
            level.orbit.assign(1, level.point);
            level.transversal.assign(degree_, std::nullopt);
            level.transversal[level.point] = Permutation(degree_);
            for (std::size_t k = 0; k < level.orbit.size(); ++k) {
                point_type beta = level.orbit[k];
                for (std::size_t j = i; j < levels_.size(); ++j) {
                    for (const auto& s : levels_[j].generators) {
                        point_type gamma = s(beta);
                        if (!level.transversal[gamma]) {
                            level.transversal[gamma] = s * *level.transversal[beta];
                            level.orbit.push_back(gamma);
                        }
                    }
                }
            }
        }
    }

    // Residue `h` fixes the base points of all levels above `depth`.
    void add_strong_generator(Permutation h, std::size_t depth)
    {
        if (depth == levels_.size()) {
            Level level;
            for (std::size_t p = 0; p < degree_; ++p) {
                if (h(static_cast<point_type>(p)) != p) {
                    level.point = static_cast<point_type>(p);
                    break;
                }
            }
            levels_.push_back(std::move(level));
        }
        levels_[depth].generators.push_back(std::move(h));
        rebuild_transversals();
    }

    // Deterministic Schreier-Sims: repeat full passes over all Schreier
    // generators until every one sifts to the identity.
    void build_bsgs()
    {
        for (const auto& g : generators_) {
            if (g.is_identity())
                continue;
            auto [residue, depth] = sift(g, 0);
            if (!residue.is_identity())
                add_strong_generator(std::move(residue), depth);
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = levels_.size(); i-- > 0 && !changed;) {
                const Level& level = levels_[i];
                for (std::size_t k = 0; !changed && k < level.orbit.size(); ++k) {
                    point_type beta = level.orbit[k];
                    for (std::size_t j = i; j < levels_.size() && !changed; ++j) {
                        for (const auto& s : levels_[j].generators) {
                            Permutation h = level.transversal[s(beta)]->inverse() * s *
                                            *level.transversal[beta];
                            auto [residue, depth] = sift(std::move(h), i + 1);
                            if (!residue.is_identity()) {
                                add_strong_generator(std::move(residue), depth);
                                changed = true;
                                break;
                            }
                        }
                    }
                }
            }
        }
    }

    void enumerate(std::size_t n) const
    {
        std::vector<Permutation> elems{Permutation(degree_)};
        elems.reserve(n);
        for (std::size_t i = levels_.size(); i-- > 0;) {
            std::vector<Permutation> next;
            next.reserve(elems.size() * levels_[i].orbit.size());
            for (point_type beta : levels_[i].orbit)
                for (const auto& x : elems)
                    next.push_back(*levels_[i].transversal[beta] * x);
            elems = std::move(next);
        }
        std::sort(elems.begin(), elems.end());
        if (elems.size() != n)
            throw internal_error("element enumeration disagrees with the BSGS order");
        cache_->index.reserve(elems.size() * 2);
        for (std::size_t i = 0; i < elems.size(); ++i)
            cache_->index.emplace(elems[i], i);
        cache_->elements = std::move(elems);
    }

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Level> levels_;
    BigInt order_;
    std::shared_ptr<Cache> cache_;
};

/// Builds the group generated by `gens`. All generators must share `degree`.
inline PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens)
{
    return PermGroup(degree, std::move(gens));
}

inline PermGroup group_from_generators(std::vector<Permutation> gens)
{
    if (gens.empty())
        throw input_error("cannot infer the degree of a group with no generators");
    std::size_t degree = gens.front().degree();
    return PermGroup(degree, std::move(gens));
}

/// Subgroup generated greedily from a list of elements: an element becomes a
/// generator when it is not already in the span of the earlier ones.
inline PermGroup subgroup_from_elements(std::size_t degree, const std::vector<Permutation>& elements)
{
    std::vector<Permutation> gens;
    PermGroup current = PermGroup::trivial(degree);
    for (const auto& e : elements) {
        if (!current.contains(e)) {
            gens.push_back(e);
            current = PermGroup(degree, gens);
        }
    }
    return current;
}

inline void require_subgroup(const PermGroup& g, const PermGroup& h, const char* what = "H")
{
    if (h.degree() != g.degree())
        throw containment_error(std::string(what) + " acts on degree " +
                                std::to_string(h.degree()) + " but the parent acts on " +
                                std::to_string(g.degree()));
    for (const auto& x : h.generators())
        if (!g.contains(x))
            throw containment_error(std::string(what) + " is not a subgroup: generator " +
                                    x.to_cycles() + " lies outside the parent group");
}

/// Conjugacy classes of an enumerated group. Element indices refer to
/// PermGroup::elements().
struct ClassPartition {
    std::vector<std::vector<std::size_t>> classes;
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> sizes;
    std::vector<Permutation> representatives;
    std::vector<std::uint64_t> element_orders;

    std::size_t size() const noexcept { return classes.size(); }
};

/// Conjugacy classes by conjugation-orbit BFS. The identity class is first;
/// the rest are ordered by element order, then by smallest member.
inline ClassPartition conjugacy_classes(const PermGroup& g)
{
    const auto& elems = g.elements();
    const std::size_t n = elems.size();
    constexpr std::size_t unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> orbit_id(n, unset);
    std::vector<std::vector<std::size_t>> orbits;

    for (std::size_t start = 0; start < n; ++start) {
        if (orbit_id[start] != unset)
            continue;
        std::vector<std::size_t> orbit{start};
        orbit_id[start] = orbits.size();
        for (std::size_t k = 0; k < orbit.size(); ++k) {
            const Permutation& x = elems[orbit[k]];
            for (const auto& s : g.generators()) {
                std::size_t y = g.index_of_member(x.conjugated_by(s));
                if (orbit_id[y] == unset) {
                    orbit_id[y] = orbits.size();
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }

    // orbits are discovered in order of their smallest member
    std::vector<std::size_t> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint64_t> orders(orbits.size());
    for (std::size_t i = 0; i < orbits.size(); ++i)
        orders[i] = elems[orbits[i].front()].order();
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t a, std::size_t b) { return orders[a] < orders[b]; });

    ClassPartition cp;
    cp.class_of.assign(n, 0);
    for (std::size_t c = 0; c < perm.size(); ++c) {
        auto& orbit = orbits[perm[c]];
        for (std::size_t idx : orbit)
            cp.class_of[idx] = c;
        cp.sizes.push_back(orbit.size());
        cp.representatives.push_back(elems[orbit.front()]);
        cp.element_orders.push_back(orders[perm[c]]);
        cp.classes.push_back(std::move(orbit));
    }
    return cp;
}

/// Left coset representatives g_1 = 1, g_2, ... with G the disjoint union of
/// the g_i H. Each representative is the smallest element of its coset.
inline std::vector<Permutation> left_transversal(const PermGroup& g, const PermGroup& h)
{
    require_subgroup(g, h);
    const auto& elems = g.elements();
    const auto& helems = h.elements();
    std::vector<bool> covered(elems.size(), false);
    std::vector<Permutation> reps;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (covered[i])
            continue;
        reps.push_back(elems[i]);
        for (const auto& x : helems)
            covered[g.index_of_member(elems[i] * x)] = true;
    }
    return reps;
}

struct DoubleCoset {
    Permutation representative;
    std::size_t size = 0;
};

/// Double cosets H r K partitioning G, each represented by its smallest
/// element. The double coset of the identity comes first.
inline std::vector<DoubleCoset> double_cosets(const PermGroup& g, const PermGroup& h,
                                              const PermGroup& k)
{
    require_subgroup(g, h, "H");
    require_subgroup(g, k, "K");
    const auto& elems = g.elements();
    const auto& helems = h.elements();
    const auto& kelems = k.elements();
    std::vector<bool> covered(elems.size(), false);
    std::vector<DoubleCoset> result;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (covered[i])
            continue;
        std::size_t count = 0;
        for (const auto& x : helems) {
            Permutation xr = x * elems[i];
            for (const auto& y : kelems) {
                std::size_t idx = g.index_of_member(xr * y);
                if (!covered[idx]) {
                    covered[idx] = true;
                    ++count;
                }
            }
        }
        result.push_back({elems[i], count});
    }
    return result;
}

/// True iff g H g^-1 = H for every generator g of G.
inline bool is_normal(const PermGroup& g, const PermGroup& h)
{
    require_subgroup(g, h);
    for (const auto& s : g.generators())
        for (const auto& x : h.generators())
            if (!h.contains(x.conjugated_by(s)))
                return false;
    return true;
}

/// x H x^-1 as a permutation group.
inline PermGroup conjugate_subgroup(const PermGroup& h, const Permutation& x)
{
    std::vector<Permutation> gens;
    gens.reserve(h.generators().size());
    for (const auto& s : h.generators())
        gens.push_back(s.conjugated_by(x));
    return PermGroup(h.degree(), std::move(gens));
}

inline PermGroup intersection(const PermGroup& a, const PermGroup& b)
{
    if (a.degree() != b.degree())
        throw input_error("cannot intersect groups of different degree");
    const PermGroup& small = a.order() <= b.order() ? a : b;
    const PermGroup& other = a.order() <= b.order() ? b : a;
    std::vector<Permutation> common;
    for (const auto& x : small.elements())
        if (other.contains(x))
            common.push_back(x);
    return subgroup_from_elements(a.degree(), common);
}

/// The largest subgroup of H normal in G: the intersection of all G-conjugates of H.
inline PermGroup normal_core(const PermGroup& g, const PermGroup& h)
{
    auto reps = left_transversal(g, h);
    std::vector<Permutation> core;
    for (const auto& x : h.elements()) {
        bool in_all = std::all_of(reps.begin(), reps.end(), [&](const Permutation& t) {
            return h.contains(x.conjugated_by(t.inverse()));
        });
        if (in_all)
            core.push_back(x);
    }
    return subgroup_from_elements(g.degree(), core);
}

/// The smallest normal subgroup of G containing H.
inline PermGroup normal_closure(const PermGroup& g, const PermGroup& h)
{
    require_subgroup(g, h);
    std::vector<Permutation> gens;
    PermGroup current = PermGroup::trivial(g.degree());
    for (const auto& x : h.generators()) {
        if (!current.contains(x)) {
            gens.push_back(x);
            current = PermGroup(g.degree(), gens);
        }
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (const auto& s : g.generators()) {
            Permutation c = gens[i].conjugated_by(s);
            if (!current.contains(c)) {
                gens.push_back(std::move(c));
                current = PermGroup(g.degree(), gens);
            }
        }
    }
    return current;
}

/// Every subgroup of G, found by closing joins of cyclic subgroups. Sorted by
/// order, then by element set. Only meant for small groups.
inline std::vector<PermGroup> all_subgroups(const PermGroup& g, std::size_t max_order = 1000)
{
    const std::size_t n = g.small_order();
    if (n > max_order)
        throw resource_error("subgroup enumeration is limited to groups of order " +
                             std::to_string(max_order));
    const auto& elems = g.elements();
    std::vector<std::vector<std::size_t>> mul(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            mul[i][j] = g.index_of_member(elems[i] * elems[j]);

    using Subset = std::vector<bool>;
    auto close = [&](Subset s) {
        std::vector<std::size_t> members;
        for (std::size_t i = 0; i < n; ++i)
            if (s[i])
                members.push_back(i);
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b <= a; ++b) {
                for (std::size_t prod : {mul[members[a]][members[b]], mul[members[b]][members[a]]}) {
                    if (!s[prod]) {
                        s[prod] = true;
                        members.push_back(prod);
                    }
                }
            }
        }
        return s;
    };

    std::vector<Subset> cyclic;
    std::set<Subset> seen;
    for (std::size_t i = 0; i < n; ++i) {
        Subset s(n, false);
        s[0] = true;
        s[i] = true;
        s = close(std::move(s));
        if (seen.insert(s).second)
            cyclic.push_back(s);
    }
    std::vector<Subset> found(seen.begin(), seen.end());
    for (std::size_t k = 0; k < found.size(); ++k) {
        for (const auto& z : cyclic) {
            Subset joined = found[k];
            bool grows = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (z[i] && !joined[i]) {
                    joined[i] = true;
                    grows = true;
                }
            }
            if (!grows)
                continue;
            joined = close(std::move(joined));
            if (seen.insert(joined).second)
                found.push_back(std::move(joined));
        }
    }

    std::vector<std::pair<std::vector<std::size_t>, PermGroup>> groups;
    for (const auto& s : found) {
        std::vector<std::size_t> members;
        std::vector<Permutation> perms;
        for (std::size_t i = 0; i < n; ++i) {
            if (s[i]) {
                members.push_back(i);
                perms.push_back(elems[i]);
            }
        }
        groups.emplace_back(std::move(members), subgroup_from_elements(g.degree(), perms));
    }
    std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size())
            return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    std::vector<PermGroup> result;
    result.reserve(groups.size());
    for (auto& entry : groups)
        result.push_back(std::move(entry.second));
    return result;
}

} // namespace depthlab
