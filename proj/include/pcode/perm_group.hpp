#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pcode/permutation.hpp"

namespace pcode {

inline constexpr std::size_t kDefaultEnumerationCap = 1'000'000;

/// A finite permutation group with its element set fully enumerated and held
/// in canonical order (lexicographic on image arrays); closure refuses to
/// enumerate past the cap. All subgroup-level operations are set operations
/// on the enumerated elements.
///
/// Immutable after construction.
class PermGroup {
public:
    PermGroup() = default;

    /// Closure of the generators: every product of generators, found by
    /// breadth-first multiplication starting at the identity.
    static PermGroup closure(std::size_t degree, std::vector<Permutation> generators,
                             std::size_t cap = kDefaultEnumerationCap) {
        for (const auto& g : generators)
            require(g.degree() == degree, ErrorCode::InvalidInput, "generator degree mismatch");

        std::unordered_set<Permutation, PermutationHash> seen;
        std::deque<Permutation> frontier;
        Permutation id = Permutation::identity(degree);
        seen.insert(id);
        frontier.push_back(id);
        while (!frontier.empty()) {
            Permutation current = std::move(frontier.front());
            frontier.pop_front();
            for (const auto& g : generators) {
                Permutation next = current * g;
                if (seen.insert(next).second) {
                    require(seen.size() <= cap, ErrorCode::EnumerationCapExceeded,
                            "group order exceeds enumeration cap " + std::to_string(cap));
                    frontier.push_back(std::move(next));
                }
            }
        }
        std::vector<Permutation> elements(seen.begin(), seen.end());
        return PermGroup(degree, std::move(generators), std::move(elements));
    }

    /// Wrap an element set that is already known to be a group. Identity and
    /// inverse closure are always verified; full product closure only for
    /// small sets (quadratic).
    static PermGroup from_elements(std::size_t degree, std::vector<Permutation> elements,
                                   std::vector<Permutation> generators = {}) {
        PermGroup g(degree, std::move(generators), std::move(elements));
        require(g.contains(Permutation::identity(degree)), ErrorCode::InvalidInput,
                "element set lacks the identity");
        for (const auto& p : g.elements_)
            require(g.contains(p.inverse()), ErrorCode::InvalidInput,
                    "element set is not inverse-closed");
        if (g.order() <= 2048) {
            for (const auto& p : g.elements_)
                for (const auto& q : g.elements_)
                    require(g.contains(p * q), ErrorCode::InvalidInput,
                            "element set is not closed under composition");
        }
        return g;
    }

    static PermGroup trivial(std::size_t degree) {
        return PermGroup(degree, {}, {Permutation::identity(degree)});
    }

    static PermGroup symmetric(std::size_t n) {
        std::vector<Permutation> gens;
        if (n >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
        if (n >= 3) {
            std::vector<Point> cycle(n);
            std::iota(cycle.begin(), cycle.end(), Point{0});
            gens.push_back(Permutation::from_cycle(n, cycle));
        }
        return closure(n, std::move(gens));
    }

    static PermGroup alternating(std::size_t n) {
        std::vector<Permutation> gens;
        if (n >= 3) gens.push_back(Permutation::from_cycle(n, {0, 1, 2}));
        if (n >= 4) {
            std::vector<Point> cycle;
            if (n % 2 == 1) {
                cycle.resize(n);
                std::iota(cycle.begin(), cycle.end(), Point{0});
            } else {
                cycle.resize(n - 1);
                std::iota(cycle.begin(), cycle.end(), Point{1});
            }
            gens.push_back(Permutation::from_cycle(n, cycle));
        }
        return closure(n, std::move(gens));
    }

    static PermGroup cyclic(std::size_t n) {
        std::vector<Point> cycle(n);
        std::iota(cycle.begin(), cycle.end(), Point{0});
        return closure(n, {Permutation::from_cycle(n, cycle)});
    }

    /// Dihedral group of order 2n acting on the regular n-gon.
    static PermGroup dihedral(std::size_t n) {
        require(n >= 1, ErrorCode::ParameterOutOfRange, "dihedral requires n >= 1");
        std::vector<Point> rot(n);
        std::iota(rot.begin(), rot.end(), Point{0});
        std::vector<Point> refl(n);
        for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
        return closure(n, {Permutation::from_cycle(n, rot), Permutation(std::move(refl))});
    }

    std::size_t degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const Permutation& element(std::size_t i) const { return elements_[i]; }
    const std::vector<Permutation>& generators() const { return generators_; }

    bool contains(const Permutation& p) const { return index_.count(p) != 0; }

    std::uint32_t index_of(const Permutation& p) const {
        auto it = index_.find(p);
        require(it != index_.end(), ErrorCode::ElementNotInGroup,
                "element " + p.to_cycle_string() + " not in group");
        return it->second;
    }

    std::optional<std::uint32_t> find_index(const Permutation& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::uint32_t identity_index() const { return index_.at(Permutation::identity(degree_)); }

    bool is_subgroup_of(const PermGroup& big) const {
        if (degree_ != big.degree() || order() > big.order() || big.order() % order() != 0) return false;
        for (const auto& p : elements_)
            if (!big.contains(p)) return false;
        return true;
    }

    bool same_elements(const PermGroup& other) const {
        return degree_ == other.degree_ && elements_ == other.elements_;
    }

    /// Greedy minimal-ish generating set: repeatedly adjoin the first element
    /// outside the closure so far. Deterministic.
    std::vector<Permutation> small_generating_set() const {
        std::vector<Permutation> gens;
        PermGroup sofar = trivial(degree_);
        while (sofar.order() < order()) {
            const Permutation* next = nullptr;
            for (const auto& p : elements_) {
                if (!sofar.contains(p)) {
                    next = &p;
                    break;
                }
            }
            gens.push_back(*next);
            sofar = closure(degree_, gens, order());
        }
        return gens;
    }

    /// Restrict to an invariant point set, relabelling the kept points in
    /// ascending order. The restriction must stay faithful.
    PermGroup restriction(const std::vector<Point>& points) const {
        std::vector<std::int32_t> new_label(degree_, -1);
        for (std::size_t i = 0; i < points.size(); ++i) {
            require(points[i] < degree_, ErrorCode::InvalidInput, "restriction point out of range");
            new_label[points[i]] = static_cast<std::int32_t>(i);
        }
        auto restrict_perm = [&](const Permutation& p) {
            std::vector<Point> img(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) {
                Point image = p.apply(points[i]);
                require(new_label[image] >= 0, ErrorCode::DomainNotInvariant,
                        "point set not invariant under the group");
                img[i] = static_cast<Point>(new_label[image]);
            }
            return Permutation(std::move(img));
        };
        std::vector<Permutation> elems;
        elems.reserve(order());
        for (const auto& p : elements_) elems.push_back(restrict_perm(p));
        std::vector<Permutation> gens;
        gens.reserve(generators_.size());
        for (const auto& g : generators_) gens.push_back(restrict_perm(g));
        PermGroup result(points.size(), std::move(gens), std::move(elems));
        require(result.order() == order(), ErrorCode::DomainNotInvariant,
                "restriction is not faithful");
        return result;
    }

private:
    PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
        : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
        std::sort(elements_.begin(), elements_.end());
        elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
        index_.reserve(elements_.size() * 2);
        for (std::uint32_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    }

    std::size_t degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;
    std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
};

inline void require_subgroup(const PermGroup& big, const PermGroup& sub, const char* what) {
    require(sub.is_subgroup_of(big), ErrorCode::NotASubgroup, what);
}

inline PermGroup conjugate_subgroup(const PermGroup& group, const Permutation& x) {
    std::vector<Permutation> elems;
    elems.reserve(group.order());
    for (const auto& p : group.elements()) elems.push_back(p.conjugated_by(x));
    std::vector<Permutation> gens;
    for (const auto& g : group.generators()) gens.push_back(g.conjugated_by(x));
    return PermGroup::from_elements(group.degree(), std::move(elems), std::move(gens));
}

inline PermGroup intersect(const PermGroup& a, const PermGroup& b) {
    require(a.degree() == b.degree(), ErrorCode::InvalidInput, "degree mismatch in intersection");
    const PermGroup& small = a.order() <= b.order() ? a : b;
    const PermGroup& large = a.order() <= b.order() ? b : a;
    std::vector<Permutation> elems;
    for (const auto& p : small.elements())
        if (large.contains(p)) elems.push_back(p);
    return PermGroup::from_elements(a.degree(), std::move(elems));
}

/// N_G(H) = { g in G : H^g = H }. Checks generator conjugates only, which
/// suffices since |H^g| = |H|.
inline PermGroup normalizer(const PermGroup& G, const PermGroup& H) {
    require_subgroup(G, H, "normalizer requires H <= G");
    std::vector<Permutation> hgens = H.generators().empty() ? H.small_generating_set() : H.generators();
    std::vector<Permutation> elems;
    for (const auto& g : G.elements()) {
        bool normalizes = true;
        for (const auto& h : hgens) {
            if (!H.contains(h.conjugated_by(g))) {
                normalizes = false;
                break;
            }
        }
        if (normalizes) elems.push_back(g);
    }
    return PermGroup::from_elements(G.degree(), std::move(elems));
}

/// H^G: the smallest normal subgroup of G containing H, generated by all
/// G-conjugates of H's generators.
inline PermGroup normal_closure(const PermGroup& G, const PermGroup& H) {
    require_subgroup(G, H, "normal_closure requires H <= G");
    std::vector<Permutation> hgens = H.generators().empty() ? H.small_generating_set() : H.generators();
    std::unordered_set<Permutation, PermutationHash> conj_gens;
    for (const auto& g : G.elements())
        for (const auto& h : hgens) conj_gens.insert(h.conjugated_by(g));
    std::vector<Permutation> gens(conj_gens.begin(), conj_gens.end());
    std::sort(gens.begin(), gens.end());
    return PermGroup::closure(G.degree(), std::move(gens), G.order());
}

inline bool is_normal(const PermGroup& G, const PermGroup& H) {
    require_subgroup(G, H, "is_normal requires H <= G");
    std::vector<Permutation> hgens = H.generators().empty() ? H.small_generating_set() : H.generators();
    for (const auto& g : G.elements())
        for (const auto& h : hgens)
            if (!H.contains(h.conjugated_by(g))) return false;
    return true;
}

/// A Sylow 2-subgroup of G, grown deterministically: while |P| is short of
/// the full 2-part of |G|, adjoin the canonically least 2-power-order element
/// of N_G(P) \ P. The normalizer of a proper 2-subgroup of a bigger 2-group
/// always strictly contains it, so this terminates.
inline PermGroup sylow_2(const PermGroup& G) {
    std::size_t two_part = 1;
    std::size_t n = G.order();
    while (n % 2 == 0) {
        two_part *= 2;
        n /= 2;
    }
    PermGroup P = PermGroup::trivial(G.degree());
    std::vector<Permutation> pgens;
    while (P.order() < two_part) {
        PermGroup N = P.order() == 1 ? G : normalizer(G, P);
        const Permutation* next = nullptr;
        for (const auto& g : N.elements()) {
            if (P.contains(g)) continue;
            std::uint64_t ord = g.order();
            if ((ord & (ord - 1)) == 0) { // power of two
                next = &g;
                break;
            }
        }
        require(next != nullptr, ErrorCode::ConsistencyViolation,
                "sylow_2 growth stalled before reaching the 2-part");
        pgens.push_back(*next);
        P = PermGroup::closure(G.degree(), pgens, two_part);
    }
    return P;
}

/// True iff only the identity fixes a point of `domain`. The domain must be
/// invariant under the group.
inline bool is_semiregular(const PermGroup& G, const std::vector<Point>& domain) {
    std::vector<bool> in_domain(G.degree(), false);
    for (Point p : domain) {
        require(p < G.degree(), ErrorCode::InvalidInput, "domain point out of range");
        in_domain[p] = true;
    }
    for (const auto& g : G.elements())
        for (Point p : domain)
            require(in_domain[g.apply(p)], ErrorCode::DomainNotInvariant,
                    "domain is not invariant under the group");
    for (const auto& g : G.elements()) {
        if (g.is_identity()) continue;
        for (Point p : domain)
            if (g.apply(p) == p) return false;
    }
    return true;
}

/// Every subgroup of G, found by closing each known subgroup extended by one
/// extra element. Intended for |G| <= a few hundred.
inline std::vector<PermGroup> all_subgroups(const PermGroup& G) {
    require(G.order() <= 512, ErrorCode::EnumerationCapExceeded,
            "all_subgroups is capped at order 512");
    const std::uint32_t n = static_cast<std::uint32_t>(G.order());

    // index-level multiplication table
    std::vector<std::uint32_t> mul(static_cast<std::size_t>(n) * n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            mul[static_cast<std::size_t>(i) * n + j] = G.index_of(G.element(i) * G.element(j));

    const std::uint32_t id = G.identity_index();
    auto close_indices = [&](std::vector<std::uint32_t> seed) {
        std::vector<bool> member(n, false);
        std::vector<std::uint32_t> elems;
        std::deque<std::uint32_t> todo;
        auto add = [&](std::uint32_t e) {
            if (!member[e]) {
                member[e] = true;
                elems.push_back(e);
                todo.push_back(e);
            }
        };
        add(id);
        for (std::uint32_t s : seed) add(s);
        while (!todo.empty()) {
            std::uint32_t a = todo.front();
            todo.pop_front();
            for (std::size_t k = 0; k < elems.size(); ++k) {
                std::uint32_t b = elems[k];
                add(mul[static_cast<std::size_t>(a) * n + b]);
                add(mul[static_cast<std::size_t>(b) * n + a]);
            }
        }
        std::sort(elems.begin(), elems.end());
        return elems;
    };

    struct VecHash {
        std::size_t operator()(const std::vector<std::uint32_t>& v) const {
            std::uint64_t h = 1469598103934665603ull;
            for (std::uint32_t x : v) {
                h ^= x;
                h *= 1099511628211ull;
            }
            return static_cast<std::size_t>(h);
        }
    };
    std::unordered_set<std::vector<std::uint32_t>, VecHash> seen;
    std::deque<std::vector<std::uint32_t>> frontier;
    std::vector<std::vector<std::uint32_t>> found;

    std::vector<std::uint32_t> triv = {id};
    seen.insert(triv);
    found.push_back(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<std::uint32_t> base = std::move(frontier.front());
        frontier.pop_front();
        std::vector<bool> member(n, false);
        for (std::uint32_t e : base) member[e] = true;
        for (std::uint32_t g = 0; g < n; ++g) {
            if (member[g]) continue;
            std::vector<std::uint32_t> seed = base;
            seed.push_back(g);
            std::vector<std::uint32_t> closed = close_indices(std::move(seed));
            if (seen.insert(closed).second) {
                found.push_back(closed);
                frontier.push_back(std::move(closed));
            }
        }
    }

    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    std::vector<PermGroup> result;
    result.reserve(found.size());
    for (const auto& idxs : found) {
        std::vector<Permutation> elems;
        elems.reserve(idxs.size());
        for (std::uint32_t i : idxs) elems.push_back(G.element(i));
        result.push_back(PermGroup::from_elements(G.degree(), std::move(elems)));
    }
    return result;
}

} // namespace pcode
