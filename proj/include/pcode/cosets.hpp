#pragma once

#include <cstdint>
#include <vector>

#include "pcode/perm_group.hpp"

namespace pcode {

/// Left cosets of a subgroup inside a supergroup, indexed against the
/// supergroup's canonical element order. representative(i) is the
/// lexicographically smallest element of coset i, and the representatives
/// themselves appear in lexicographic order.
class CosetDecomposition {
public:
    CosetDecomposition() = default;

    std::size_t coset_count() const { return representatives_.size(); }
    std::size_t supergroup_order() const { return coset_of_.size(); }
    std::size_t subgroup_order() const {
        return coset_count() == 0 ? 0 : supergroup_order() / coset_count();
    }

    const std::vector<Permutation>& representatives() const { return representatives_; }
    const Permutation& representative(std::uint32_t coset) const { return representatives_[coset]; }

    /// Coset id of the supergroup element at `element_index`.
    std::uint32_t coset_of(std::uint32_t element_index) const { return coset_of_[element_index]; }

    /// Element indices (into the supergroup) of one coset, ascending.
    const std::vector<std::uint32_t>& members(std::uint32_t coset) const { return members_[coset]; }

private:
    friend CosetDecomposition left_cosets(const PermGroup&, const PermGroup&);

    std::vector<Permutation> representatives_;
    std::vector<std::uint32_t> coset_of_;
    std::vector<std::vector<std::uint32_t>> members_;
};

/// Partition G into left cosets xA. Sweeping G's elements in canonical order
/// makes every first-seen element the minimal representative of its coset.
inline CosetDecomposition left_cosets(const PermGroup& G, const PermGroup& A) {
    require_subgroup(G, A, "left_cosets requires A <= G");
    constexpr std::uint32_t kUnassigned = 0xffffffffu;
    CosetDecomposition dec;
    dec.coset_of_.assign(G.order(), kUnassigned);
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        if (dec.coset_of_[i] != kUnassigned) continue;
        const Permutation& rep = G.element(i);
        std::uint32_t coset = static_cast<std::uint32_t>(dec.representatives_.size());
        dec.representatives_.push_back(rep);
        std::vector<std::uint32_t> members;
        members.reserve(A.order());
        for (const auto& a : A.elements()) {
            std::uint32_t idx = G.index_of(rep * a);
            dec.coset_of_[idx] = coset;
            members.push_back(idx);
        }
        std::sort(members.begin(), members.end());
        dec.members_.push_back(std::move(members));
    }
    return dec;
}

/// The union A{g,g^-1}A = AgA u Ag^-1A, kept as the set of left A-cosets it
/// covers. `symmetric` records whether AgA = Ag^-1A.
struct DoubleCosetUnion {
    Permutation seed;
    std::vector<std::uint32_t> cosets;        // left-A-coset ids, ascending
    std::vector<std::uint32_t> forward_cosets; // cosets of AgA alone
    bool symmetric = false;
    std::size_t base_order = 0;

    std::size_t size() const { return cosets.size() * base_order; }
    std::size_t forward_size() const { return forward_cosets.size() * base_order; }

    /// |A{g,g^-1}A| / |A|, the quantity whose parity the pair-code
    /// necessary condition tests.
    std::size_t ratio() const { return cosets.size(); }
};

/// Compute A{g,g^-1}A via left-coset ids: AgA covers exactly the cosets of
/// the products a*g for a in A.
inline DoubleCosetUnion double_coset_union(const PermGroup& G, const PermGroup& A,
                                           const CosetDecomposition& cosets_A,
                                           const Permutation& g) {
    std::uint32_t gi = G.index_of(g); // throws ElementNotInGroup if g outside G
    (void)gi;
    auto coset_ids = [&](const Permutation& x) {
        std::vector<std::uint32_t> ids;
        ids.reserve(A.order());
        for (const auto& a : A.elements()) ids.push_back(cosets_A.coset_of(G.index_of(a * x)));
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        return ids;
    };
    DoubleCosetUnion dc;
    dc.seed = g;
    dc.base_order = A.order();
    dc.forward_cosets = coset_ids(g);
    std::vector<std::uint32_t> backward = coset_ids(g.inverse());
    dc.symmetric = (dc.forward_cosets == backward);
    dc.cosets = dc.forward_cosets;
    dc.cosets.insert(dc.cosets.end(), backward.begin(), backward.end());
    std::sort(dc.cosets.begin(), dc.cosets.end());
    dc.cosets.erase(std::unique(dc.cosets.begin(), dc.cosets.end()), dc.cosets.end());
    return dc;
}

inline DoubleCosetUnion double_coset_union(const PermGroup& G, const PermGroup& A,
                                           const Permutation& g) {
    require_subgroup(G, A, "double_coset_union requires A <= G");
    return double_coset_union(G, A, left_cosets(G, A), g);
}

/// Partition G into A{g,g^-1}A union classes, seeded by the minimal coset
/// representative of each class, in canonical order.
inline std::vector<DoubleCosetUnion> double_coset_union_classes(const PermGroup& G,
                                                                const PermGroup& A,
                                                                const CosetDecomposition& cosets_A) {
    std::vector<bool> covered(cosets_A.coset_count(), false);
    std::vector<DoubleCosetUnion> classes;
    for (std::uint32_t c = 0; c < cosets_A.coset_count(); ++c) {
        if (covered[c]) continue;
        DoubleCosetUnion dc = double_coset_union(G, A, cosets_A, cosets_A.representative(c));
        for (std::uint32_t id : dc.cosets) covered[id] = true;
        classes.push_back(std::move(dc));
    }
    return classes;
}

} // namespace pcode
