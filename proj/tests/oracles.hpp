// Brute-force reference computations for the test suite. Everything here is
// deliberately naive and independent of the library's algorithms: fixpoint
// closures, full set products, and odometer enumeration over raw candidate
// tuples.
#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "pcode/perm_group.hpp"

namespace oracle {

using pcode::PermGroup;
using pcode::Permutation;

using PermSet = std::set<Permutation>;

/// Closure by repeated full set products: S := S u S*S until stable.
inline PermSet naive_closure(std::size_t degree, const std::vector<Permutation>& gens) {
    PermSet S;
    S.insert(Permutation::identity(degree));
    for (const auto& g : gens) S.insert(g);
    for (const auto& g : gens) S.insert(g.inverse());
    while (true) {
        PermSet next = S;
        for (const auto& a : S)
            for (const auto& b : S) next.insert(a * b);
        if (next.size() == S.size()) return S;
        S = std::move(next);
    }
}

/// Full set product AxB = {a * x * b}.
inline PermSet naive_double_coset(const PermSet& A, const Permutation& x, const PermSet& B) {
    PermSet out;
    for (const auto& a : A)
        for (const auto& b : B) out.insert(a * (x * b));
    return out;
}

inline PermSet to_set(const std::vector<Permutation>& v) { return PermSet(v.begin(), v.end()); }

inline bool inverse_closed(const PermSet& S) {
    for (const auto& p : S)
        if (!S.count(p.inverse())) return false;
    return true;
}

/// XH as a set.
inline PermSet product_set(const std::vector<Permutation>& X, const PermSet& H) {
    PermSet out;
    for (const auto& x : X)
        for (const auto& h : H) out.insert(x * h);
    return out;
}

/// HX^-1 as a set.
inline PermSet mirror_product_set(const PermSet& H, const std::vector<Permutation>& X) {
    PermSet out;
    for (const auto& h : H)
        for (const auto& x : X) out.insert(h * x.inverse());
    return out;
}

/// All left cosets xA of A in G as element lists (insertion order by G's
/// canonical order).
inline std::vector<std::vector<Permutation>> naive_left_cosets(const PermGroup& G,
                                                               const PermGroup& A) {
    std::vector<std::vector<Permutation>> cosets;
    PermSet assigned;
    for (const auto& g : G.elements()) {
        if (assigned.count(g)) continue;
        std::vector<Permutation> coset;
        for (const auto& a : A.elements()) {
            Permutation x = g * a;
            coset.push_back(x);
            assigned.insert(x);
        }
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

/// Enumerate every transversal (odometer over the coset lists) and return the
/// first one passing `accept`. Only usable when prod |A|^index is small.
template <typename F>
inline std::optional<std::vector<Permutation>> first_transversal_such_that(
    const std::vector<std::vector<Permutation>>& cosets, F&& accept) {
    std::vector<std::size_t> pick(cosets.size(), 0);
    while (true) {
        std::vector<Permutation> X;
        X.reserve(cosets.size());
        for (std::size_t i = 0; i < cosets.size(); ++i) X.push_back(cosets[i][pick[i]]);
        if (accept(X)) return X;
        std::size_t i = 0;
        while (i < cosets.size() && ++pick[i] == cosets[i].size()) pick[i++] = 0;
        if (i == cosets.size()) return std::nullopt;
    }
}

} // namespace oracle
