#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pcode/search.hpp"

namespace pcode {

/// A validated triple H <= A <= G with the coset bookkeeping every decision
/// procedure needs.
struct PairInstance {
    PermGroup G;
    PermGroup A;
    PermGroup H;
    CosetDecomposition cosets_A_in_G;
    CosetDecomposition cosets_H_in_G;
};

inline PairInstance make_pair_instance(PermGroup G, PermGroup A, PermGroup H) {
    require_subgroup(G, A, "pair instance requires A <= G");
    require_subgroup(A, H, "pair instance requires H <= A");
    PairInstance inst{std::move(G), std::move(A), std::move(H), {}, {}};
    inst.cosets_A_in_G = left_cosets(inst.G, inst.A);
    inst.cosets_H_in_G = left_cosets(inst.G, inst.H);
    return inst;
}

enum class Status { PerfectCode, NotPerfectCode, Unknown };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::PerfectCode: return "PerfectCode";
        case Status::NotPerfectCode: return "NotPerfectCode";
        case Status::Unknown: return "Unknown";
    }
    return "?";
}

/// Decision outcome with a machine-checkable certificate: a PerfectCode
/// verdict carries a transversal witness that is re-verified before the
/// verdict is returned; a NotPerfectCode verdict names the deciding route and
/// the violating element or exhausted search.
struct Verdict {
    Status status = Status::Unknown;
    std::string reason;                       // deciding route, human-readable tag
    std::vector<Permutation> witness;         // transversal X when PerfectCode
    std::optional<Permutation> violating;     // element violating a necessary condition
    std::vector<std::string> certificates;    // named sub-certificates
    std::uint64_t search_nodes = 0;

    bool positive() const { return status == Status::PerfectCode; }
};

struct ConditionReport {
    bool holds = true;
    std::optional<Permutation> violating;
};

// --- witness checks (direct recomputation, no search machinery) ------------

inline bool is_left_transversal(const PermGroup& G, const CosetDecomposition& cosets_A,
                                const std::vector<Permutation>& X) {
    if (X.size() != cosets_A.coset_count()) return false;
    std::vector<bool> hit(cosets_A.coset_count(), false);
    for (const auto& x : X) {
        auto idx = G.find_index(x);
        if (!idx) return false;
        std::uint32_t c = cosets_A.coset_of(*idx);
        if (hit[c]) return false;
        hit[c] = true;
    }
    return true;
}

/// XH = HX^-1 checked literally, element by element.
inline bool pair_witness_valid(const PermGroup& G, const CosetDecomposition& cosets_A,
                               const PermGroup& H, const std::vector<Permutation>& X) {
    if (!is_left_transversal(G, cosets_A, X)) return false;
    std::vector<std::uint32_t> xh, hxi;
    xh.reserve(X.size() * H.order());
    hxi.reserve(xh.capacity());
    for (const auto& x : X) {
        Permutation xinv = x.inverse();
        for (const auto& h : H.elements()) {
            xh.push_back(G.index_of(x * h));
            hxi.push_back(G.index_of(h * xinv));
        }
    }
    std::sort(xh.begin(), xh.end());
    std::sort(hxi.begin(), hxi.end());
    return xh == hxi;
}

inline bool pair_witness_valid(const PairInstance& inst, const std::vector<Permutation>& X) {
    return pair_witness_valid(inst.G, inst.cosets_A_in_G, inst.H, X);
}

/// Inverse-closed X with XH = HX, both checked literally.
inline bool commuting_witness_valid(const PairInstance& inst, const std::vector<Permutation>& X) {
    if (!is_left_transversal(inst.G, inst.cosets_A_in_G, X)) return false;
    std::vector<std::uint32_t> xh, hx;
    std::vector<bool> in_x(inst.G.order(), false);
    for (const auto& x : X) {
        auto idx = inst.G.find_index(x);
        if (!idx) return false;
        in_x[*idx] = true;
    }
    for (const auto& x : X) {
        if (!in_x[inst.G.index_of(x.inverse())]) return false;
        for (const auto& h : inst.H.elements()) {
            xh.push_back(inst.G.index_of(x * h));
            hx.push_back(inst.G.index_of(h * x));
        }
    }
    std::sort(xh.begin(), xh.end());
    std::sort(hx.begin(), hx.end());
    xh.erase(std::unique(xh.begin(), xh.end()), xh.end());
    hx.erase(std::unique(hx.begin(), hx.end()), hx.end());
    return xh == hx;
}

// --- single-group criteria --------------------------------------------------

namespace detail {

inline std::size_t conjugate_intersection_order(const PermGroup& A, const Permutation& x) {
    std::size_t count = 0;
    Permutation xi = x.inverse();
    for (const auto& a : A.elements())
        if (A.contains(xi * (a * x))) ++count;
    return count;
}

} // namespace detail

/// For each x in G with x^2 in A and |A| / |A n A^x| odd, some y in xA must
/// square to the identity.
inline ConditionReport involution_parity_criterion(const PermGroup& G, const PermGroup& A) {
    require_subgroup(G, A, "condition requires A <= G");
    for (const auto& x : G.elements()) {
        if (!A.contains(x * x)) continue;
        std::size_t ratio = A.order() / detail::conjugate_intersection_order(A, x);
        if (ratio % 2 == 0) continue;
        bool found = false;
        for (const auto& a : A.elements()) {
            Permutation y = x * a;
            if ((y * y).is_identity()) {
                found = true;
                break;
            }
        }
        if (!found) return {false, x};
    }
    return {true, std::nullopt};
}

/// Variant trigger: AxA = Ax^-1A (equivalently x^-1 in AxA) instead of
/// x^2 in A.
inline ConditionReport double_coset_trigger_criterion(const PermGroup& G, const PermGroup& A) {
    require_subgroup(G, A, "condition requires A <= G");
    CosetDecomposition cosA = left_cosets(G, A);
    for (const auto& x : G.elements()) {
        std::uint32_t target = cosA.coset_of(G.index_of(x.inverse()));
        bool symmetric = false;
        for (const auto& a : A.elements()) {
            if (cosA.coset_of(G.index_of(a * x)) == target) {
                symmetric = true;
                break;
            }
        }
        if (!symmetric) continue;
        std::size_t ratio = A.order() / detail::conjugate_intersection_order(A, x);
        if (ratio % 2 == 0) continue;
        bool found = false;
        for (const auto& a : A.elements()) {
            Permutation y = x * a;
            if ((y * y).is_identity()) {
                found = true;
                break;
            }
        }
        if (!found) return {false, x};
    }
    return {true, std::nullopt};
}

/// Whole-group backtracking search for an inverse-closed left transversal of
/// A in G. Returns nothing after exhausting the (pruned) search space.
inline std::optional<std::vector<Permutation>> find_inverse_closed_transversal(
    const PermGroup& G, const PermGroup& A, std::uint64_t budget = kDefaultSearchBudget,
    std::uint64_t* nodes_out = nullptr) {
    require_subgroup(G, A, "transversal search requires A <= G");
    CosetDecomposition cosA = left_cosets(G, A);
    CosetDecomposition cosTriv = left_cosets(G, PermGroup::trivial(G.degree()));
    TransversalSearch search(G, cosA, cosTriv);
    TransversalSearch::Options opts;
    opts.require_inverse_closed_elements = true;
    opts.budget = budget;
    auto result = search.run_all(opts);
    if (nodes_out) *nodes_out += result.nodes;
    require(result.outcome != TransversalSearch::Outcome::BudgetExceeded,
            ErrorCode::BudgetExceeded, "inverse-closed transversal search exceeded budget");
    if (result.outcome != TransversalSearch::Outcome::Found) return std::nullopt;
    std::vector<Permutation> X;
    X.reserve(result.chosen_elements.size());
    for (std::uint32_t idx : result.chosen_elements) X.push_back(G.element(idx));
    return X;
}

/// Per-double-coset-union criterion: every A{g,g^-1}A must contain an
/// inverse-closed left transversal of A. Each union class is searched
/// independently.
inline bool per_class_transversal_criterion(const PermGroup& G, const PermGroup& A,
                                     std::uint64_t budget = kDefaultSearchBudget,
                                     std::uint64_t* nodes_out = nullptr) {
    require_subgroup(G, A, "per-class criterion requires A <= G");
    CosetDecomposition cosA = left_cosets(G, A);
    CosetDecomposition cosTriv = left_cosets(G, PermGroup::trivial(G.degree()));
    TransversalSearch search(G, cosA, cosTriv);
    for (const auto& dc : double_coset_union_classes(G, A, cosA)) {
        TransversalSearch::Options opts;
        opts.require_inverse_closed_elements = true;
        opts.budget = budget;
        auto result = search.run(dc.cosets, opts);
        if (nodes_out) *nodes_out += result.nodes;
        require(result.outcome != TransversalSearch::Outcome::BudgetExceeded,
                ErrorCode::BudgetExceeded, "per-class transversal search exceeded budget");
        if (result.outcome != TransversalSearch::Outcome::Found) return false;
    }
    return true;
}

/// Decide whether A is a perfect code of G: the involution-parity criterion
/// decides, and a positive answer is certified by an explicit inverse-closed
/// transversal. The two routes must agree.
inline Verdict is_perfect_code_group(const PermGroup& G, const PermGroup& A) {
    Verdict v;
    ConditionReport c = involution_parity_criterion(G, A);
    if (!c.holds) {
        v.status = Status::NotPerfectCode;
        v.reason = "involution-parity-criterion";
        v.violating = c.violating;
        v.certificates.push_back("coset " + c.violating->to_cycle_string() +
                                 "A has odd conjugate-intersection ratio and no involution");
        return v;
    }
    auto X = find_inverse_closed_transversal(G, A, kDefaultSearchBudget, &v.search_nodes);
    require(X.has_value(), ErrorCode::ConsistencyViolation,
            "involution-parity criterion positive but no inverse-closed transversal found");
    require(pair_witness_valid(G, left_cosets(G, A), PermGroup::trivial(G.degree()), *X),
            ErrorCode::ConsistencyViolation, "transversal witness failed re-verification");
    v.status = Status::PerfectCode;
    v.reason = "involution-parity-criterion+inverse-closed-transversal";
    v.witness = std::move(*X);
    return v;
}

// --- pair criteria -----------------------------------------------------------

/// Exhaustive (pruned) search for a left transversal X of A in G with
/// XH = HX^-1. One representative per left A-coset; candidates inducing an
/// already-tried H-coset are pruned since XH depends only on the H-cosets.
inline Verdict pair_transversal_exhaustive(const PairInstance& inst,
                                           std::uint64_t budget = kDefaultSearchBudget) {
    Verdict v;
    TransversalSearch search(inst.G, inst.cosets_A_in_G, inst.cosets_H_in_G);
    TransversalSearch::Options opts;
    opts.require_inverse_closed_bundles = true;
    opts.budget = budget;
    auto result = search.run_all(opts);
    v.search_nodes = result.nodes;
    switch (result.outcome) {
        case TransversalSearch::Outcome::Found: {
            std::vector<Permutation> X;
            X.reserve(result.chosen_elements.size());
            for (std::uint32_t idx : result.chosen_elements) X.push_back(inst.G.element(idx));
            require(pair_witness_valid(inst, X), ErrorCode::ConsistencyViolation,
                    "pair transversal witness failed re-verification");
            v.status = Status::PerfectCode;
            v.reason = "exhaustive-pair-transversal";
            v.witness = std::move(X);
            break;
        }
        case TransversalSearch::Outcome::Exhausted:
            v.status = Status::NotPerfectCode;
            v.reason = "exhaustive-pair-transversal";
            v.certificates.push_back("search exhausted after " + std::to_string(result.nodes) +
                                     " nodes");
            break;
        case TransversalSearch::Outcome::BudgetExceeded:
            v.status = Status::Unknown;
            v.reason = "budget-exceeded";
            break;
    }
    return v;
}

/// Necessary condition for A to be a perfect code of the pair: for each left
/// A-coset gA, either |A{g,g^-1}A| / |A| is even, or gA contains x with
/// x^2 in some A-conjugate of H. The predicate is computed from the coset, so
/// it cannot depend on the choice of representative.
inline ConditionReport pair_necessary_condition(const PairInstance& inst) {
    std::vector<bool> squares_target(inst.G.order(), false);
    for (const auto& y : inst.A.elements())
        for (const auto& h : inst.H.elements())
            squares_target[inst.G.index_of(h.conjugated_by(y))] = true;

    const auto& cosA = inst.cosets_A_in_G;
    for (std::uint32_t c = 0; c < cosA.coset_count(); ++c) {
        DoubleCosetUnion dc = double_coset_union(inst.G, inst.A, cosA, cosA.representative(c));
        if (dc.ratio() % 2 == 0) continue;
        bool found = false;
        for (std::uint32_t m : cosA.members(c)) {
            const Permutation& x = inst.G.element(m);
            if (squares_target[inst.G.index_of(x * x)]) {
                found = true;
                break;
            }
        }
        if (!found) return {false, cosA.representative(c)};
    }
    return {true, std::nullopt};
}

/// Normalizer-closure obstruction: if H is nonnormal in G, H is a perfect
/// code of G, and H^G <= A <= N_G(H), then A cannot be a perfect code of the
/// pair. Returns the three sub-certificates when it fires.
inline std::optional<Verdict> normalizer_closure_obstruction(const PairInstance& inst) {
    std::optional<Permutation> nonnormal_witness;
    std::vector<Permutation> hgens =
        inst.H.generators().empty() ? inst.H.small_generating_set() : inst.H.generators();
    for (const auto& g : inst.G.elements()) {
        for (const auto& h : hgens) {
            if (!inst.H.contains(h.conjugated_by(g))) {
                nonnormal_witness = g;
                break;
            }
        }
        if (nonnormal_witness) break;
    }
    if (!nonnormal_witness) return std::nullopt; // H normal in G

    Verdict h_code = is_perfect_code_group(inst.G, inst.H);
    if (!h_code.positive()) return std::nullopt;

    PermGroup closure_H = normal_closure(inst.G, inst.H);
    if (!closure_H.is_subgroup_of(inst.A)) return std::nullopt;
    PermGroup norm_H = normalizer(inst.G, inst.H);
    if (!inst.A.is_subgroup_of(norm_H)) return std::nullopt;

    Verdict v;
    v.status = Status::NotPerfectCode;
    v.reason = "normalizer-closure-obstruction";
    v.search_nodes = h_code.search_nodes;
    v.certificates.push_back("H nonnormal: conjugation by " +
                             nonnormal_witness->to_cycle_string() + " moves H");
    v.certificates.push_back("H is a perfect code of G (transversal witness of size " +
                             std::to_string(h_code.witness.size()) + ")");
    v.certificates.push_back("normal closure of H has order " + std::to_string(closure_H.order()) +
                             " and lies in A");
    v.certificates.push_back("A lies in the normalizer of H, of order " +
                             std::to_string(norm_H.order()));
    v.violating = nonnormal_witness;
    return v;
}

namespace detail {

/// Shared engine for the commuting inverse-closed transversal criteria.
/// scope_per_class = false searches the whole group at once.
inline TransversalSearch::Result commuting_transversal_search(
    const PairInstance& inst, bool per_class, std::uint64_t budget,
    std::vector<Permutation>* witness_out) {
    TransversalSearch search(inst.G, inst.cosets_A_in_G, inst.cosets_H_in_G);
    TransversalSearch::Options opts;
    opts.require_inverse_closed_elements = true;
    opts.require_inverse_closed_bundles = true;
    opts.budget = budget;

    TransversalSearch::Result total;
    total.outcome = TransversalSearch::Outcome::Found;
    if (!per_class) {
        total = search.run_all(opts);
    } else {
        for (const auto& dc :
             double_coset_union_classes(inst.G, inst.A, inst.cosets_A_in_G)) {
            auto result = search.run(dc.cosets, opts);
            total.nodes += result.nodes;
            if (result.outcome != TransversalSearch::Outcome::Found) {
                total.outcome = result.outcome;
                return total;
            }
            total.chosen_elements.insert(total.chosen_elements.end(),
                                         result.chosen_elements.begin(),
                                         result.chosen_elements.end());
        }
    }
    if (witness_out && total.outcome == TransversalSearch::Outcome::Found) {
        witness_out->clear();
        for (std::uint32_t idx : total.chosen_elements)
            witness_out->push_back(inst.G.element(idx));
    }
    return total;
}

inline void require_code_hypothesis(const PairInstance& inst) {
    ConditionReport h = involution_parity_criterion(inst.G, inst.H);
    require(h.holds, ErrorCode::HypothesisNotMet,
            "H is not a perfect code of G; the commuting-transversal criteria do not apply");
}

} // namespace detail

/// Inverse-closed left transversal X of A in G with XH = HX, searched over
/// the whole group. Only defined when H is a perfect code of G; refuses
/// otherwise.
inline std::optional<std::vector<Permutation>> commuting_transversal_witness(
    const PairInstance& inst, std::uint64_t budget = kDefaultSearchBudget,
    std::uint64_t* nodes_out = nullptr) {
    detail::require_code_hypothesis(inst);
    std::vector<Permutation> X;
    auto result = detail::commuting_transversal_search(inst, false, budget, &X);
    if (nodes_out) *nodes_out += result.nodes;
    require(result.outcome != TransversalSearch::Outcome::BudgetExceeded,
            ErrorCode::BudgetExceeded, "commuting transversal search exceeded budget");
    if (result.outcome != TransversalSearch::Outcome::Found) return std::nullopt;
    require(commuting_witness_valid(inst, X), ErrorCode::ConsistencyViolation,
            "commuting transversal witness failed re-verification");
    return X;
}

/// Per-class variant: each A{g,g^-1}A must contain an inverse-closed left
/// transversal Y of A that is also a left transversal of H in HYH.
inline bool per_class_commuting_criterion(const PairInstance& inst,
                              std::uint64_t budget = kDefaultSearchBudget,
                              std::uint64_t* nodes_out = nullptr) {
    detail::require_code_hypothesis(inst);
    auto result = detail::commuting_transversal_search(inst, true, budget, nullptr);
    if (nodes_out) *nodes_out += result.nodes;
    require(result.outcome != TransversalSearch::Outcome::BudgetExceeded,
            ErrorCode::BudgetExceeded, "per-class commuting transversal search exceeded budget");
    return result.outcome == TransversalSearch::Outcome::Found;
}

/// Full decision pipeline for "is A a perfect code of the pair (G, H)":
///   1. necessary condition (parity / conjugate square);
///   2. normalizer-closure obstruction;
///   3. when H is a perfect code of G, the commuting-transversal criterion
///      decides (searched per double-coset class, witness re-verified);
///   4. otherwise the raw exhaustive pair-transversal search.
/// Unknown is only reachable through budget exhaustion in steps 3-4.
inline Verdict decide_pair(const PairInstance& inst,
                           std::uint64_t budget = kDefaultSearchBudget) {
    Verdict v;
    ConditionReport necessary = pair_necessary_condition(inst);
    if (!necessary.holds) {
        v.status = Status::NotPerfectCode;
        v.reason = "pair-necessary-condition";
        v.violating = necessary.violating;
        v.certificates.push_back("coset " + necessary.violating->to_cycle_string() +
                                 "A: ratio odd and no element squares into a conjugate of H");
        return v;
    }

    if (auto obstruction = normalizer_closure_obstruction(inst)) return *obstruction;

    ConditionReport h_code = involution_parity_criterion(inst.G, inst.H);
    if (h_code.holds) {
        std::vector<Permutation> X;
        auto result = detail::commuting_transversal_search(inst, true, budget, &X);
        v.search_nodes += result.nodes;
        if (result.outcome == TransversalSearch::Outcome::Found) {
            require(commuting_witness_valid(inst, X), ErrorCode::ConsistencyViolation,
                    "commuting transversal witness failed re-verification");
            require(pair_witness_valid(inst, X), ErrorCode::ConsistencyViolation,
                    "commuting transversal is not a pair witness");
            v.status = Status::PerfectCode;
            v.reason = "commuting-involutory-transversal";
            v.witness = std::move(X);
            return v;
        }
        if (result.outcome == TransversalSearch::Outcome::Exhausted) {
            v.status = Status::NotPerfectCode;
            v.reason = "commuting-involutory-transversal";
            v.certificates.push_back("no commuting inverse-closed transversal in some class");
            return v;
        }
        // budget exceeded: fall through to the raw search
    }

    Verdict raw = pair_transversal_exhaustive(inst, budget);
    raw.search_nodes += v.search_nodes;
    return raw;
}

/// Perfect-code status of A in G must match that of a Sylow 2-subgroup of A.
/// Both sides are computed; disagreement is an internal error.
inline bool sylow_reduction_check(const PermGroup& G, const PermGroup& A) {
    require_subgroup(G, A, "sylow reduction requires A <= G");
    Verdict full = is_perfect_code_group(G, A);
    PermGroup P = sylow_2(A);
    Verdict part = is_perfect_code_group(G, P);
    require(full.positive() == part.positive(), ErrorCode::ConsistencyViolation,
            "perfect-code status disagrees with the Sylow-2 reduction");
    return full.positive();
}

} // namespace pcode
