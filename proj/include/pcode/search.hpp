#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "pcode/cosets.hpp"

namespace pcode {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Backtracking search for left transversals X of A in G subject to
/// inverse-closure constraints, at two granularities:
///
///   require_inverse_closed_elements:  X = X^-1 elementwise;
///   require_inverse_closed_bundles:   the union of left H-cosets XH is
///                                     inverse-closed as a set.
///
/// Since (XH)^-1 = HX^-1 always, the bundle constraint is exactly the
/// transversal condition XH = HX^-1; with X = X^-1 it is exactly XH = HX.
///
/// The search picks one element (or one H-coset, when only the bundle
/// constraint is active) per left A-coset. Choices within one A-coset that
/// induce the same H-coset give the same XH, so bundle-level branching prunes
/// the raw transversal space without losing completeness. Constraint
/// propagation forces inverse partners immediately; branching follows a
/// fewest-candidates-first rule with canonical tie-breaks, so traversal order
/// and node counts are deterministic.
class TransversalSearch {
public:
    enum class Outcome { Found, Exhausted, BudgetExceeded };

    struct Options {
        bool require_inverse_closed_elements = false;
        bool require_inverse_closed_bundles = false;
        std::uint64_t budget = kDefaultSearchBudget;
    };

    struct Result {
        Outcome outcome = Outcome::Exhausted;
        std::vector<std::uint32_t> chosen_elements; // indices into G, by scope coset order
        std::uint64_t nodes = 0;
    };

    TransversalSearch(const PermGroup& G, const CosetDecomposition& cosets_A,
                      const CosetDecomposition& cosets_H)
        : cosA_(cosets_A), cosH_(cosets_H) {
        const std::size_t n = G.order();
        inverse_of_.resize(n);
        for (std::uint32_t i = 0; i < n; ++i)
            inverse_of_[i] = G.index_of(G.element(i).inverse());

        const std::size_t nh = cosH_.coset_count();
        bundle_owner_.resize(nh);
        bundle_inverse_.resize(nh);
        for (std::uint32_t b = 0; b < nh; ++b) {
            const auto& members = cosH_.members(b);
            bundle_owner_[b] = cosA_.coset_of(members.front());
            std::vector<std::uint32_t> inv;
            inv.reserve(members.size());
            for (std::uint32_t m : members) inv.push_back(cosH_.coset_of(inverse_of_[m]));
            std::sort(inv.begin(), inv.end());
            inv.erase(std::unique(inv.begin(), inv.end()), inv.end());
            bundle_inverse_[b] = std::move(inv);
        }

        bundles_in_coset_.resize(cosA_.coset_count());
        for (std::uint32_t b = 0; b < nh; ++b) bundles_in_coset_[bundle_owner_[b]].push_back(b);
        for (auto& list : bundles_in_coset_) std::sort(list.begin(), list.end());
    }

    /// Search over the given A-cosets (must be closed under taking inverses
    /// of their elements). Pass all coset ids for a whole-group search.
    Result run(const std::vector<std::uint32_t>& scope, const Options& opts) {
        opts_ = opts;
        nodes_ = 0;
        budget_hit_ = false;
        scope_ = scope;
        in_scope_.assign(cosA_.coset_count(), false);
        for (std::uint32_t c : scope_) in_scope_[c] = true;
        elem_choice_.assign(cosA_.coset_count(), kNone);
        bundle_choice_.assign(cosH_.coset_count() ? cosA_.coset_count() : 0, kNone);
        trail_.clear();

        Result result;
        bool found = dfs();
        result.nodes = nodes_;
        if (budget_hit_) {
            result.outcome = Outcome::BudgetExceeded;
            return result;
        }
        if (!found) {
            result.outcome = Outcome::Exhausted;
            return result;
        }
        result.outcome = Outcome::Found;
        result.chosen_elements.reserve(scope_.size());
        for (std::uint32_t c : scope_) {
            if (element_level()) {
                result.chosen_elements.push_back(static_cast<std::uint32_t>(elem_choice_[c]));
            } else {
                // minimal element of the chosen H-coset
                std::uint32_t bundle = static_cast<std::uint32_t>(bundle_choice_[c]);
                result.chosen_elements.push_back(cosH_.members(bundle).front());
            }
        }
        return result;
    }

    Result run_all(const Options& opts) {
        std::vector<std::uint32_t> scope(cosA_.coset_count());
        for (std::uint32_t c = 0; c < scope.size(); ++c) scope[c] = c;
        return run(scope, opts);
    }

private:
    static constexpr std::int64_t kNone = -1;

    bool element_level() const { return opts_.require_inverse_closed_elements; }

    bool decided(std::uint32_t c) const {
        return (element_level() ? elem_choice_[c] : bundle_choice_[c]) != kNone;
    }

    struct TrailEntry {
        bool is_elem;
        std::uint32_t coset;
    };

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            TrailEntry e = trail_.back();
            trail_.pop_back();
            if (e.is_elem)
                elem_choice_[e.coset] = kNone;
            else
                bundle_choice_[e.coset] = kNone;
        }
    }

    bool set_bundle(std::uint32_t c, std::uint32_t bundle) {
        require(in_scope_[c], ErrorCode::ConsistencyViolation,
                "search scope is not inverse-closed");
        if (bundle_choice_[c] != kNone) return bundle_choice_[c] == bundle;
        if (elem_choice_[c] != kNone &&
            cosH_.coset_of(static_cast<std::uint32_t>(elem_choice_[c])) != bundle)
            return false;
        bundle_choice_[c] = bundle;
        trail_.push_back({false, c});
        if (opts_.require_inverse_closed_bundles) {
            for (std::uint32_t partner : bundle_inverse_[bundle])
                if (!set_bundle(bundle_owner_[partner], partner)) return false;
        }
        return true;
    }

    bool set_elem(std::uint32_t c, std::uint32_t x) {
        if (elem_choice_[c] != kNone) return elem_choice_[c] == static_cast<std::int64_t>(x);
        std::uint32_t bundle = cosH_.coset_of(x);
        if (bundle_choice_[c] != kNone && bundle_choice_[c] != static_cast<std::int64_t>(bundle))
            return false;
        elem_choice_[c] = x;
        trail_.push_back({true, c});
        if (bundle_choice_[c] == kNone && !set_bundle(c, bundle)) return false;
        if (opts_.require_inverse_closed_elements) {
            std::uint32_t xi = inverse_of_[x];
            if (!set_elem(cosA_.coset_of(xi), xi)) return false;
        }
        return true;
    }

    bool elem_candidate_ok(std::uint32_t c, std::uint32_t x) const {
        if (bundle_choice_[c] != kNone &&
            bundle_choice_[c] != static_cast<std::int64_t>(cosH_.coset_of(x)))
            return false;
        std::uint32_t xi = inverse_of_[x];
        std::uint32_t ci = cosA_.coset_of(xi);
        if (elem_choice_[ci] != kNone && elem_choice_[ci] != static_cast<std::int64_t>(xi))
            return false;
        if (bundle_choice_[ci] != kNone &&
            bundle_choice_[ci] != static_cast<std::int64_t>(cosH_.coset_of(xi)))
            return false;
        return true;
    }

    std::size_t count_candidates(std::uint32_t c, std::size_t cutoff) const {
        std::size_t count = 0;
        if (element_level()) {
            for (std::uint32_t x : cosA_.members(c)) {
                if (elem_candidate_ok(c, x) && ++count >= cutoff) break;
            }
        } else {
            count = bundles_in_coset_[c].size();
        }
        return count;
    }

    bool dfs() {
        // fewest-candidates-first; ties break to the lowest coset id
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        std::size_t best_count = std::numeric_limits<std::size_t>::max();
        for (std::uint32_t c : scope_) {
            if (decided(c)) continue;
            std::size_t count = count_candidates(c, best_count);
            if (count < best_count) {
                best_count = count;
                best = c;
                if (count <= 1) break;
            }
        }
        if (best == std::numeric_limits<std::uint32_t>::max()) return true; // complete

        if (element_level()) {
            for (std::uint32_t x : cosA_.members(best)) {
                if (!elem_candidate_ok(best, x)) continue;
                if (++nodes_ > opts_.budget) {
                    budget_hit_ = true;
                    return false;
                }
                std::size_t mark = trail_.size();
                if (set_elem(best, x) && dfs()) return true;
                undo_to(mark);
                if (budget_hit_) return false;
            }
        } else {
            for (std::uint32_t bundle : bundles_in_coset_[best]) {
                if (++nodes_ > opts_.budget) {
                    budget_hit_ = true;
                    return false;
                }
                std::size_t mark = trail_.size();
                if (set_bundle(best, bundle) && dfs()) return true;
                undo_to(mark);
                if (budget_hit_) return false;
            }
        }
        return false;
    }

    const CosetDecomposition& cosA_;
    const CosetDecomposition& cosH_;

    std::vector<std::uint32_t> inverse_of_;
    std::vector<std::uint32_t> bundle_owner_;
    std::vector<std::vector<std::uint32_t>> bundle_inverse_;
    std::vector<std::vector<std::uint32_t>> bundles_in_coset_;

    Options opts_;
    std::vector<std::uint32_t> scope_;
    std::vector<bool> in_scope_;
    std::vector<std::int64_t> elem_choice_;
    std::vector<std::int64_t> bundle_choice_;
    std::vector<TrailEntry> trail_;
    std::uint64_t nodes_ = 0;
    bool budget_hit_ = false;
};

} // namespace pcode
