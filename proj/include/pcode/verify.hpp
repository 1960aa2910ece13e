#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <future>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pcode/graphs.hpp"
#include "pcode/presets.hpp"

namespace pcode::verify {

struct Options {
    std::uint64_t budget = kDefaultSearchBudget; // 1e8 nodes
    unsigned threads = 1;
    bool stretch = false; // adds the degree-7 survey row
};

/// One verification criterion: every threshold it enforces (budgets, runtime
/// caps, sample sizes) is pinned here in code.
struct CriterionResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> details;
    std::int64_t elapsed_ms = 0;
    long limit_seconds = 0; // 0 = no cap
};

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline void enforce_runtime(CriterionResult& r) {
    if (r.limit_seconds > 0 && r.elapsed_ms > r.limit_seconds * 1000) {
        r.pass = false;
        r.details.push_back("runtime " + std::to_string(r.elapsed_ms) + " ms exceeded the " +
                            std::to_string(r.limit_seconds) + " s cap");
    }
}

template <typename Body>
CriterionResult run_criterion(std::string name, long limit_seconds, Body&& body) {
    CriterionResult r;
    r.name = std::move(name);
    r.limit_seconds = limit_seconds;
    Stopwatch watch;
    try {
        r.pass = body(r);
    } catch (const Error& e) {
        r.pass = false;
        r.details.push_back(std::string("error: ") + e.what());
    }
    r.elapsed_ms = watch.ms();
    enforce_runtime(r);
    return r;
}

} // namespace detail

/// Named small groups scanned by the agreement criterion: classics of order
/// <= 48 plus the small members of both field families.
inline std::vector<std::pair<std::string, PermGroup>> small_group_catalog() {
    std::vector<std::pair<std::string, PermGroup>> catalog;
    catalog.emplace_back("C4", PermGroup::cyclic(4));
    catalog.emplace_back("C6", PermGroup::cyclic(6));
    catalog.emplace_back("C8", PermGroup::cyclic(8));
    catalog.emplace_back("C12", PermGroup::cyclic(12));
    catalog.emplace_back("C2xC2", parse_group("[(1 2),(3 4)]"));
    catalog.emplace_back("C2xC2xC2", parse_group("[(1 2),(3 4),(5 6)]"));
    catalog.emplace_back("C2xC4", parse_group("[(1 2),(3 4 5 6)]"));
    catalog.emplace_back("D8", PermGroup::dihedral(4));
    catalog.emplace_back("D10", PermGroup::dihedral(5));
    catalog.emplace_back("D12", PermGroup::dihedral(6));
    catalog.emplace_back("D16", PermGroup::dihedral(8));
    catalog.emplace_back("D24", PermGroup::dihedral(12));
    catalog.emplace_back("Q8", generalized_quaternion(2));
    catalog.emplace_back("Q16", generalized_quaternion(4));
    catalog.emplace_back("A4", PermGroup::alternating(4));
    catalog.emplace_back("S4", PermGroup::symmetric(4));
    catalog.emplace_back("SL(2,3)", special_linear_2_3());
    catalog.emplace_back("GL(2,3)", general_linear_2_3());
    // small members of the two field families
    catalog.emplace_back("agammal(3,1).G", build_field_agammal(3, 1).instance.G);
    catalog.emplace_back("affine AGL(1,5)", build_affine(5).instance.A);
    {
        TripleSpec c2 = build_field_c2(2);
        catalog.emplace_back("fieldc2(2).A", c2.instance.A);
        catalog.emplace_back("fieldc2(2).H", c2.instance.H);
    }
    return catalog;
}

/// Criterion 1: the four single-group criteria (inverse-closed transversal,
/// involution-parity, double-coset trigger, per-class transversal) agree on
/// every subgroup of every catalog group and of Sym(n), n <= 5.
inline CriterionResult group_criteria_agreement(const Options& opts) {
    return detail::run_criterion(
        "group-code-criteria-agreement", 300, [&](CriterionResult& r) {
            auto catalog = small_group_catalog();
            for (std::size_t n = 1; n <= 5; ++n)
                catalog.emplace_back("S" + std::to_string(n), PermGroup::symmetric(n));

            std::size_t pairs = 0, disagreements = 0;
            for (const auto& [name, G] : catalog) {
                for (const auto& A : all_subgroups(G)) {
                    bool b = find_inverse_closed_transversal(G, A, opts.budget).has_value();
                    bool c = involution_parity_criterion(G, A).holds;
                    bool d = double_coset_trigger_criterion(G, A).holds;
                    bool per_class = per_class_transversal_criterion(G, A, opts.budget);
                    ++pairs;
                    if (b != c || c != d || d != per_class) {
                        ++disagreements;
                        r.details.push_back("disagreement at " + name + ", |A| = " +
                                            std::to_string(A.order()));
                    }
                }
            }
            r.details.push_back(std::to_string(pairs) + " (group, subgroup) pairs checked, " +
                                std::to_string(disagreements) + " disagreements");
            return disagreements == 0;
        });
}

/// Criterion 2: the dihedral family satisfies the pair necessary condition
/// for n in 1..5 while the exhaustive transversal search finds nothing.
inline CriterionResult dihedral_family_check(const Options& opts) {
    return detail::run_criterion("dihedral-family-counterexample", 120, [&](CriterionResult& r) {
        bool ok = true;
        for (long n = 1; n <= 5; ++n) {
            TripleSpec t = build_dihedral(n);
            // every left coset of A carries an involution (its square, the
            // identity, lies in every conjugate of H)
            bool every_coset = true;
            const auto& cosA = t.instance.cosets_A_in_G;
            for (std::uint32_t c = 0; c < cosA.coset_count(); ++c) {
                bool found = false;
                for (std::uint32_t m : cosA.members(c)) {
                    const Permutation& x = t.instance.G.element(m);
                    if ((x * x).is_identity()) found = true;
                }
                if (!found) every_coset = false;
            }
            bool necessary = pair_necessary_condition(t.instance).holds;
            Verdict search = pair_transversal_exhaustive(t.instance, opts.budget);
            bool refuted = search.status == Status::NotPerfectCode;
            r.details.push_back("n=" + std::to_string(n) + ": involution in every coset " +
                                (every_coset ? "yes" : "NO") + ", necessary-condition " +
                                (necessary ? "holds" : "FAILS") + ", search refuted in " +
                                std::to_string(search.search_nodes) + " nodes");
            ok = ok && every_coset && necessary && refuted;
        }
        return ok;
    });
}

/// Criterion 3: the characteristic-2 family has every off-A class ratio
/// exactly 2 and the normalizer-closure obstruction fires (d = 2 and 3);
/// for d = 2 the raw exhaustive search independently refutes within budget.
inline CriterionResult binary_field_family_check(const Options& opts) {
    return detail::run_criterion("binary-field-family-counterexample", 600,
                                 [&](CriterionResult& r) {
        bool ok = true;
        for (long d : {2L, 3L}) {
            TripleSpec t = build_field_c2(d);
            const PairInstance& inst = t.instance;

            bool ratios_even = true;
            for (const auto& dc :
                 double_coset_union_classes(inst.G, inst.A, inst.cosets_A_in_G)) {
                if (inst.A.contains(dc.seed)) continue;
                // |AgA|/|A| = |A|/|A n A^g| = 2, and the union adds nothing new
                if (dc.ratio() != 2 || dc.forward_cosets.size() != 2 || !dc.symmetric)
                    ratios_even = false;
            }

            // the three obstruction certificates, recomputed explicitly
            EmbeddedField emb = embed_permutations(*t.field);
            Permutation skew = perm_power(emb.singer, (std::uint64_t{1} << d) - 1);
            bool nonnormal_at_skew = false;
            for (const auto& h : inst.H.elements())
                if (!inst.H.contains(h.conjugated_by(skew))) nonnormal_at_skew = true;
            bool h_is_code = involution_parity_criterion(inst.G, inst.H).holds;
            bool sandwich = normal_closure(inst.G, inst.H).is_subgroup_of(inst.A) &&
                            inst.A.is_subgroup_of(normalizer(inst.G, inst.H));
            bool fired = normalizer_closure_obstruction(inst).has_value();

            bool independent_refutation = true;
            std::string search_note;
            if (d == 2) {
                Verdict raw = pair_transversal_exhaustive(inst, opts.budget);
                independent_refutation = raw.status == Status::NotPerfectCode;
                search_note = ", exhaustive search refuted in " +
                              std::to_string(raw.search_nodes) + " nodes";
            }
            r.details.push_back(
                "d=" + std::to_string(d) + ": |G|=" + std::to_string(inst.G.order()) +
                ", ratios=2 " + (ratios_even ? "yes" : "NO") + ", obstruction " +
                (fired ? "fired" : "SILENT") + " (H-code " + (h_is_code ? "yes" : "no") +
                ", skew-conjugate moves H " + (nonnormal_at_skew ? "yes" : "no") +
                ", sandwich " + (sandwich ? "yes" : "no") + ")" + search_note);
            ok = ok && ratios_even && fired && nonnormal_at_skew && h_is_code && sandwich &&
                 independent_refutation;
        }
        return ok;
    });
}

/// Criterion 4: the odd-characteristic family. For every (p, f) in the list,
/// the only symmetric class off A sits at the half-power of the Singer cycle
/// and carries a square landing in H; asymmetric classes have even ratio; A
/// has odd order and is itself a perfect code of G. For f = 3 the obstruction
/// fires; the f = 1 triples degenerate to A = H, where the obstruction must
/// stay silent and the pair decision is positive.
inline CriterionResult odd_field_family_check(const Options& opts) {
    return detail::run_criterion("odd-field-family-counterexample", 300,
                                 [&](CriterionResult& r) {
        bool ok = true;
        const std::vector<std::pair<long, long>> cases = {{3, 3}, {5, 3}, {3, 1}, {5, 1}, {7, 1}};
        for (auto [p, f] : cases) {
            TripleSpec t = build_field_agammal(p, f);
            const PairInstance& inst = t.instance;
            EmbeddedField emb = embed_permutations(*t.field);
            const std::uint32_t q = t.field->q();

            Permutation half = perm_power(emb.singer, (q - 1) / 2);
            std::uint32_t half_coset = inst.cosets_A_in_G.coset_of(inst.G.index_of(half));
            bool classes_ok = true;
            for (const auto& dc :
                 double_coset_union_classes(inst.G, inst.A, inst.cosets_A_in_G)) {
                if (inst.A.contains(dc.seed)) continue;
                bool is_half =
                    inst.cosets_A_in_G.coset_of(inst.G.index_of(dc.seed)) == half_coset;
                if (dc.symmetric != is_half) classes_ok = false;
                if (!dc.symmetric && dc.ratio() % 2 != 0) classes_ok = false;
            }
            bool half_squares_home = inst.H.contains(half * half); // (s^((q-1)/2))^2 = e
            bool necessary = pair_necessary_condition(inst).holds;

            bool odd_order = inst.A.order() % 2 == 1;
            bool a_is_code = is_perfect_code_group(inst.G, inst.A).positive();

            bool fired = normalizer_closure_obstruction(inst).has_value();
            bool obstruction_ok;
            std::string pair_note;
            if (f > 1) {
                obstruction_ok = fired;
            } else {
                // degenerate A = H: the triple is a perfect code of the pair
                Verdict v = decide_pair(inst, opts.budget);
                obstruction_ok = !fired && v.positive();
                pair_note = ", degenerate pair decided " + std::string(status_name(v.status));
            }
            r.details.push_back("(p,f)=(" + std::to_string(p) + "," + std::to_string(f) +
                                "): classes " + (classes_ok ? "ok" : "BAD") +
                                ", necessary-condition " + (necessary ? "holds" : "FAILS") +
                                ", |A| odd " + (odd_order ? "yes" : "NO") + ", A-code " +
                                (a_is_code ? "yes" : "NO") + ", obstruction " +
                                (fired ? "fired" : "silent") + pair_note);
            ok = ok && classes_ok && half_squares_home && necessary && odd_order && a_is_code &&
                 obstruction_ok;
        }
        return ok;
    });
}

/// Criterion 5: explicit chain transversals for every 1 <= l < m < n <= 6,
/// certified exactly, with the pair decision agreeing.
inline CriterionResult chain_transversal_check(const Options& opts) {
    return detail::run_criterion("chain-transversal-certificates", 180, [&](CriterionResult& r) {
        bool ok = true;
        std::size_t triples = 0;
        for (long n = 3; n <= 6; ++n)
            for (long m = 2; m < n; ++m)
                for (long l = 1; l < m; ++l) {
                    TripleSpec t = build_sym_chain(l, m, n);
                    ChainTransversal ct = chain_transversal(t); // certifies internally
                    std::size_t expected = 1;
                    for (long i = m + 1; i <= n; ++i) expected *= static_cast<std::size_t>(i);
                    bool sized = ct.X.size() == expected;
                    bool decided = decide_pair(t.instance, opts.budget).positive();
                    if (!sized || !decided)
                        r.details.push_back("chain " + std::to_string(l) + "<" +
                                            std::to_string(m) + "<" + std::to_string(n) +
                                            " FAILED");
                    ok = ok && sized && decided;
                    ++triples;
                }
        r.details.push_back(std::to_string(triples) + " chains certified");
        return ok;
    });
}

/// Criterion 6: block pairs and affine groups. Every Sym(m) x Sym(n-m) in
/// Sym(n), n <= 7, is a perfect code with the pairing involution accepted as
/// the parity-criterion witness for every x whose square preserves the head;
/// AGL(1,p) is a perfect code of Sym(p) for p in {3,5,7} with the Sylow
/// reduction agreeing; the normalizer-lemma involution is found for every
/// qualifying element in the p = 5 and p = 7 stabilizer setups.
inline CriterionResult intransitive_affine_check(const Options&) {
    return detail::run_criterion("block-and-affine-maximals", 300, [&](CriterionResult& r) {
        bool ok = true;

        std::size_t witnesses = 0;
        for (long n = 2; n <= 7; ++n) {
            PermGroup G = PermGroup::symmetric(static_cast<std::size_t>(n));
            for (long m = 1; m < n; ++m) {
                TripleSpec t = build_intransitive(m, n);
                const PermGroup& A = t.instance.A;
                if (!is_perfect_code_group(G, A).positive()) {
                    r.details.push_back("block pair " + std::to_string(m) + "+" +
                                        std::to_string(n - m) + " in S" + std::to_string(n) +
                                        " is NOT a code");
                    ok = false;
                }
                for (const auto& x : G.elements()) {
                    if (!A.contains(x * x)) continue;
                    Permutation y = block_involution(x.inverse(), static_cast<std::size_t>(m));
                    bool in_coset = A.contains(x.inverse() * y);
                    bool involution = (y * y).is_identity();
                    if (!in_coset || !involution) {
                        r.details.push_back("pairing witness failed in S" + std::to_string(n));
                        ok = false;
                        break;
                    }
                    ++witnesses;
                }
            }
        }
        r.details.push_back(std::to_string(witnesses) + " pairing witnesses accepted");

        for (long p : {3L, 5L, 7L}) {
            TripleSpec t = build_affine(p);
            bool code = is_perfect_code_group(t.instance.G, t.instance.A).positive();
            bool sylow_agrees = sylow_reduction_check(t.instance.G, t.instance.A);
            r.details.push_back("AGL(1," + std::to_string(p) + "): code " +
                                (code ? "yes" : "NO") + ", sylow-reduction " +
                                (sylow_agrees ? "agrees" : "DISAGREES"));
            ok = ok && code && sylow_agrees;
        }

        // stabilizer setups on the nonzero residues
        struct Setup {
            long p;
            std::string q_generator;
            std::size_t degree;
        };
        for (const Setup& s : {Setup{5, "(1 2 4 3)", 4}, Setup{7, "(1 6)(2 5)(3 4)", 6}}) {
            PermGroup G = PermGroup::symmetric(s.degree);
            PermGroup Q = PermGroup::closure(s.degree, {Permutation::parse(s.q_generator, s.degree)});
            PermGroup N = normalizer(G, Q);
            std::size_t qualifying = 0;
            bool all_found = true;
            for (const auto& x : N.elements()) {
                if (Q.contains(x) || !Q.contains(x * x)) continue;
                ++qualifying;
                Permutation y = normalizer_involution(G, Q, x);
                if (!(y.is_involution() && Q.contains(x.inverse() * y))) all_found = false;
            }
            r.details.push_back("stabilizer setup p=" + std::to_string(s.p) + ": " +
                                std::to_string(qualifying) + " qualifying elements, involutions " +
                                (all_found ? "all found" : "MISSING"));
            ok = ok && all_found && qualifying > 0;
        }
        return ok;
    });
}

/// Criterion 7: every catalog maximal subgroup of Sym(n) is a perfect code,
/// gated for n <= 6; n = 7 runs when stretch is set.
inline CriterionResult maximal_survey_check(const Options& opts) {
    return detail::run_criterion("maximal-subgroup-survey", 600, [&](CriterionResult& r) {
        bool ok = true;
        long top = opts.stretch ? 7 : 6;
        for (long n = 2; n <= top; ++n) {
            PermGroup G = PermGroup::symmetric(static_cast<std::size_t>(n));
            for (const auto& entry : maximal_catalog(static_cast<std::size_t>(n))) {
                Verdict v = is_perfect_code_group(G, entry.group);
                r.details.push_back("S" + std::to_string(n) + " >= " + entry.name + " (order " +
                                    std::to_string(entry.group.order()) + "): " +
                                    status_name(v.status));
                ok = ok && v.positive();
            }
        }
        return ok;
    });
}

/// Criterion 8: on >= 200 sampled pair instances (|G| <= 120, at most 12
/// double-coset classes), the connection-set witness search and the
/// exhaustive pair-transversal search agree exactly.
inline CriterionResult graph_oracle_agreement(const Options& opts) {
    return detail::run_criterion("pair-decision-graph-oracle-agreement", 600,
                                 [&](CriterionResult& r) {
        std::vector<PermGroup> pool;
        pool.push_back(PermGroup::symmetric(3));
        pool.push_back(PermGroup::symmetric(4));
        pool.push_back(PermGroup::symmetric(5));
        pool.push_back(PermGroup::dihedral(4));
        pool.push_back(PermGroup::dihedral(6));
        pool.push_back(PermGroup::dihedral(8));
        pool.push_back(generalized_quaternion(2));
        pool.push_back(generalized_quaternion(4));
        pool.push_back(PermGroup::cyclic(12));
        pool.push_back(PermGroup::alternating(4));
        pool.push_back(special_linear_2_3());
        pool.push_back(general_linear_2_3());
        pool.push_back(build_affine(5).instance.A);
        pool.push_back(build_field_c2(2).instance.A);

        std::vector<std::vector<PermGroup>> pool_subgroups;
        pool_subgroups.reserve(pool.size());
        for (const auto& G : pool) pool_subgroups.push_back(all_subgroups(G));

        std::mt19937 rng(0x5eed0001u);
        const std::size_t wanted = 200;
        std::size_t accepted = 0, positives = 0, disagreements = 0, attempts = 0;

        std::map<std::pair<std::size_t, std::size_t>, std::vector<PermGroup>> hsub_cache;
        std::vector<PairInstance> batch;
        while (accepted + batch.size() < wanted && attempts < 20000) {
            ++attempts;
            std::size_t gi = rng() % pool.size();
            const PermGroup& G = pool[gi];
            const auto& subs = pool_subgroups[gi];
            std::size_t ai = rng() % subs.size();
            const PermGroup& A = subs[ai];
            auto cached = hsub_cache.find({gi, ai});
            if (cached == hsub_cache.end())
                cached = hsub_cache.emplace(std::make_pair(gi, ai), all_subgroups(A)).first;
            const auto& hsubs = cached->second;
            const PermGroup& H = hsubs[rng() % hsubs.size()];

            CosetDecomposition cosH = left_cosets(G, H);
            std::size_t classes = 0;
            bool small_enough = true;
            for (const auto& dc : double_coset_union_classes(G, H, cosH)) {
                if (H.contains(dc.seed)) continue;
                if (++classes > 12) {
                    small_enough = false;
                    break;
                }
            }
            if (!small_enough) continue;
            batch.push_back(make_pair_instance(G, A, H));
        }

        auto evaluate = [&](const PairInstance& inst) -> std::pair<bool, bool> {
            bool via_graph = find_witness_connection_set(inst, CodeMode::Literal).has_value();
            Verdict raw = pair_transversal_exhaustive(inst, opts.budget);
            require(raw.status != Status::Unknown, ErrorCode::BudgetExceeded,
                    "sampled instance exhausted the search budget");
            return {via_graph, raw.positive()};
        };

        std::vector<std::pair<bool, bool>> outcomes(batch.size());
        unsigned workers = opts.threads > 1 ? opts.threads : 1;
        if (workers <= 1) {
            for (std::size_t i = 0; i < batch.size(); ++i) outcomes[i] = evaluate(batch[i]);
        } else {
            std::vector<std::future<void>> futures;
            std::atomic<std::size_t> next{0};
            for (unsigned w = 0; w < workers; ++w)
                futures.push_back(std::async(std::launch::async, [&] {
                    for (std::size_t i = next.fetch_add(1); i < batch.size();
                         i = next.fetch_add(1))
                        outcomes[i] = evaluate(batch[i]);
                }));
            for (auto& f : futures) f.get();
        }
        for (auto [via_graph, via_search] : outcomes) {
            ++accepted;
            if (via_search) ++positives;
            if (via_graph != via_search) ++disagreements;
        }

        r.details.push_back(std::to_string(accepted) + " instances sampled (" +
                            std::to_string(positives) + " positive), " +
                            std::to_string(disagreements) + " disagreements");
        return accepted >= wanted && disagreements == 0;
    });
}

inline std::vector<CriterionResult> run_all(const Options& opts) {
    return {
        group_criteria_agreement(opts), dihedral_family_check(opts),
        binary_field_family_check(opts), odd_field_family_check(opts),
        chain_transversal_check(opts),   intransitive_affine_check(opts),
        maximal_survey_check(opts),      graph_oracle_agreement(opts),
    };
}

} // namespace pcode::verify
