#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "pcode/codes.hpp"
#include "pcode/constructions.hpp"

using namespace pcode;

namespace {

PermGroup cyclic4() { return PermGroup::cyclic(4); }
PermGroup c4_squares() { return PermGroup::closure(4, {Permutation::parse("(1 3)(2 4)", 4)}); }

PermGroup dihedral8() { return PermGroup::dihedral(4); }
Permutation d8_b() { return Permutation::parse("(2 4)", 4); }
PermGroup d8_klein() {
    Permutation a = Permutation::parse("(1 2 3 4)", 4);
    return PermGroup::closure(4, {a * a, d8_b()});
}

// quaternion group of order 8 in its regular representation
PermGroup quaternion8() {
    Permutation x = Permutation::parse("(1 2 3 4)(5 6 7 8)", 8);
    Permutation y = Permutation::parse("(1 5 3 7)(2 8 4 6)", 8);
    PermGroup Q = PermGroup::closure(8, {x, y});
    REQUIRE(Q.order() == 8);
    REQUIRE(y * y == x * x);
    REQUIRE(x.conjugated_by(y) == x.inverse());
    std::size_t involutions = 0;
    for (const auto& g : Q.elements())
        if (g.is_involution()) ++involutions;
    REQUIRE(involutions == 1);
    return Q;
}

bool brute_has_inverse_closed_transversal(const PermGroup& G, const PermGroup& A) {
    auto cosets = oracle::naive_left_cosets(G, A);
    auto found = oracle::first_transversal_such_that(cosets, [](const std::vector<Permutation>& X) {
        auto S = oracle::to_set(X);
        return oracle::inverse_closed(S);
    });
    return found.has_value();
}

bool brute_pair_code(const PermGroup& G, const PermGroup& A, const PermGroup& H) {
    auto cosets = oracle::naive_left_cosets(G, A);
    auto hset = oracle::to_set(H.elements());
    auto found = oracle::first_transversal_such_that(cosets, [&](const std::vector<Permutation>& X) {
        return oracle::product_set(X, hset) == oracle::mirror_product_set(hset, X);
    });
    return found.has_value();
}

} // namespace

TEST_CASE("involution-parity criterion on hand instances") {
    SECTION("the whole group always qualifies") {
        PermGroup G = PermGroup::symmetric(3);
        CHECK(involution_parity_criterion(G, G).holds);
    }
    SECTION("index-2 subgroup of the cyclic group of order 4 fails") {
        auto report = involution_parity_criterion(cyclic4(), c4_squares());
        REQUIRE_FALSE(report.holds);
        const Permutation& x = *report.violating;
        CHECK(c4_squares().contains(x * x));
        CHECK(x.order() == 4);
    }
    SECTION("reflection subgroup of the order-8 dihedral group passes") {
        PermGroup G = dihedral8();
        PermGroup A = PermGroup::closure(4, {d8_b()});
        CHECK(involution_parity_criterion(G, A).holds);
        CHECK(brute_has_inverse_closed_transversal(G, A));
    }
    SECTION("subgroup requirement is enforced") {
        CHECK_THROWS_AS(involution_parity_criterion(cyclic4(), PermGroup::symmetric(4)), Error);
    }
}

TEST_CASE("double-coset-trigger criterion matches on hand instances") {
    CHECK(double_coset_trigger_criterion(PermGroup::symmetric(3), PermGroup::symmetric(3)).holds);
    CHECK_FALSE(double_coset_trigger_criterion(cyclic4(), c4_squares()).holds);
    PermGroup S3 = PermGroup::symmetric(3);
    PermGroup T = PermGroup::closure(3, {Permutation::parse("(1 2)", 3)});
    CHECK(double_coset_trigger_criterion(S3, T).holds);
    CHECK(involution_parity_criterion(S3, T).holds);
}

TEST_CASE("inverse-closed transversal search") {
    SECTION("A = G gives the identity") {
        PermGroup G = PermGroup::symmetric(3);
        auto X = find_inverse_closed_transversal(G, G);
        REQUIRE(X.has_value());
        REQUIRE(X->size() == 1);
        CHECK((*X)[0].is_identity());
    }
    SECTION("no inverse-closed transversal in the cyclic group of order 4") {
        CHECK_FALSE(find_inverse_closed_transversal(cyclic4(), c4_squares()).has_value());
        CHECK_FALSE(brute_has_inverse_closed_transversal(cyclic4(), c4_squares()));
    }
    SECTION("rotation subgroup of Sym(3): transpositions serve as partners") {
        PermGroup G = PermGroup::symmetric(3);
        PermGroup A = PermGroup::closure(3, {Permutation::parse("(1 2 3)", 3)});
        auto X = find_inverse_closed_transversal(G, A);
        REQUIRE(X.has_value());
        auto S = oracle::to_set(*X);
        CHECK(oracle::inverse_closed(S));
        CHECK(is_left_transversal(G, left_cosets(G, A), *X));
    }
}

TEST_CASE("per-class criterion on hand instances") {
    CHECK(per_class_transversal_criterion(PermGroup::symmetric(3), PermGroup::symmetric(3)));
    CHECK_FALSE(per_class_transversal_criterion(cyclic4(), c4_squares()));
    PermGroup G = dihedral8();
    CHECK(per_class_transversal_criterion(G, PermGroup::closure(4, {d8_b()})));
}

TEST_CASE("the four group-code criteria agree on every subgroup") {
    std::vector<PermGroup> groups;
    groups.push_back(cyclic4());
    groups.push_back(PermGroup::cyclic(6));
    groups.push_back(dihedral8());
    groups.push_back(quaternion8());
    groups.push_back(PermGroup::symmetric(4));
    for (const auto& G : groups) {
        for (const auto& A : all_subgroups(G)) {
            bool b = find_inverse_closed_transversal(G, A).has_value();
            bool c = involution_parity_criterion(G, A).holds;
            bool d = double_coset_trigger_criterion(G, A).holds;
            bool per_class = per_class_transversal_criterion(G, A);
            INFO("|G|=" << G.order() << " |A|=" << A.order());
            CHECK(b == c);
            CHECK(c == d);
            CHECK(d == per_class);
            if (G.order() / A.order() <= 3 && A.order() <= 8) {
                CHECK(b == brute_has_inverse_closed_transversal(G, A));
            }
        }
    }
}

TEST_CASE("group perfect-code verdicts") {
    SECTION("nested symmetric groups are perfect codes") {
        for (std::size_t n = 2; n <= 5; ++n) {
            PermGroup G = PermGroup::symmetric(n);
            for (std::size_t m = 1; m < n; ++m) {
                std::vector<Permutation> gens;
                if (m >= 2) gens.push_back(Permutation::transposition(n, 0, 1));
                if (m >= 3) {
                    std::vector<Point> cycle(m);
                    std::iota(cycle.begin(), cycle.end(), Point{0});
                    gens.push_back(Permutation::from_cycle(n, cycle));
                }
                PermGroup A = PermGroup::closure(n, std::move(gens));
                Verdict v = is_perfect_code_group(G, A);
                CHECK(v.positive());
                CHECK(pair_witness_valid(G, left_cosets(G, A), PermGroup::trivial(n), v.witness));
            }
        }
    }
    SECTION("the cyclic counterexample") {
        Verdict v = is_perfect_code_group(cyclic4(), c4_squares());
        CHECK(v.status == Status::NotPerfectCode);
        CHECK(v.violating.has_value());
    }
    SECTION("odd-order subgroups are always perfect codes") {
        for (const auto& G :
             {PermGroup::symmetric(4), dihedral8(), PermGroup::cyclic(9), PermGroup::dihedral(5),
              PermGroup::dihedral(6), PermGroup::alternating(4), quaternion8(),
              PermGroup::symmetric(5)}) {
            for (const auto& A : all_subgroups(G)) {
                if (A.order() % 2 == 1) CHECK(is_perfect_code_group(G, A).positive());
            }
        }
    }
}

TEST_CASE("pair transversal search on hand instances") {
    SECTION("H = A always succeeds") {
        PermGroup G = dihedral8();
        PermGroup K = d8_klein();
        PairInstance inst = make_pair_instance(G, K, K);
        Verdict v = pair_transversal_exhaustive(inst);
        REQUIRE(v.positive());
        CHECK(pair_witness_valid(inst, v.witness));
    }
    SECTION("trivial H reduces to the inverse-closed transversal search") {
        PairInstance bad = make_pair_instance(cyclic4(), c4_squares(), PermGroup::trivial(4));
        CHECK(pair_transversal_exhaustive(bad).status == Status::NotPerfectCode);

        PermGroup S3 = PermGroup::symmetric(3);
        PermGroup A3 = PermGroup::closure(3, {Permutation::parse("(1 2 3)", 3)});
        PairInstance good = make_pair_instance(S3, A3, PermGroup::trivial(3));
        CHECK(pair_transversal_exhaustive(good).positive());
    }
    SECTION("the dihedral triple has no pair transversal") {
        PairInstance inst =
            make_pair_instance(dihedral8(), d8_klein(), PermGroup::closure(4, {d8_b()}));
        Verdict v = pair_transversal_exhaustive(inst);
        CHECK(v.status == Status::NotPerfectCode);
        CHECK_FALSE(brute_pair_code(inst.G, inst.A, inst.H));
    }
    SECTION("a tiny budget yields Unknown") {
        PairInstance inst =
            make_pair_instance(PermGroup::symmetric(4), d8_klein(), PermGroup::closure(4, {d8_b()}));
        Verdict v = pair_transversal_exhaustive(inst, 1);
        CHECK(v.status == Status::Unknown);
    }
}

TEST_CASE("pair necessary condition") {
    SECTION("dihedral triple satisfies it even though no transversal exists") {
        PairInstance inst =
            make_pair_instance(dihedral8(), d8_klein(), PermGroup::closure(4, {d8_b()}));
        CHECK(pair_necessary_condition(inst).holds);
    }
    SECTION("cyclic counterexample violates it") {
        PairInstance inst = make_pair_instance(cyclic4(), c4_squares(), PermGroup::trivial(4));
        auto report = pair_necessary_condition(inst);
        REQUIRE_FALSE(report.holds);
        CHECK(report.violating->order() == 4);
    }
    SECTION("the per-coset computation matches the all-elements definition") {
        PermGroup G = PermGroup::symmetric(4);
        PermGroup A = d8_klein();
        for (const auto& H : all_subgroups(A)) {
            PairInstance inst = make_pair_instance(G, A, H);
            bool reduced = pair_necessary_condition(inst).holds;

            // naive route: quantify over every g in G directly
            auto aset = oracle::to_set(A.elements());
            oracle::PermSet conj_targets;
            for (const auto& y : A.elements())
                for (const auto& h : H.elements()) conj_targets.insert(h.conjugated_by(y));
            bool naive = true;
            for (const auto& g : G.elements()) {
                auto fwd = oracle::naive_double_coset(aset, g, aset);
                auto bwd = oracle::naive_double_coset(aset, g.inverse(), aset);
                fwd.insert(bwd.begin(), bwd.end());
                if ((fwd.size() / A.order()) % 2 == 0) continue;
                bool has_square = false;
                for (const auto& a : A.elements()) {
                    Permutation x = g * a;
                    if (conj_targets.count(x * x)) {
                        has_square = true;
                        break;
                    }
                }
                if (!has_square) {
                    naive = false;
                    break;
                }
            }
            CHECK(reduced == naive);
        }
    }
}

TEST_CASE("normalizer-closure obstruction") {
    SECTION("never fires for normal H") {
        PermGroup S3 = PermGroup::symmetric(3);
        PermGroup A3 = PermGroup::closure(3, {Permutation::parse("(1 2 3)", 3)});
        CHECK_FALSE(normalizer_closure_obstruction(make_pair_instance(S3, S3, A3)).has_value());
    }
    SECTION("fires on the dihedral triple") {
        PairInstance inst =
            make_pair_instance(dihedral8(), d8_klein(), PermGroup::closure(4, {d8_b()}));
        auto verdict = normalizer_closure_obstruction(inst);
        REQUIRE(verdict.has_value());
        CHECK(verdict->status == Status::NotPerfectCode);
        CHECK(verdict->certificates.size() == 4);
        CHECK(pair_transversal_exhaustive(inst).status == Status::NotPerfectCode);
    }
    SECTION("soundness: never fires when a pair transversal exists") {
        PermGroup G = PermGroup::symmetric(4);
        for (const auto& A : all_subgroups(G)) {
            if (A.order() < 2 || A.order() > 8) continue;
            for (const auto& H : all_subgroups(A)) {
                PairInstance inst = make_pair_instance(G, A, H);
                if (pair_transversal_exhaustive(inst).positive())
                    CHECK_FALSE(normalizer_closure_obstruction(inst).has_value());
            }
        }
    }
}

TEST_CASE("commuting-transversal criteria") {
    SECTION("refuse when H is not a perfect code of G") {
        PairInstance inst = make_pair_instance(cyclic4(), cyclic4(), c4_squares());
        CHECK_THROWS_AS(commuting_transversal_witness(inst), Error);
        try {
            per_class_commuting_criterion(inst);
            FAIL("expected refusal");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::HypothesisNotMet);
        }
    }
    SECTION("trivial H reduces to the inverse-closed transversal search") {
        PermGroup G = dihedral8();
        for (const auto& A : all_subgroups(G)) {
            PairInstance inst = make_pair_instance(G, A, PermGroup::trivial(4));
            bool via_pair = commuting_transversal_witness(inst).has_value();
            CHECK(via_pair == find_inverse_closed_transversal(G, A).has_value());
        }
    }
    SECTION("the nested chain S3 < S4 < S5 has a commuting witness") {
        PermGroup S5 = PermGroup::symmetric(5);
        PermGroup S4 = PermGroup::closure(
            5, {Permutation::parse("(1 2)", 5), Permutation::parse("(1 2 3 4)", 5)});
        PermGroup S3 = PermGroup::closure(
            5, {Permutation::parse("(1 2)", 5), Permutation::parse("(1 2 3)", 5)});
        PairInstance inst = make_pair_instance(S5, S4, S3);
        auto X = commuting_transversal_witness(inst);
        REQUIRE(X.has_value());
        CHECK(commuting_witness_valid(inst, *X));
        CHECK(per_class_commuting_criterion(inst));
    }
    SECTION("whole-group and per-class routes agree") {
        PermGroup G = PermGroup::symmetric(4);
        for (const auto& A : all_subgroups(G)) {
            if (A.order() < 2) continue;
            for (const auto& H : all_subgroups(A)) {
                PairInstance inst = make_pair_instance(G, A, H);
                if (!involution_parity_criterion(G, H).holds) continue;
                bool b = commuting_transversal_witness(inst).has_value();
                bool c = per_class_commuting_criterion(inst);
                INFO("|A|=" << A.order() << " |H|=" << H.order());
                CHECK(b == c);
                CHECK(b == pair_transversal_exhaustive(inst).positive());
            }
        }
    }
}

TEST_CASE("full pair decision pipeline") {
    SECTION("A = G is always a perfect code of the pair") {
        PermGroup G = dihedral8();
        PermGroup H = PermGroup::closure(4, {d8_b()});
        PairInstance inst = make_pair_instance(G, G, H);
        Verdict v = decide_pair(inst);
        REQUIRE(v.positive());
        CHECK(v.witness.size() == 1);
        CHECK(v.witness[0].is_identity());
    }
    SECTION("nested symmetric chains decide positive") {
        for (long n = 3; n <= 5; ++n)
            for (long m = 2; m < n; ++m)
                for (long l = 1; l < m; ++l) {
                    std::size_t nn = static_cast<std::size_t>(n);
                    auto embed = [&](long k) {
                        std::vector<Permutation> gens;
                        if (k >= 2) gens.push_back(Permutation::transposition(nn, 0, 1));
                        if (k >= 3) {
                            std::vector<Point> cycle(static_cast<std::size_t>(k));
                            std::iota(cycle.begin(), cycle.end(), Point{0});
                            gens.push_back(Permutation::from_cycle(nn, cycle));
                        }
                        return PermGroup::closure(nn, std::move(gens));
                    };
                    PairInstance inst =
                        make_pair_instance(PermGroup::symmetric(nn), embed(m), embed(l));
                    Verdict v = decide_pair(inst);
                    INFO("chain " << l << "<" << m << "<" << n);
                    CHECK(v.positive());
                    CHECK(pair_witness_valid(inst, v.witness));
                }
    }
    SECTION("verdicts are consistent across every route") {
        PermGroup G = dihedral8();
        for (const auto& A : all_subgroups(G)) {
            for (const auto& H : all_subgroups(A)) {
                PairInstance inst = make_pair_instance(G, A, H);
                Verdict pipeline = decide_pair(inst);
                Verdict raw = pair_transversal_exhaustive(inst);
                REQUIRE(pipeline.status != Status::Unknown);
                CHECK(pipeline.positive() == raw.positive());
                if (pipeline.positive()) {
                    CHECK(pair_witness_valid(inst, pipeline.witness));
                    CHECK(pair_necessary_condition(inst).holds);
                }
            }
        }
    }
}

TEST_CASE("pipeline reports Unknown when the budget is exhausted") {
    // a true positive whose decision requires search: with one node of budget
    // both search stages run dry
    TripleSpec chain = build_sym_chain(1, 2, 4);
    Verdict v = decide_pair(chain.instance, 1);
    CHECK(v.status == Status::Unknown);
    CHECK(decide_pair(chain.instance).positive());
}

TEST_CASE("commuting-transversal routes agree on an order-160 instance") {
    // H is a perfect code of G here, so the criteria apply; all three routes
    // must refute together
    TripleSpec t = build_field_c2(2);
    REQUIRE(involution_parity_criterion(t.instance.G, t.instance.H).holds);
    CHECK_FALSE(commuting_transversal_witness(t.instance).has_value());
    CHECK_FALSE(per_class_commuting_criterion(t.instance));
    CHECK(pair_transversal_exhaustive(t.instance).status == Status::NotPerfectCode);

    // same web over every stabilizer below H (order-160 G, index-5 A)
    for (const auto& H2 : all_subgroups(t.instance.H)) {
        PairInstance inst = make_pair_instance(t.instance.G, t.instance.A, H2);
        Verdict raw = pair_transversal_exhaustive(inst);
        REQUIRE(raw.status != Status::Unknown);
        INFO("|H2| = " << H2.order());
        if (involution_parity_criterion(inst.G, inst.H).holds) {
            bool b = commuting_transversal_witness(inst).has_value();
            CHECK(b == per_class_commuting_criterion(inst));
            CHECK(b == raw.positive());
        }
        CHECK(decide_pair(inst).positive() == raw.positive());
    }
}

TEST_CASE("sylow reduction agreement") {
    PermGroup S4 = PermGroup::symmetric(4);
    CHECK(sylow_reduction_check(S4, dihedral8())); // the order-8 dihedral inside Sym(4)
    for (const auto& A : all_subgroups(S4)) {
        bool agreed = sylow_reduction_check(S4, A);
        CHECK(agreed == is_perfect_code_group(S4, A).positive());
    }
}
