#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "pcode/graphs.hpp"

using namespace pcode;

namespace {

PermGroup z6() { return PermGroup::cyclic(6); }

std::vector<Permutation> six_cycle_connection() {
    Permutation step = Permutation::parse("(1 2 3 4 5 6)", 6);
    return {step, step.inverse()};
}

} // namespace

TEST_CASE("cayley graph construction") {
    SECTION("empty connection set gives an edgeless graph") {
        VertexGraph g = cayley_graph(z6(), {});
        CHECK(g.size() == 6);
        CHECK(g.edges().empty());
    }
    SECTION("unit shifts of Z6 give the hexagon") {
        VertexGraph g = cayley_graph(z6(), six_cycle_connection());
        CHECK(g.size() == 6);
        CHECK(g.edges().size() == 6);
        for (std::uint32_t v = 0; v < 6; ++v) CHECK(g.degree_of(v) == 2);
    }
    SECTION("all involutions of the order-8 dihedral group: 5-regular") {
        PermGroup D = PermGroup::dihedral(4);
        std::vector<Permutation> invs;
        for (const auto& p : D.elements())
            if (p.is_involution()) invs.push_back(p);
        REQUIRE(invs.size() == 5);
        VertexGraph g = cayley_graph(D, invs);
        for (std::uint32_t v = 0; v < g.size(); ++v) CHECK(g.degree_of(v) == 5);
    }
    SECTION("invalid connection sets are rejected") {
        CHECK_THROWS_AS(cayley_graph(z6(), {Permutation::identity(6)}), Error);
        CHECK_THROWS_AS(cayley_graph(z6(), {Permutation::parse("(1 2 3 4 5 6)", 6)}), Error);
        CHECK_THROWS_AS(cayley_graph(z6(), {Permutation::parse("(1 2)", 6)}), Error);
    }
}

TEST_CASE("perfect codes in explicit graphs") {
    VertexGraph hexagon = cayley_graph(z6(), six_cycle_connection());
    // vertex i is the shift by i: antipodal pair {0, 3}
    std::uint32_t v0 = 0;
    std::uint32_t v3 = static_cast<std::uint32_t>(
        z6().index_of(perm_power(Permutation::parse("(1 2 3 4 5 6)", 6), 3)));

    SECTION("two antipodal vertices form a perfect code") {
        CHECK(is_perfect_code_in_graph(hexagon, {v0, v3}, CodeMode::Literal));
        CHECK(is_perfect_code_in_graph(hexagon, {v0, v3}, CodeMode::Independent));
    }
    SECTION("two adjacent vertices do not") {
        std::uint32_t v1 = static_cast<std::uint32_t>(
            z6().index_of(Permutation::parse("(1 2 3 4 5 6)", 6)));
        REQUIRE(hexagon.adjacent(v0, v1));
        CHECK_FALSE(is_perfect_code_in_graph(hexagon, {v0, v1}, CodeMode::Literal));
    }
    SECTION("the full vertex set is a literal perfect code but not independent") {
        std::vector<std::uint32_t> all = {0, 1, 2, 3, 4, 5};
        CHECK(is_perfect_code_in_graph(hexagon, all, CodeMode::Literal));
        CHECK_FALSE(is_perfect_code_in_graph(hexagon, all, CodeMode::Independent));
    }
}

TEST_CASE("coset graph construction") {
    PermGroup S3 = PermGroup::symmetric(3);
    PermGroup H = PermGroup::closure(3, {Permutation::parse("(1 2)", 3)});

    SECTION("trivial H reproduces the Cayley graph up to inversion relabelling") {
        PermGroup G = PermGroup::symmetric(3);
        std::vector<Permutation> S;
        for (const auto& p : G.elements())
            if (p.order() == 3 || p == Permutation::parse("(1 2)", 3)) S.push_back(p);
        // S = {(1 2), both 3-cycles}: inverse-closed
        VertexGraph cay = cayley_graph(G, S);
        VertexGraph cos = coset_graph(G, PermGroup::trivial(3), S);
        REQUIRE(cay.size() == cos.size());
        // x -> x^-1 maps one adjacency onto the other, and perfect-code
        // verdicts for subgroup-aligned codes agree
        for (std::uint32_t i = 0; i < cay.size(); ++i)
            for (std::uint32_t j = 0; j < cay.size(); ++j) {
                std::uint32_t ii = G.index_of(G.element(i).inverse());
                std::uint32_t jj = G.index_of(G.element(j).inverse());
                CHECK(cos.adjacent(i, j) == cay.adjacent(ii, jj));
            }
    }
    SECTION("U = G minus H gives the complete graph on the cosets") {
        std::vector<Permutation> U;
        for (const auto& g : S3.elements())
            if (!H.contains(g)) U.push_back(g);
        VertexGraph g = coset_graph(S3, H, U);
        CHECK(g.size() == 3);
        CHECK(g.edges().size() == 3);
    }
    SECTION("adjacency is decided by double-coset membership") {
        // the 3-cycles saturate to H(123)H = all four elements outside H, so
        // every pair of the three cosets is adjacent
        std::vector<Permutation> U = {Permutation::parse("(1 2 3)", 3),
                                      Permutation::parse("(1 3 2)", 3)};
        VertexGraph g = coset_graph(S3, H, U);
        CHECK(g.size() == 3);
        for (std::uint32_t i = 0; i < 3; ++i)
            for (std::uint32_t j = i + 1; j < 3; ++j) CHECK(g.adjacent(i, j));
    }
    SECTION("connection sets meeting H are rejected") {
        CHECK_THROWS_AS(coset_graph(S3, H, {Permutation::parse("(1 2)", 3)}), Error);
    }
}

TEST_CASE("coset graphs are vertex-transitive under left multiplication") {
    PermGroup G = PermGroup::dihedral(4);
    PermGroup H = PermGroup::closure(4, {Permutation::parse("(2 4)", 4)});
    std::vector<Permutation> U = {Permutation::parse("(1 2 3 4)", 4),
                                  Permutation::parse("(1 4 3 2)", 4)};
    VertexGraph graph = coset_graph(G, H, U);
    CosetDecomposition cosH = left_cosets(G, H);

    for (const auto& g : G.generators()) {
        for (std::uint32_t i = 0; i < graph.size(); ++i) {
            std::uint32_t gi = cosH.coset_of(G.index_of(g * cosH.representative(i)));
            for (std::uint32_t j = i + 1; j < graph.size(); ++j) {
                std::uint32_t gj = cosH.coset_of(G.index_of(g * cosH.representative(j)));
                CHECK(graph.adjacent(i, j) == graph.adjacent(gi, gj));
            }
        }
    }
}

TEST_CASE("witness connection-set search") {
    SECTION("A = G succeeds with the empty connection set") {
        PermGroup G = PermGroup::symmetric(3);
        PermGroup H = PermGroup::closure(3, {Permutation::parse("(1 2)", 3)});
        PairInstance inst = make_pair_instance(G, G, H);
        auto witness = find_witness_connection_set(inst);
        REQUIRE(witness.has_value());
        CHECK(witness->elements.empty());
    }
    SECTION("the S3 < S4 < S5 chain has a witness, agreeing with the search route") {
        PermGroup S5 = PermGroup::symmetric(5);
        PermGroup S4 = PermGroup::closure(
            5, {Permutation::parse("(1 2)", 5), Permutation::parse("(1 2 3 4)", 5)});
        PermGroup S3 = PermGroup::closure(
            5, {Permutation::parse("(1 2)", 5), Permutation::parse("(1 2 3)", 5)});
        PairInstance inst = make_pair_instance(S5, S4, S3);
        auto witness = find_witness_connection_set(inst);
        REQUIRE(witness.has_value());
        CHECK(decide_pair(inst).positive());
    }
    SECTION("the dihedral triple has no witness") {
        PermGroup G = PermGroup::dihedral(4);
        Permutation a = Permutation::parse("(1 2 3 4)", 4);
        PermGroup A = PermGroup::closure(4, {a * a, Permutation::parse("(2 4)", 4)});
        PermGroup H = PermGroup::closure(4, {Permutation::parse("(2 4)", 4)});
        PairInstance inst = make_pair_instance(G, A, H);
        CHECK_FALSE(find_witness_connection_set(inst).has_value());
        CHECK(pair_transversal_exhaustive(inst).status == Status::NotPerfectCode);
    }
    SECTION("class-count limit is enforced") {
        PermGroup G = PermGroup::symmetric(4);
        PairInstance inst = make_pair_instance(G, G, PermGroup::trivial(4));
        CHECK_THROWS_AS(find_witness_connection_set(inst, CodeMode::Literal, 3), Error);
    }
}

TEST_CASE("graph-oracle equivalence over a dihedral subgroup scan") {
    PermGroup G = PermGroup::dihedral(4);
    auto subgroups = all_subgroups(G);
    for (const auto& A : subgroups) {
        for (const auto& H : all_subgroups(A)) {
            PairInstance inst = make_pair_instance(G, A, H);
            bool via_graph = find_witness_connection_set(inst).has_value();
            bool via_search = pair_transversal_exhaustive(inst).positive();
            INFO("|A|=" << A.order() << " |H|=" << H.order());
            CHECK(via_graph == via_search);
        }
    }
}

TEST_CASE("literal and independent readings agree for subgroup-coset codes") {
    // every double-coset class lies entirely inside A or entirely outside it,
    // so dropping the inside classes turns a literal witness independent;
    // the two modes therefore succeed together
    for (const auto& G : {PermGroup::dihedral(4), PermGroup::symmetric(4)}) {
        for (const auto& A : all_subgroups(G)) {
            for (const auto& H : all_subgroups(A)) {
                PairInstance inst = make_pair_instance(G, A, H);
                bool literal = find_witness_connection_set(inst, CodeMode::Literal).has_value();
                bool independent =
                    find_witness_connection_set(inst, CodeMode::Independent).has_value();
                INFO("|G|=" << G.order() << " |A|=" << A.order() << " |H|=" << H.order());
                CHECK(literal == independent);
            }
        }
    }
}

TEST_CASE("dot export") {
    VertexGraph hexagon = cayley_graph(z6(), six_cycle_connection());
    std::string dot = to_dot(hexagon, "hexagon");
    CHECK(dot.find("graph \"hexagon\"") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}
