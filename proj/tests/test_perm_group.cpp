#include <catch2/catch.hpp>

#include "oracles.hpp"
#include "pcode/cosets.hpp"
#include "pcode/perm_group.hpp"

using namespace pcode;

namespace {

PermGroup dihedral8() { return PermGroup::dihedral(4); } // order 8 on the square

// A = {e, a^2, b, a^2 b} inside the order-8 dihedral group
PermGroup dihedral8_klein() {
    PermGroup G = dihedral8();
    Permutation a = Permutation::parse("(1 2 3 4)", 4);
    Permutation b = Permutation::parse("(2 4)", 4);
    return PermGroup::closure(4, {a * a, b});
}

} // namespace

TEST_CASE("closure enumerates the generated group") {
    CHECK(PermGroup::closure(3, {Permutation::parse("(1 2 3)", 3)}).order() == 3);
    CHECK(PermGroup::closure(3, {Permutation::parse("(1 2)", 3), Permutation::parse("(1 2 3)", 3)})
              .order() == 6);

    // dihedral of order 8, cross-checked against the fixpoint closure
    std::vector<Permutation> gens = {Permutation::parse("(1 2 3 4)", 4),
                                     Permutation::parse("(2 4)", 4)};
    PermGroup fast = PermGroup::closure(4, gens);
    auto slow = oracle::naive_closure(4, gens);
    CHECK(fast.order() == 8);
    CHECK(oracle::to_set(fast.elements()) == slow);
}

TEST_CASE("closure respects the enumeration cap") {
    CHECK_THROWS_AS(PermGroup::closure(5, PermGroup::symmetric(5).generators(), 100), Error);
}

TEST_CASE("canonical element order is image-lexicographic") {
    PermGroup S3 = PermGroup::symmetric(3);
    for (std::size_t i = 1; i < S3.order(); ++i) CHECK(S3.element(i - 1) < S3.element(i));
    CHECK(S3.element(0).is_identity());
}

TEST_CASE("left cosets partition the group") {
    PermGroup S3 = PermGroup::symmetric(3);
    PermGroup A = PermGroup::closure(3, {Permutation::parse("(1 2)", 3)});
    CosetDecomposition dec = left_cosets(S3, A);
    CHECK(dec.coset_count() == 3);

    // A = G: single coset represented by the identity
    CosetDecomposition whole = left_cosets(S3, S3);
    CHECK(whole.coset_count() == 1);
    CHECK(whole.representative(0).is_identity());

    // order-8 dihedral with the Klein subgroup: exactly two cosets, matching
    // the naive partition
    PermGroup G = dihedral8();
    PermGroup K = dihedral8_klein();
    CosetDecomposition two = left_cosets(G, K);
    CHECK(two.coset_count() == 2);
    auto naive = oracle::naive_left_cosets(G, K);
    REQUIRE(naive.size() == 2);
    for (std::uint32_t c = 0; c < 2; ++c) {
        std::set<std::uint32_t> got(two.members(c).begin(), two.members(c).end());
        std::set<std::uint32_t> want;
        for (const auto& p : naive[c]) want.insert(G.index_of(p));
        CHECK(got == want);
    }

    CHECK_THROWS_AS(left_cosets(A, S3), Error); // not a subgroup
}

TEST_CASE("coset representatives are minimal and sorted") {
    PermGroup S4 = PermGroup::symmetric(4);
    PermGroup A = PermGroup::closure(4, {Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3)", 4)});
    CosetDecomposition dec = left_cosets(S4, A);
    REQUIRE(dec.coset_count() == 4);
    for (std::uint32_t c = 0; c < dec.coset_count(); ++c) {
        std::uint32_t rep_index = S4.index_of(dec.representative(c));
        CHECK(rep_index == dec.members(c).front());
        if (c > 0) CHECK(dec.representative(c - 1) < dec.representative(c));
    }
}

TEST_CASE("inversion carries the left-coset partition to right cosets") {
    PermGroup G = PermGroup::symmetric(4);
    PermGroup A = PermGroup::closure(4, {Permutation::parse("(1 2 3)", 4)});
    CosetDecomposition dec = left_cosets(G, A);
    for (std::uint32_t c = 0; c < dec.coset_count(); ++c) {
        // (xA)^-1 = A x^-1 as sets
        oracle::PermSet inverted;
        for (std::uint32_t m : dec.members(c)) inverted.insert(G.element(m).inverse());
        oracle::PermSet right;
        Permutation xi = dec.representative(c).inverse();
        for (const auto& a : A.elements()) right.insert(a * xi);
        CHECK(inverted == right);
    }
}

TEST_CASE("double coset unions") {
    PermGroup G = dihedral8();
    Permutation a = Permutation::parse("(1 2 3 4)", 4);
    Permutation b = Permutation::parse("(2 4)", 4);
    PermGroup A = PermGroup::closure(4, {b});

    SECTION("seed inside the base gives the base itself") {
        DoubleCosetUnion dc = double_coset_union(G, A, b);
        CHECK(dc.symmetric);
        CHECK(dc.size() == A.order());
        CHECK(dc.ratio() == 1);
    }

    SECTION("order-8 dihedral, base of order 2, seed the rotation") {
        DoubleCosetUnion dc = double_coset_union(G, A, a);
        auto forward = oracle::naive_double_coset(oracle::to_set(A.elements()), a,
                                                  oracle::to_set(A.elements()));
        CHECK(dc.forward_size() == forward.size());
        CHECK(forward.size() == 4); // |AaA| = |A|^2 / |A n A^a| = 4
        auto backward = oracle::naive_double_coset(oracle::to_set(A.elements()), a.inverse(),
                                                   oracle::to_set(A.elements()));
        oracle::PermSet both = forward;
        both.insert(backward.begin(), backward.end());
        CHECK(dc.size() == both.size());
    }

    SECTION("normal base gives symmetric classes of one coset") {
        PermGroup K = dihedral8_klein();
        DoubleCosetUnion dc = double_coset_union(G, K, a);
        CHECK(dc.symmetric);
        CHECK(dc.ratio() == 1);
    }

    SECTION("seed outside the group is rejected") {
        CHECK_THROWS_AS(double_coset_union(G, A, Permutation::parse("(1 2)", 4)), Error);
    }
}

TEST_CASE("|AgA| * |A n A^g| = |A|^2 across a subgroup scan") {
    PermGroup G = PermGroup::symmetric(4);
    for (const auto& A : all_subgroups(G)) {
        CosetDecomposition cosA = left_cosets(G, A);
        for (const auto& dc : double_coset_union_classes(G, A, cosA)) {
            const Permutation& g = dc.seed;
            std::size_t inter = 0;
            for (const auto& x : A.elements())
                if (A.contains(x.conjugated_by(g))) ++inter;
            CHECK(dc.forward_size() * inter == A.order() * A.order());
        }
    }
}

TEST_CASE("double coset unions are inverse-closed unions of left cosets") {
    PermGroup G = PermGroup::symmetric(4);
    PermGroup A = PermGroup::closure(4, {Permutation::parse("(1 2)", 4)});
    CosetDecomposition cosA = left_cosets(G, A);
    for (const auto& dc : double_coset_union_classes(G, A, cosA)) {
        oracle::PermSet elems;
        for (std::uint32_t c : dc.cosets)
            for (std::uint32_t m : cosA.members(c)) elems.insert(G.element(m));
        CHECK(oracle::inverse_closed(elems));
        CHECK(elems.size() % A.order() == 0);
    }
}

TEST_CASE("conjugate, intersect, normalizer, normal closure") {
    PermGroup G = dihedral8();
    Permutation a = Permutation::parse("(1 2 3 4)", 4);
    Permutation b = Permutation::parse("(2 4)", 4);
    PermGroup H = PermGroup::closure(4, {b});

    PermGroup Hx = conjugate_subgroup(H, a);
    CHECK(Hx.order() == 2);
    CHECK(Hx.contains(b.conjugated_by(a)));

    PermGroup K = dihedral8_klein();
    PermGroup HK = intersect(K, PermGroup::closure(4, {a}));
    CHECK(HK.order() == 2); // {e, a^2}

    // normal closure of <b> in the order-8 dihedral group: {e, b, a^2, a^2 b}
    PermGroup closure_b = normal_closure(G, H);
    CHECK(closure_b.order() == 4);
    CHECK(closure_b.same_elements(K));
    CHECK(is_normal(G, closure_b));
    CHECK(closure_b.is_subgroup_of(normalizer(G, closure_b)));

    PermGroup N = normalizer(G, H);
    CHECK(N.order() == 4);
    CHECK(N.same_elements(K));
    CHECK(!is_normal(G, H));
    CHECK(H.is_subgroup_of(N));
    CHECK(is_normal(N, H));

    // conjugates of a transposition generate the full symmetric group
    PermGroup S3 = PermGroup::symmetric(3);
    PermGroup T = PermGroup::closure(3, {Permutation::parse("(1 2)", 3)});
    CHECK(normal_closure(S3, T).order() == 6);

    // H normal: closure is H itself and the normalizer is everything
    PermGroup A3 = PermGroup::closure(3, {Permutation::parse("(1 2 3)", 3)});
    CHECK(normal_closure(S3, A3).same_elements(A3));
    CHECK(normalizer(S3, A3).order() == 6);
}

TEST_CASE("sylow 2-subgroups") {
    // odd order: trivial
    PermGroup C5 = PermGroup::cyclic(5);
    CHECK(sylow_2(C5).order() == 1);

    PermGroup S4 = PermGroup::symmetric(4);
    PermGroup P = sylow_2(S4);
    CHECK(P.order() == 8);
    CHECK(P.is_subgroup_of(S4));

    // AGL(1,5) has order 20, so the 2-part is 4
    PermGroup agl = PermGroup::closure(
        5, {Permutation::parse("(1 2 3 4 5)", 5), Permutation::parse("(2 3 5 4)", 5)});
    REQUIRE(agl.order() == 20);
    CHECK(sylow_2(agl).order() == 4);

    // output order is always the full 2-part
    for (const auto& A : all_subgroups(S4)) {
        std::size_t two_part = 1;
        std::size_t n = A.order();
        while (n % 2 == 0) {
            two_part *= 2;
            n /= 2;
        }
        CHECK(sylow_2(A).order() == two_part);
    }
}

TEST_CASE("semiregularity") {
    // a cyclic group acting on itself is regular, hence semiregular
    PermGroup C6 = PermGroup::cyclic(6);
    std::vector<Point> all = {0, 1, 2, 3, 4, 5};
    CHECK(is_semiregular(C6, all));

    PermGroup S3 = PermGroup::symmetric(3);
    CHECK(!is_semiregular(S3, {0, 1, 2}));

    // multiplication by a primitive root fixes no nonzero residue mod 7
    std::vector<Point> scale(7);
    for (std::size_t i = 0; i < 7; ++i) scale[i] = static_cast<Point>((3 * i) % 7);
    PermGroup gl17 = PermGroup::closure(7, {Permutation(std::move(scale))});
    CHECK(gl17.order() == 6);
    CHECK(is_semiregular(gl17, {1, 2, 3, 4, 5, 6}));
    CHECK_THROWS_AS(is_semiregular(S3, std::vector<Point>{0, 1}), Error);
}

TEST_CASE("all_subgroups matches classical counts") {
    CHECK(all_subgroups(PermGroup::symmetric(3)).size() == 6);
    CHECK(all_subgroups(PermGroup::symmetric(4)).size() == 30);
    CHECK(all_subgroups(PermGroup::cyclic(12)).size() == 6); // one per divisor
    PermGroup S5 = PermGroup::symmetric(5);
    CHECK(all_subgroups(S5).size() == 156);
}

TEST_CASE("restriction to an invariant point set") {
    PermGroup S3xS1 = PermGroup::closure(4, {Permutation::parse("(1 2)", 4),
                                             Permutation::parse("(1 2 3)", 4)});
    PermGroup r = S3xS1.restriction({0, 1, 2});
    CHECK(r.degree() == 3);
    CHECK(r.order() == 6);
    CHECK_THROWS_AS(PermGroup::symmetric(4).restriction({0, 1}), Error);
}

TEST_CASE("small generating sets regenerate the group") {
    for (const auto& G : {PermGroup::symmetric(4), PermGroup::cyclic(12), dihedral8_klein()}) {
        auto gens = G.small_generating_set();
        CHECK(PermGroup::closure(G.degree(), gens).order() == G.order());
        CHECK(gens.size() <= 5);
    }
}
