#include <catch2/catch.hpp>

#include "pcode/presets.hpp"
#include "pcode/report.hpp"

using namespace pcode;

TEST_CASE("generator list parsing") {
    auto gens = parse_generator_list("[(1 2 3),(1 2)]", 4);
    REQUIRE(gens.size() == 2);
    CHECK(gens[0] == Permutation::parse("(1 2 3)", 4));
    CHECK(gens[1] == Permutation::parse("(1 2)", 4));

    auto bare = parse_generator_list("(1 2)(3 4)", 4);
    REQUIRE(bare.size() == 1); // one permutation in two cycles

    CHECK_THROWS_AS(parse_generator_list("[]", 4), Error);
    CHECK_THROWS_AS(parse_generator_list("[(1 9)]", 4), Error);
}

TEST_CASE("named group presets") {
    CHECK(parse_group("S4").order() == 24);
    CHECK(parse_group("A5").order() == 60);
    CHECK(parse_group("D8").order() == 8);
    CHECK(parse_group("C6").order() == 6);
    CHECK(parse_group("Q8").order() == 8);
    CHECK(parse_group("Q16").order() == 16);
    CHECK(parse_group("SL(2,3)").order() == 24);
    CHECK(parse_group("GL(2,3)").order() == 48);
    CHECK_THROWS_AS(parse_group("X7"), Error);
    CHECK_THROWS_AS(parse_group("D7"), Error); // dihedral names must be even
}

TEST_CASE("presets embed at larger degrees") {
    PermGroup s3_in_s5 = parse_group("S3", 5);
    CHECK(s3_in_s5.degree() == 5);
    CHECK(s3_in_s5.order() == 6);
    CHECK(s3_in_s5.is_subgroup_of(parse_group("S5")));

    PermGroup raw = parse_group("[(1 2),(1 2 3)]", 6);
    CHECK(raw.degree() == 6);
    CHECK(raw.order() == 6);

    CHECK_THROWS_AS(parse_group("S5", 3), Error);
}

TEST_CASE("family specs build the right triples") {
    TripleSpec d = parse_family("dihedral:2");
    CHECK(d.family == Family::Dihedral8n);
    CHECK(d.instance.G.order() == 16);
    CHECK(d.spec_string() == "dihedral:2");

    TripleSpec chain = parse_family("symchain:1,2,4");
    CHECK(chain.instance.A.order() == 2);
    CHECK(chain.instance.G.order() == 24);

    CHECK_THROWS_AS(parse_family("dihedral"), Error);
    CHECK_THROWS_AS(parse_family("dihedral:1,2"), Error);
    CHECK_THROWS_AS(parse_family("unknown:1"), Error);
}

TEST_CASE("quaternion presets have the expected structure") {
    PermGroup q16 = generalized_quaternion(4);
    std::size_t involutions = 0;
    for (const auto& g : q16.elements())
        if (g.is_involution()) ++involutions;
    CHECK(involutions == 1);
    CHECK(q16.order() == 16);
}

TEST_CASE("reports are byte-identical across runs") {
    PermGroup G = parse_group("S4");
    PermGroup A = parse_group("[(1 2),(1 2 3)]", 4);

    auto build = [&] {
        RunReport report;
        report.command = "check-group --group S4 --subgroup [(1 2),(1 2 3)]";
        PairInstance inst = make_pair_instance(G, A, PermGroup::trivial(4));
        report.instance = instance_fingerprint(inst);
        std::int64_t fake_ms = 123; // timings are excluded from canonical JSON
        report.add_check("group-code-decision", is_perfect_code_group(G, A), fake_ms);
        report.compute_disagreement();
        return report_json(report, false).dump(2);
    };
    std::string first = build();
    std::string second = build();
    CHECK(first == second);
    CHECK(first.find("elapsed_ms") == std::string::npos);
    CHECK(first.find("pcode-report/1") != std::string::npos);

    // timings appear only when asked for
    RunReport report;
    report.command = "x";
    report.add_check("y", Verdict{}, 5);
    std::string with = report_json(report, true).dump(2);
    CHECK(with.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("verdict serialization carries the certificate") {
    PermGroup G = parse_group("S3");
    PermGroup A = parse_group("[(1 2 3)]", 3);
    Verdict v = is_perfect_code_group(G, A);
    auto j = verdict_json(v, false, 0);
    CHECK(j["status"] == "PerfectCode");
    CHECK(j["witness"].size() == 2);
    CHECK(j["violating_element"].is_null());
}

TEST_CASE("cross-check disagreement detection") {
    RunReport report;
    Verdict yes;
    yes.status = Status::PerfectCode;
    Verdict no;
    no.status = Status::NotPerfectCode;
    Verdict unknown;
    report.add_check("a", yes);
    report.add_check("b", no);
    report.compute_disagreement();
    CHECK(report.disagreement);

    RunReport fine;
    fine.add_check("a", yes);
    fine.add_check("b", unknown); // Unknown never counts as a disagreement
    fine.compute_disagreement();
    CHECK_FALSE(fine.disagreement);
}
