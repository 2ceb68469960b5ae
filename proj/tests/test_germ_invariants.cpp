#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germlink/catalog.hpp"
#include "germlink/invariants.hpp"
#include "germlink/poly_text.hpp"
#include "germlink/presentation.hpp"
#include "germlink/resultant.hpp"

using namespace germlink;

TEST_CASE("germ grammar") {
    MapGerm g = parse_germ("F(u,v) = (u^2, u*v, v)");
    REQUIRE(g.is_mono());
    CHECK(g.mono().source.vars() == std::vector<std::string>{"u", "v"});
    CHECK(g.mono().comps[2] == Poly::variable(g.mono().source, "v"));

    MapGerm m = parse_germ("A(s,t) = (0, s, t); B(s,t) = (t, 0, s)");
    CHECK(m.branches.size() == 2);

    CHECK_THROWS_AS(parse_germ("F(s,t) = (s, t)"), parse_error);
    // a germ must fix the origin
    CHECK_THROWS_AS(parse_germ("F(s,t) = (s, t, 1 + t)"), error);
    CHECK_THROWS_AS(parse_germ("F(s,s) = (s, s, s)"), parse_error);
    // branches must share the source pair
    CHECK_THROWS_AS(parse_germ("A(s,t) = (0, s, t); B(u,v) = (u, 0, v)"), parse_error);
}

TEST_CASE("print and reparse every catalog germ") {
    for (const GermSource& gs : catalog()) {
        MapGerm g = gs.germ();
        MapGerm h = parse_germ(print_germ(g));
        REQUIRE(h.branches.size() == g.branches.size());
        for (size_t b = 0; b < g.branches.size(); ++b)
            for (int k = 0; k < 3; ++k)
                CHECK(h.branches[b].comps[k] == g.branches[b].comps[k]);
    }
}

TEST_CASE("differential rank and corank") {
    MapGerm umbrella = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    CHECK(differential_rank(umbrella.mono()) == 1);
    CHECK(corank(umbrella) == 1);
    CHECK_FALSE(is_immersive(umbrella.mono()));

    MapGerm plane = parse_germ("Phi(s,t) = (0, s, t)");
    CHECK(corank(plane) == 0);
    CHECK(is_immersive(plane.mono()));

    MapGerm dc = parse_germ("Phi(s,t) = (s^2, t^2, s*t)");
    CHECK(corank(dc) == 2);
}

TEST_CASE("linear coordinate changes preserve the invariants") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    Mat2 A = {{{Scalar(1), Scalar::rational(1, 2)}, {Scalar(-1), Scalar(1)}}};
    Mat3 B = {{{Scalar(2), Scalar(0), Scalar::i()},
               {Scalar(0), Scalar(1), Scalar(1)},
               {Scalar(0), Scalar(0), Scalar::rational(1, 3)}}};
    REQUIRE(det2(A) != Scalar(0));
    REQUIRE(det3(B) != Scalar(0));

    MapGerm h;
    h.branches.push_back(change_coordinates(g.mono(), A, B));

    CHECK(invariant_C(h) == invariant_C(g));
    CHECK(invariant_T_fitting(h) == invariant_T_fitting(g));
    CHECK(invariant_L(h) == invariant_L(g));
    CHECK(finite_determinacy_verdict(h) == finite_determinacy_verdict(g));
}

TEST_CASE("a mixing linear change still yields a square presentation") {
    // this change hands the relation computation five raw rows for two
    // generators; the redundant ones are only redundant over the local ring
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    Mat2 A = {{{Scalar(2), Scalar(1)}, {Scalar(1), Scalar(1)}}};
    Mat3 B = {{{Scalar(1), Scalar(0), Scalar(1)},
               {Scalar(1), Scalar(1), Scalar(0)},
               {Scalar(0), Scalar(1), Scalar(1)}}};
    MapGerm h;
    h.branches.push_back(change_coordinates(g.mono(), A, B));

    Presentation P = presentation_matrix(h);
    CHECK(P.m == 2);
    CHECK(P.lambda.size() == 2);
    CHECK_FALSE(P.det.is_zero());

    CHECK(invariant_C(h) == invariant_C(g));
    CHECK(invariant_T_fitting(P) == invariant_T_fitting(g));
    CHECK(invariant_L(h) == invariant_L(g));
    CHECK(finite_determinacy_verdict(h) == finite_determinacy_verdict(g));
}

TEST_CASE("prenormal form of the cross cap") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    NormalizedBranch nb = normalize_corank1(g.mono());
    // first component is the first source coordinate
    CHECK(nb.germ.comps[0] == Poly::variable(nb.germ.source, nb.germ.source.var(0)));
    // here the other two land in the square of the maximal ideal
    for (int k : {1, 2})
        for (const auto& [m, c] : nb.germ.comps[k].terms())
            CHECK(total_degree(m) >= 2);
    CHECK(det2(nb.source) != Scalar(0));
    CHECK(det3(nb.target) != Scalar(0));
}

TEST_CASE("corank 2 has no prenormal form") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, t^2, s*t)");
    CHECK_THROWS_AS(normalize_corank1(g.mono()), not_supported);
}

TEST_CASE("double point curve of the cross cap") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    NormalizedBranch nb = normalize_corank1(g.mono());
    DoubleSpaces ds = double_space_ideals(nb);
    DoubleCurve dc = double_curve(ds);

    CHECK(dc.squarefree);
    CHECK_FALSE(dc.empty);
    REQUIRE(dc.via_resultant.has_value());
    REQUIRE(dc.via_elimination.has_value());
    // the eliminant divides the resultant, same squarefree part
    Poly q = poly_exact_div(*dc.via_resultant, *dc.via_elimination);
    CHECK_FALSE(q.is_zero());
    CHECK(squarefree_part(*dc.via_resultant) == squarefree_part(*dc.via_elimination));

    // back in the original coordinates the curve is the s-axis: both
    // preimages (s, 0), (-s, 0) share the image point (s^2, 0, 0)
    Poly d = transport_plane_curve(dc.d, nb);
    CHECK(d == Poly::variable(g.mono().source, "t"));
}

TEST_CASE("immersions have empty double curve against themselves") {
    MapGerm g = parse_germ("Phi(s,t) = (0, s, t)");
    NormalizedBranch nb = normalize_corank1(g.mono());
    DoubleCurve dc = double_curve(double_space_ideals(nb));
    CHECK(dc.empty);
    CHECK(dc.d == Poly(dc.d.ring(), Scalar(1)));
}

TEST_CASE("invariant C across the catalog") {
    auto C = [](const char* name) {
        return invariant_C(find_catalog(name)->germ());
    };
    CHECK(C("umbrella") == Codim::of(1));
    CHECK(C("triple") == Codim::of(0));
    CHECK(C("double-cover") == Codim::of(3));
    CHECK(C("cuspidal-edge") == Codim::inf());
    CHECK(C("family-1") == Codim::of(2));
    CHECK(C("family-2") == Codim::of(3));
    CHECK(C("family-3") == Codim::of(4));
}

TEST_CASE("both T routes agree where both apply") {
    for (const char* name : {"umbrella", "cuspidal-edge", "family-1", "family-2"}) {
        MapGerm g = find_catalog(name)->germ();
        CHECK(invariant_T_fitting(g) == invariant_T_triple_space(g));
    }
    MapGerm triple = find_catalog("triple")->germ();
    CHECK(invariant_T_fitting(triple) == Codim::of(1));
    CHECK(invariant_T_triple_space(triple) == Codim::of(1));
    CHECK(local_codim(triple_cross_ideal(triple)) == Codim::of(1));
}

TEST_CASE("T of the double cover comes from the fitting route only") {
    MapGerm g = find_catalog("double-cover")->germ();
    CHECK(invariant_T_fitting(g) == Codim::of(1));
    CHECK_THROWS_AS(invariant_T_triple_space(g), not_supported);
}

TEST_CASE("linking invariant L") {
    auto L = [](const char* name) {
        return invariant_L(find_catalog(name)->germ());
    };
    CHECK(L("umbrella") == 1);
    CHECK(L("triple") == -3);
    CHECK(L("double-cover") == 0);
    CHECK_FALSE(L("cuspidal-edge").has_value());
    CHECK(L("family-1") == 2);
    CHECK(L("family-3") == 4);
}

TEST_CASE("verdicts") {
    auto V = [](const char* name) {
        return finite_determinacy_verdict(find_catalog(name)->germ());
    };
    CHECK(V("umbrella") == Verdict::yes);
    CHECK(V("triple") == Verdict::yes);
    CHECK(V("double-cover") == Verdict::undetermined);
    CHECK(V("cuspidal-edge") == Verdict::no);
    CHECK(V("family-2") == Verdict::yes);
    CHECK(verdict_str(Verdict::undetermined) == "undetermined");
}

TEST_CASE("cuspidal edge: d is not reduced") {
    InvariantReport r = full_report(find_catalog("cuspidal-edge")->germ(),
                                    ReportOptions{false, 12, true});
    REQUIRE(r.branches.size() == 1);
    REQUIRE(r.branches[0].d.has_value());
    CHECK_FALSE(r.branches[0].d_squarefree);
    CHECK(r.verdict == Verdict::no);
    CHECK_FALSE(r.C.finite);
}

TEST_CASE("full report on the double cover flags corank 2") {
    InvariantReport r = full_report(find_catalog("double-cover")->germ());
    CHECK(r.corank == 2);
    CHECK(r.C == Codim::of(3));
    CHECK(r.T == Codim::of(1));
    CHECK(r.L == 0);
    CHECK(r.verdict == Verdict::undetermined);
    CHECK(r.verdict_reason.find("corank 2") != std::string::npos);
    CHECK_FALSE(r.T_triple.has_value());
    CHECK_FALSE(r.T_triple_error.empty());
    CHECK(r.image == parse_poly("x*y - z^2", r.presentation->target));
}

TEST_CASE("report oracle checks are stable and agree") {
    InvariantReport r = full_report(find_catalog("family-1")->germ());
    REQUIRE_FALSE(r.oracle_checks.empty());
    for (const OracleCheck& oc : r.oracle_checks) {
        CHECK(oc.oracle.stable);
        CHECK(Codim::of(oc.oracle.value) == oc.local);
    }
}

TEST_CASE("multigerm report of the triple point") {
    InvariantReport r = full_report(find_catalog("triple")->germ());
    CHECK(r.corank == -1);
    CHECK(r.C == Codim::of(0));
    CHECK(r.T_fitting == Codim::of(1));
    CHECK(r.T_triple == Codim::of(1));
    CHECK(r.L == -3);
    CHECK(r.verdict == Verdict::yes);
    REQUIRE(r.branches.size() == 3);
    for (const BranchReport& br : r.branches) {
        CHECK(br.immersive);
        REQUIRE(br.d.has_value());
        CHECK(br.d_squarefree);
        // branch double curve: the two coordinate axes cut by the others
        CHECK(monic(*br.d) == parse_poly("s*t", br.d->ring()));
    }
}

TEST_CASE("ramification ideal of the cross cap") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    Ideal R = ramification_ideal(g.mono());
    CHECK(local_codim(R) == Codim::of(1));
}
