#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germlink/poly_text.hpp"
#include "germlink/presentation.hpp"
#include "germlink/resultant.hpp"
#include "germlink/syzygy.hpp"

using namespace germlink;

TEST_CASE("module order: slot zero dominates") {
    Ring r({"s", "t"});
    ModuleOrder ord(r, {});
    Monomial one{0, 0}, big{5, 5};
    CHECK(ord.cmp(0, one, 1, big) > 0);
    CHECK(ord.cmp(1, big, 0, one) < 0);
    // within equal slots the monomial order decides
    CHECK(ord.cmp(1, big, 1, one) > 0);
    // earlier slot wins on equal block degree and monomial
    CHECK(ord.cmp(1, one, 2, one) > 0);
}

TEST_CASE("module order: block degree decides before the slot") {
    Ring r({"s", "x"});
    ModuleOrder ord(r, {"s"});
    Monomial pure_x{0, 3}, touches_s{1, 0};
    CHECK(ord.cmp(2, touches_s, 1, pure_x) > 0);
    CHECK(ord.block_degree(touches_s) == 1);
    CHECK(ord.block_degree(pure_x) == 0);
}

TEST_CASE("module membership") {
    Ring r({"x", "y"});
    auto P = [&](const char* s) { return parse_poly(s, r); };
    std::vector<Vec> rows = {
        {P("x"), P("y")},
        {P("0"), P("x - y")},
    };
    CHECK(module_member({P("x^2"), P("x*y")}, rows, r));          // x * row0
    CHECK(module_member({P("x"), P("x")}, rows, r));              // row0 + row1
    CHECK_FALSE(module_member({P("1"), P("0")}, rows, r));
    CHECK(module_member({P("0"), P("0")}, rows, r));
}

TEST_CASE("row syzygies") {
    Ring r({"x", "y"});
    auto P = [&](const char* s) { return parse_poly(s, r); };

    // row2 = row0 + row1, so the syzygy module is spanned by (1, 1, -1)
    std::vector<Vec> dependent = {
        {P("x"), P("0")},
        {P("0"), P("y")},
        {P("x"), P("y")},
    };
    auto syz = row_syzygies(dependent, r);
    REQUIRE(syz.size() == 1);
    CHECK(syz[0][0].str() == "1");
    CHECK(syz[0][1].str() == "1");
    CHECK(syz[0][2].str() == "-1");

    // a free pair has none
    std::vector<Vec> free_rows = {{P("x"), P("0")}, {P("0"), P("y")}};
    CHECK(row_syzygies(free_rows, r).empty());

    // x*(y,0) - y*(x,0) = 0: dependent, but no unit coefficient anywhere
    std::vector<Vec> collinear = {{P("y"), P("0")}, {P("x"), P("0")}};
    auto tied = row_syzygies(collinear, r);
    REQUIRE(tied.size() == 1);
    CHECK(tied[0][0].constant_term().is_zero());
    CHECK(tied[0][1].constant_term().is_zero());
}

TEST_CASE("syzygies of the cross cap generators") {
    // generators 1, s of the source ring over the target through the graph of
    // (s^2, s*t, t); coefficients must avoid s and t
    Ring full({"s", "t", "x", "y", "z"});
    auto P = [&](const char* str) { return parse_poly(str, full); };
    std::vector<Poly> gens = {P("1"), P("s")};
    std::vector<Poly> graph = {P("x - s^2"), P("y - s*t"), P("z - t")};

    std::vector<Vec> rel = syzygy_relations(gens, graph, {"s", "t"});
    REQUIRE_FALSE(rel.empty());

    for (const Vec& v : rel) {
        REQUIRE(v.size() == 2);
        // coefficients avoid the source variables
        for (const Poly& c : v) {
            CHECK(c.degree_in(full.index("s")) <= 0);
            CHECK(c.degree_in(full.index("t")) <= 0);
        }
        // the combination lies in the graph ideal: substituting the graph
        // kills it
        Ring st({"s", "t"});
        Poly s = Poly::variable(st, "s"), t = Poly::variable(st, "t");
        std::vector<Poly> images = {s, t, s * s, s * t, t};
        Poly combo = substitute(v[0], st, images) +
                     substitute(v[1], st, images) * s;
        CHECK(combo.is_zero());
    }

    // the known relations must be in the module
    auto to_full = [&](const char* a, const char* b) {
        return Vec{P(a), P(b)};
    };
    CHECK(module_member(to_full("x*z", "-y"), rel, full));
    CHECK(module_member(to_full("y", "-z"), rel, full));
}

TEST_CASE("cross cap presentation") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    Presentation P = presentation_matrix(g);

    REQUIRE(P.blocks.size() == 1);
    const PresentationBlock& bl = P.blocks[0];
    REQUIRE(bl.gens.size() == 2);
    CHECK(bl.gens[0].str() == "1");
    CHECK(bl.gens[1].str() == "s");
    CHECK(P.m == 2);

    CHECK(P.image == parse_poly("x*z^2 - y^2", P.target));
    CHECK(bl.cover_degree == 1);
    // det is a unit multiple of the image
    Poly q = poly_exact_div(P.det, P.image);
    CHECK(q.is_constant());
    CHECK_FALSE(q.is_zero());
}

TEST_CASE("presentation rows annihilate the generators") {
    for (const char* text : {"Phi(s,t) = (s^2, s*t, t)", "Phi(s,t) = (s^2, t^2, s*t)",
                             "Phi(s,t) = (s, t^2, t^3)"}) {
        MapGerm g = parse_germ(text);
        Presentation P = presentation_matrix(g);
        const Branch& b = g.mono();
        const PresentationBlock& bl = P.blocks[0];
        for (const auto& row : bl.rows) {
            Poly acc(b.source);
            for (size_t j = 0; j < row.size(); ++j) {
                Poly pulled = substitute(row[j], b.source,
                                         {b.comps[0], b.comps[1], b.comps[2]});
                acc += pulled * bl.gens[j];
            }
            CHECK(acc.is_zero());
        }
    }
}

TEST_CASE("triple point multigerm presentation is block diagonal") {
    MapGerm g = parse_germ(
        "Phi(s,t) = (0, s, t); Phi(s,t) = (t, 0, s); Phi(s,t) = (s, t, 0)");
    Presentation P = presentation_matrix(g);

    REQUIRE(P.blocks.size() == 3);
    CHECK(P.m == 3);
    CHECK(P.image == parse_poly("x*y*z", P.target));
    CHECK(P.det == parse_poly("x*y*z", P.target));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            if (i != j) CHECK(P.lambda[i][j].is_zero());
}

TEST_CASE("double cover of the plane: degree two") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, t^2, s*t)");
    Presentation P = presentation_matrix(g);
    REQUIRE(P.blocks.size() == 1);
    CHECK(P.m == 3);
    CHECK(P.image == parse_poly("x*y - z^2", P.target));
    CHECK(P.blocks[0].cover_degree == 2);
    CHECK(monic(P.det) == parse_poly("(x*y - z^2)^2", P.target));
}

TEST_CASE("fitting ideal ladder") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    Presentation P = presentation_matrix(g);

    Ideal F0 = fitting_ideal(P, 0);
    REQUIRE(F0.gens.size() == 1);
    CHECK(monic(F0.gens[0]) == P.image);

    Ideal F1 = fitting_ideal(P, 1);
    CHECK(F1.gens.size() == 4); // the four entries of lambda

    // m = 2 <= k: unit ideal
    Ideal F2 = fitting_ideal(P, 2);
    REQUIRE(F2.gens.size() == 1);
    CHECK(F2.gens[0].is_constant());
    Ideal F3 = fitting_ideal(P, 3);
    REQUIRE(F3.gens.size() == 1);
    CHECK(F3.gens[0].is_constant());
}

TEST_CASE("image equation of a branch") {
    MapGerm g = parse_germ("Phi(s,t) = (s, t^2, t^3)");
    const Branch& b = g.mono();
    Ring target(std::vector<std::string>{"x", "y", "z"});
    Poly im = image_equation(b, target);
    CHECK(im == parse_poly("y^3 - z^2", target));
    // the image equation pulls back to zero
    CHECK(substitute(im, b.source, {b.comps[0], b.comps[1], b.comps[2]}).is_zero());
}

TEST_CASE("target names avoid the source names") {
    Ring src({"x", "y"});
    std::array<std::string, 3> names = target_names(src);
    for (const std::string& n : names) CHECK_FALSE(src.has(n));
}
