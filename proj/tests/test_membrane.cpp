#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germlink/membrane.hpp"
#include "germlink/poly_text.hpp"

using namespace germlink;

TEST_CASE("chart conjugation is an involution fixing the shift") {
    ChartRing cr = make_chart_ring();
    Poly p = parse_poly("i*u^2 + u*ub - 3*delta + (1/2 - i)*ub^3", cr.ring);
    Poly q = chart_conjugate(cr, p);
    CHECK(chart_conjugate(cr, q) == p);
    CHECK(chart_conjugate(cr, cr.shift()) == cr.shift());
    CHECK(chart_conjugate(cr, cr.u()) == cr.ub());
    // the real part u*ub is fixed
    CHECK(chart_conjugate(cr, cr.u() * cr.ub()) == cr.u() * cr.ub());
}

TEST_CASE("shift_only") {
    ChartRing cr = make_chart_ring();
    CHECK(shift_only(cr, parse_poly("delta^3 - 2*delta", cr.ring)));
    CHECK(shift_only(cr, Poly(cr.ring)));
    CHECK_FALSE(shift_only(cr, cr.u()));
}

TEST_CASE("descent through the double cover halves even exponents") {
    ChartRing cr = make_chart_ring();
    Poly p = parse_poly("u^4*ub^2 + delta*u^2", cr.ring);
    CHECK(descend_double_cover(cr, p) ==
          parse_poly("u^2*ub + delta*u", cr.ring));
    CHECK_THROWS_AS(descend_double_cover(cr, cr.u()), consistency_error);
    CHECK_THROWS_AS(descend_double_cover(cr, parse_poly("u^2 + ub", cr.ring)),
                    consistency_error);
}

TEST_CASE("pushforward sums the deck and returns the common image") {
    MapGerm g = parse_germ("Phi(s,t) = (s^2, s*t, t)");
    ChartRing cr = make_chart_ring();

    NormalFieldData nf;
    nf.chart = cr;
    nf.mode = NormalFieldData::Mode::gradient;
    nf.deck = {DeckElement{0, {cr.u(), Poly(cr.ring)}},
               DeckElement{0, {-cr.u(), Poly(cr.ring)}}};
    nf.d_by_branch = {Poly::variable(g.mono().source, "t")};

    PushedField pf = pushforward_sum_field(g, nf);
    CHECK(pf.base[0] == cr.u() * cr.u());
    CHECK(pf.base[1].is_zero());
    CHECK(pf.base[2].is_zero());

    // deck elements with different images are rejected
    nf.deck[1].preimage[0] = cr.u() + cr.shift();
    CHECK_THROWS_AS(pushforward_sum_field(g, nf), consistency_error);

    // gradient mode needs one d per branch
    nf.deck[1].preimage[0] = -cr.u();
    nf.d_by_branch.clear();
    CHECK_THROWS_AS(pushforward_sum_field(g, nf), error);
}

TEST_CASE("orientation sign of the standard frame") {
    ChartRing cr = make_chart_ring();
    const Ring& r = cr.ring;
    Poly zero(r), one(r, Scalar(1)), im = Poly::constant(r, Scalar::i());

    auto col = [&](Poly a, Poly b, Poly c) { return real_column(cr, Vec3P{a, b, c}); };
    std::array<std::array<Poly, 6>, 6> cols = {
        col(one, zero, zero), col(im, zero, zero),
        col(zero, one, zero), col(zero, im, zero),
        col(zero, zero, one), col(zero, zero, im),
    };
    CHECK(orientation_sign(cr, cols) == 1);

    std::swap(cols[0], cols[1]);
    CHECK(orientation_sign(cr, cols) == -1);

    // lowest shift order decides: delta^2 e1 vs -delta e1 differ only by sign
    std::swap(cols[0], cols[1]);
    cols[0] = col(Poly(r, Scalar(-1)) * cr.shift(), zero, zero);
    CHECK(orientation_sign(cr, cols) == -1);

    // a degenerate frame has no sign
    cols[0] = cols[2];
    CHECK(orientation_sign(cr, cols) == 0);
}

static MembranePatch line_patch(const ChartRing& cr, const Poly& x_expr) {
    return shift_membrane(cr, Vec3P{x_expr, Poly(cr.ring), Poly(cr.ring)},
                          Vec3P{Poly(cr.ring), Poly(cr.ring), Poly(cr.ring)}, "test");
}

TEST_CASE("affine intersection rule") {
    ChartRing cr = make_chart_ring();
    Ring target({"x", "y", "z"});
    Poly x = Poly::variable(target, "x");

    // u - 3 ub: antiholomorphic part dominates, one negative crossing at 0
    MembranePatch c = line_patch(cr, cr.u() - Scalar(3) * cr.ub());
    IntersectionList il = intersect_curve_surface(c, x);
    REQUIRE(il.points.size() == 1);
    CHECK(il.points[0].sign == -1);
    CHECK(il.points[0].rule == "affine");
    CHECK(il.points[0].root.is_zero());
    CHECK(il.total == -1);

    // 2u + ub: holomorphic part dominates
    il = intersect_curve_surface(line_patch(cr, Scalar(2) * cr.u() + cr.ub()), x);
    REQUIRE(il.points.size() == 1);
    CHECK(il.points[0].sign == 1);

    // off-origin root: u - delta stays affine with root delta
    il = intersect_curve_surface(line_patch(cr, cr.u() - cr.shift()), x);
    REQUIRE(il.points.size() == 1);
    CHECK(il.points[0].root == cr.shift());
    CHECK(il.points[0].sign == 1);

    // |beta| = |gamma| is a genuine boundary case, not a guess
    CHECK_THROWS_AS(intersect_curve_surface(line_patch(cr, cr.u() - cr.ub()), x),
                    not_supported);

    // a shift-only nonzero equation never vanishes for small positive shifts
    il = intersect_curve_surface(line_patch(cr, cr.shift()), x);
    CHECK(il.points.empty());
    CHECK(il.total == 0);

    // a membrane inside the surface has no isolated intersections
    CHECK_THROWS_AS(intersect_curve_surface(line_patch(cr, Poly(cr.ring)), x),
                    not_supported);
}

TEST_CASE("monomial intersection rule") {
    ChartRing cr = make_chart_ring();
    Ring target({"x", "y", "z"});
    Poly x = Poly::variable(target, "x");

    IntersectionList il =
        intersect_curve_surface(line_patch(cr, cr.ub() * cr.ub() * cr.ub()), x);
    REQUIRE(il.points.size() == 1);
    CHECK(il.points[0].rule == "monomial");
    CHECK(il.points[0].sign == -3);

    il = intersect_curve_surface(line_patch(cr, cr.u() * cr.u()), x);
    REQUIRE(il.points.size() == 1);
    CHECK(il.points[0].sign == 2);
}

TEST_CASE("membrane translation moves the root") {
    ChartRing cr = make_chart_ring();
    Ring target({"x", "y", "z"});
    Poly x = Poly::variable(target, "x");

    MembranePatch c = line_patch(cr, Scalar(2) * cr.u() + cr.ub());
    std::array<Scalar, 3> eps = {Scalar::rational(1, 3), Scalar(0), Scalar(0)};
    MembranePatch moved = translate_membrane(c, eps);

    IntersectionList il = intersect_curve_surface(moved, x);
    REQUIRE(il.points.size() == 1);
    CHECK(il.points[0].sign == 1);
    CHECK(il.points[0].root == Poly(cr.ring, Scalar::rational(1, 3)));
}

TEST_CASE("umbrella membrane: one positive crossing") {
    SignTable t = verify_lemma_umbrella_L1();
    REQUIRE(t.entries.size() == 1);
    CHECK(t.entries[0].sign == 1);
    CHECK(t.entries[0].rule == "affine");
    CHECK(t.total == 1);
    CHECK(t.cross_checked);
    // the crossing sits at (0, 0, 2 delta)
    ChartRing cr = make_chart_ring();
    CHECK(t.entries[0].point[0].is_zero());
    CHECK(t.entries[0].point[1].is_zero());
    CHECK(t.entries[0].point[2] == Scalar(2) * cr.shift());
}

TEST_CASE("umbrella membrane with the formal shift check") {
    SignTable t = verify_lemma_umbrella_L1(VerifyOptions{1, true});
    CHECK(t.shift_independent);
    CHECK(t.total == 1);
}

TEST_CASE("triple point membranes: diagonal signs") {
    SignTable t = verify_lemma_triple_L1(VerifyOptions{1, false});
    REQUIRE(t.entries.size() == 9);
    CHECK(t.total == -3);
    CHECK(t.cross_checked);
    for (const SignEntry& e : t.entries) {
        // membranes are named after target axes, sheets after their equations
        bool diagonal = e.membrane.back() == e.sheet.back();
        CHECK(e.sign == (diagonal ? 1 : -1));
    }
    bool cyclic_note = false;
    for (const std::string& n : t.notes)
        if (n.find("cyclic") != std::string::npos) cyclic_note = true;
    CHECK(cyclic_note);
}

TEST_CASE("second umbrella field cancels the first") {
    SignTable l2 = verify_umbrella_L2(VerifyOptions{1, false});
    REQUIRE(l2.entries.size() == 1);
    CHECK(l2.entries[0].sign == -1);
    CHECK(l2.entries[0].rule == "monomial");
    CHECK(l2.total == -1);

    SignTable l1 = verify_lemma_umbrella_L1(VerifyOptions{1, false});
    CHECK(l1.total + l2.total == 0);
}

TEST_CASE("orientation reversal negates every table") {
    CHECK(verify_lemma_umbrella_L1(VerifyOptions{-1, false}).total == -1);
    CHECK(verify_lemma_triple_L1(VerifyOptions{-1, false}).total == 3);
    CHECK(verify_umbrella_L2(VerifyOptions{-1, false}).total == 1);
}

TEST_CASE("sign table formatting is stable") {
    SignTable t = verify_lemma_umbrella_L1(VerifyOptions{1, false});
    std::string s = format_sign_table(t);
    CHECK(s.find("umbrella L1") != std::string::npos);
    CHECK(s.find("+1 at (0, 0, 2*delta)") != std::string::npos);
    CHECK(s.find("total +1") != std::string::npos);
}
