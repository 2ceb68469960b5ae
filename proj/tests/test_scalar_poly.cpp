#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "germlink/poly_text.hpp"

using namespace germlink;

TEST_CASE("scalar field axioms on samples") {
    Scalar a = Scalar::rational(3, 4);
    Scalar b(mpq_class(-2), mpq_class(5)); // -2 + 5i
    Scalar i = Scalar::i();

    CHECK(i * i == Scalar(-1));
    CHECK(a + b == b + a);
    CHECK((a * b) * i == a * (b * i));
    CHECK(a * (b + i) == a * b + a * i);
    CHECK(b * b.inverse() == Scalar(1));
    CHECK((a / b) * b == a);
    CHECK(-(-b) == b);
}

TEST_CASE("conjugation and norm") {
    Scalar z(mpq_class(1, 2), mpq_class(-3));
    CHECK(z.conj().conj() == z);
    CHECK(z * z.conj() == Scalar(z.norm()));
    CHECK(z.norm() == mpq_class(1, 4) + 9);
    CHECK(Scalar(7).is_real());
    CHECK_FALSE(z.is_real());
    CHECK(Scalar::rational(2, 3).is_positive_real());
    CHECK_FALSE(Scalar(-1).is_positive_real());
}

TEST_CASE("scalar printing") {
    CHECK(Scalar::rational(-1, 2).str() == "-1/2");
    CHECK(Scalar::i().str() == "i");
    CHECK(Scalar(mpq_class(2), mpq_class(-3)).str() == "2-3*i");
    CHECK(Scalar(0).str() == "0");
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), error);
    CHECK_THROWS_AS(Scalar(0).inverse(), error);
}

static Ring xy() { return Ring({"x", "y"}); }

TEST_CASE("poly ring identities") {
    Ring r = xy();
    Poly x = Poly::variable(r, "x");
    Poly y = Poly::variable(r, "y");
    Poly one = Poly::constant(r, Scalar(1));

    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x + y).pow(2) == x * x + Scalar(2) * x * y + y * y);
    CHECK(x * one == x);
    CHECK((x - x).is_zero());
    CHECK(x.degree() == 1);
    CHECK((x * x * y).degree() == 3);
    CHECK(Poly(r).degree() == -1);
    CHECK((x * y + x).degree_in(r.index("y")) == 1);
}

TEST_CASE("terms iterate in descending degrevlex") {
    Ring r = xy();
    Poly p = parse_poly("y + x^2*y + x + x*y^2", r);
    std::vector<Monomial> seen;
    for (const auto& [m, c] : p.terms()) seen.push_back(m);
    for (size_t k = 1; k < seen.size(); ++k)
        CHECK(degrevlex_cmp(seen[k - 1], seen[k]) > 0);
    CHECK(p.str() == "x^2*y + x*y^2 + x + y");
}

TEST_CASE("parse and print round trip") {
    Ring r = xy();
    for (const char* text : {"x^2 - 2*x*y + y^2", "1/2*x - i*y", "(x + y)^3",
                             "x*(y - 1/3) + i", "-x^4 + 7"}) {
        Poly p = parse_poly(text, r);
        CHECK(parse_poly(p.str(), r) == p);
    }
}

TEST_CASE("parse errors carry position") {
    Ring r = xy();
    CHECK_THROWS_AS(parse_poly("x + z", r), parse_error);
    CHECK_THROWS_AS(parse_poly("x +", r), parse_error);
    CHECK_THROWS_AS(parse_poly("x ^ y", r), parse_error);
    CHECK_THROWS_AS(parse_poly("1/0", r), parse_error);
    try {
        parse_poly("x +\n q", r);
        FAIL("should not parse");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
        CHECK(e.col == 2);
    }
}

TEST_CASE("ring mismatch is detected") {
    Poly x = Poly::variable(xy(), "x");
    Poly u = Poly::variable(Ring({"u", "v"}), "u");
    CHECK_THROWS_AS(x + u, ring_mismatch);
}

TEST_CASE("substitute and partials") {
    Ring r = xy();
    Ring st({"s", "t"});
    Poly p = parse_poly("x^2*y - y", r);
    Poly s = Poly::variable(st, "s"), t = Poly::variable(st, "t");

    // x -> s+t, y -> s*t
    Poly q = substitute(p, st, {s + t, s * t});
    CHECK(q == (s + t).pow(2) * (s * t) - s * t);

    CHECK(partial_derivative(p, "x") == parse_poly("2*x*y", r));
    CHECK(partial_derivative(p, "y") == parse_poly("x^2 - 1", r));
}

TEST_CASE("divided difference is the exact quotient") {
    Ring r = xy();
    Poly p = parse_poly("x^3*y + x^2 + y", r);
    Poly dd = divided_difference(p, "x", "x1", "x2");

    const Ring& r2 = dd.ring();
    Poly x1 = Poly::variable(r2, "x1"), x2 = Poly::variable(r2, "x2");
    Poly p1 = substitute(p, r2, {x1, Poly::variable(r2, "y")});
    Poly p2 = substitute(p, r2, {x2, Poly::variable(r2, "y")});
    CHECK(dd * (x1 - x2) == p1 - p2);

    // symmetric case: no x at all gives 0
    CHECK(divided_difference(parse_poly("y^2", r), "x", "x1", "x2").is_zero());
}

TEST_CASE("monic and conjugate_coeffs") {
    Ring r = xy();
    Poly p = parse_poly("2*i*x^2 + 4*y", r);
    Poly m = monic(p);
    CHECK(m == parse_poly("x^2 - 2*i*y", r));
    CHECK(monic(m) == m);
    CHECK(conjugate_coeffs(conjugate_coeffs(p)) == p);
    CHECK(conjugate_coeffs(parse_poly("i*x", r)) == parse_poly("-i*x", r));
}

TEST_CASE("rename_into maps by name") {
    Ring small({"y", "x"});
    Ring big({"x", "u", "y"});
    Poly p = parse_poly("x*y + y^2", small);
    Poly q = rename_into(p, big);
    CHECK(q.ring() == big);
    CHECK(q == parse_poly("x*y + y^2", big));
}

TEST_CASE("ideal drops zero generators") {
    Ring r = xy();
    Ideal I(r, {parse_poly("x", r), Poly(r), parse_poly("y", r)});
    CHECK(I.gens.size() == 2);
}
