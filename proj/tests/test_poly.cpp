#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace cohall;
using testutil::P;
using testutil::R;

TEST_CASE("ring expansion") {
    Poly lhs = P("(s(1,1) - s(1,2)) * (s(1,1) - s(1,2) + h)");
    Poly expected = P("s(1,1)^2 - 2*s(1,1)*s(1,2) + s(1,2)^2 + h*s(1,1) - h*s(1,2)");
    CHECK(lhs == expected);
}

TEST_CASE("f / f is one") {
    RatFun f = R("s(1,1)^2 - 2*s(1,1)*s(1,2) + 3*h");
    CHECK((f / f).is_poly());
    CHECK((f / f).num() == Poly(1L));

    RatFun zero;
    CHECK_THROWS_AS(f / zero, division_error);
}

TEST_CASE("exact quotient of a difference of squares") {
    RatFun q = R("h^2 - (s(1,1) - s(1,2))^2") / R("s(1,1) - s(1,2) + h");
    CHECK(q.is_poly());
    CHECK(q.num() == P("h - s(1,1) + s(1,2)"));
}

TEST_CASE("division that does not cancel stays a reduced fraction") {
    RatFun q = R("s(1,1) - s(1,2)") / R("s(1,1) + s(1,2)");
    CHECK_FALSE(q.is_poly());
    // Denominator is monic in the canonical order.
    CHECK(q.den().leading().second == 1);
    CHECK(q == RatFun(P("s(1,1) - s(1,2)"), P("s(1,1) + s(1,2)")));
    // Cross-multiplied equality, not syntactic equality.
    CHECK(q == RatFun(P("2*s(1,1) - 2*s(1,2)"), P("2*s(1,1) + 2*s(1,2)")));
}

TEST_CASE("substitution of linear forms") {
    Symbol s = Symbol::chern(0, 1);
    Poly a1 = Poly::var(Symbol::framing(0, 1));
    Poly a2 = Poly::var(Symbol::framing(0, 2));

    Poly f = P("s(1,1) - a(1,2) + h");
    auto sub = [&](const Poly& image) {
        return f.substitute([&](const Symbol& x) { return x == s ? &image : nullptr; });
    };
    CHECK(sub(a1) == P("a(1,1) - a(1,2) + h"));
    CHECK(sub(a2) == P("h"));
}

TEST_CASE("substitution into a fraction") {
    RatFun f(P("s(1,1) - s(1,2)"), P("s(1,1) + s(1,2)"));
    Symbol s1 = Symbol::chern(0, 1);

    Poly plus = Poly::var(Symbol::chern(0, 2));
    RatFun r = f.substitute([&](const Symbol& x) { return x == s1 ? &plus : nullptr; });
    CHECK(r.is_zero());

    Poly minus = -Poly::var(Symbol::chern(0, 2));
    CHECK_THROWS_AS(f.substitute([&](const Symbol& x) { return x == s1 ? &minus : nullptr; }),
                    division_error);
}

TEST_CASE("zero polynomial has no stored terms") {
    Poly z = P("s(1,1) - s(1,1)");
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
    CHECK(z == Poly());
}

TEST_CASE("rename rejects collisions inside a monomial") {
    Poly f = P("s(1,1) * s(1,2)");
    CHECK_THROWS_AS(f.rename([](const Symbol&) { return Symbol::chern(0, 1); }), error);
}

TEST_CASE("h flip is an involution") {
    std::mt19937_64 rng(7);
    auto syms = testutil::grade_symbols(testutil::a1(), {2}, {1});
    for (int it = 0; it < 20; ++it) {
        Poly p = testutil::random_poly(rng, syms, 3, 5);
        CHECK(p.flip_h().flip_h() == p);
    }
}

TEST_CASE("weight extraction from linear polynomials") {
    Weight w = weight_from_poly(P("a(1,2) - s(1,1) + 2*h"));
    CHECK(w.coeff(Symbol::framing(0, 2)) == 1);
    CHECK(w.coeff(Symbol::chern(0, 1)) == -1);
    CHECK(w.coeff(Symbol::hbar()) == 2);
    CHECK_THROWS_AS(weight_from_poly(P("s(1,1)^2")), input_error);
    CHECK_THROWS_AS(weight_from_poly(P("1/2*s(1,1)")), input_error);
}
