#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tracering/poly.hpp"
#include "tracering/poly_io.hpp"

using namespace tracering;

namespace {

Poly P(const RingPtr& r, const std::string& s) { return parse_poly(r, s); }

// uniform random small polynomial for the ring-axiom properties
Poly random_poly(const RingPtr& r, std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 4), expo(0, 3), coef(-6, 6);
    std::vector<PTerm<Rat>> ts;
    for (int i = nterms(rng); i > 0; --i) {
        Monomial m(r->nvars(), 0);
        for (auto& e : m) e = expo(rng);
        ts.push_back({m, Rat(coef(rng))});
    }
    return Poly(r, std::move(ts));
}

}  // namespace

TEST_CASE("basic arithmetic matches hand expansion") {
    auto r = Ring::lex({"x", "y"});
    CHECK(P(r, "(y-1)*(y+1)") == P(r, "y^2-1"));

    auto rm = Ring::lex({"m", "z"});
    Poly p1 = P(rm, "z^4 - m*z^2 - z^2 + 1");
    CHECK((p1 - p1).is_zero());

    auto rb = Ring::lex({"l", "z", "t"});
    Poly lhs = P(rb, "(2+l)*z^2") * P(rb, "2*t^2");
    Poly rhs = P(rb, "(4+2*l)*z^2*t^2");
    CHECK(lhs == rhs);
    std::vector<std::pair<uint32_t, Rat>> at{
        {rb->var("l"), Rat(1)}, {rb->var("z"), Rat(2)}, {rb->var("t"), Rat(3)}};
    CHECK(eval_rat(lhs, at) == eval_rat(rhs, at));
    CHECK(eval_rat(lhs, at) == Rat(216));
}

TEST_CASE("content and primitive part") {
    auto r = Ring::lex({"l", "t", "v", "y"});
    Poly p = P(r, "4*v - 6*t*y + t*y^3");
    auto [c, prim] = content_and_primitive(p);
    CHECK(c == Rat(1));
    CHECK(prim == p);

    auto rx = Ring::lex({"x"});
    auto [c2, prim2] = content_and_primitive(P(rx, "3/2*x^2 + 3*x"));
    CHECK(c2 == make_rat(3, 2));
    CHECK(prim2 == P(rx, "x^2 + 2*x"));

    auto ry = Ring::lex({"y"});
    Poly q = P(ry, "-2*y + 4");
    auto [c3, prim3] = content_and_primitive(q);
    CHECK(c3 == Rat(-2));
    CHECK(prim3 == P(ry, "y - 2"));
    CHECK(prim3.scaled(c3) == q);

    CHECK_THROWS(content_and_primitive(Poly::zero(ry)));
}

TEST_CASE("exact evaluation") {
    auto r = Ring::lex({"x", "y"});
    Poly fig8 = P(r, "y^2 + (-1 - x^2)*y + (-1 + 2*x^2)");
    CHECK(eval_rat(fig8, {{0, Rat(2)}, {1, Rat(3)}}) == Rat(1));
    CHECK(eval_rat(fig8, {{0, Rat(0)}, {1, Rat(0)}}) == Rat(-1));  // constant term

    NumberField nf;
    nf.var = 0;
    nf.min_poly = {Rat(1), Rat(0), Rat(1)};  // theta^2 + 1
    MonomialOrder ord;
    ord.priority = {0};
    auto rt = Ring::make({"i"}, ord, nf);
    Poly theta2 = parse_poly(rt, "i^2");
    CHECK(theta2 == P(rt, "-1"));

    CHECK_THROWS(eval_rat(fig8, {{0, Rat(1)}}));  // unbound y
}

TEST_CASE("ring axioms and eval homomorphism on random polynomials") {
    auto r = Ring::lex({"x", "y", "z"});
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> pt(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        Poly a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        std::vector<std::pair<uint32_t, Rat>> point = {
            {0, Rat(pt(rng))}, {1, Rat(pt(rng))}, {2, Rat(pt(rng))}};
        CHECK(eval_rat(a * b, point) == eval_rat(a, point) * eval_rat(b, point));
        CHECK(eval_rat(a + b, point) == eval_rat(a, point) + eval_rat(b, point));
    }
}

TEST_CASE("canonical form is independent of insertion order") {
    auto r = Ring::lex({"x", "y"});
    std::mt19937 rng(7);
    std::vector<PTerm<Rat>> ts;
    for (uint32_t i = 0; i < 4; ++i)
        for (uint32_t j = 0; j < 4; ++j)
            ts.push_back({Monomial{i, j}, Rat(static_cast<int>(3 * i) - static_cast<int>(j))});
    for (int trial = 0; trial < 10; ++trial) {
        auto shuffled = ts;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        Poly a(r, std::vector<PTerm<Rat>>(ts));
        Poly b(r, std::move(shuffled));
        CHECK(a == b);
        CHECK(a.terms() == b.terms());
    }
}

TEST_CASE("canonical printing and parsing round-trip") {
    auto r = Ring::lex({"l", "z", "y", "t"});
    Poly p = P(r, "z^4 + (-2 - l)*2*z^2 + 16");
    CHECK(to_string(p) == "z^4 - 2*l*z^2 - 4*z^2 + 16");
    CHECK(P(r, to_string(p)) == p);

    auto r2 = Ring::lex({"x", "y"});
    Poly fig8 = P(r2, "y^2+(-1-x^2)*y+(-1+2*x^2)");
    CHECK(to_string(fig8) == "y^2 - x^2*y - y + 2*x^2 - 1");
    CHECK(to_string(P(r2, "1/2*x - y")) == "-y + 1/2*x");
    CHECK(to_string(Poly::zero(r2)) == "0");

    CHECK_THROWS_AS(P(r2, "x + q"), ParseError);
    CHECK_THROWS_AS(P(r2, "x +"), ParseError);
    CHECK_THROWS_AS(P(r2, "x^-2"), ParseError);
}

TEST_CASE("domain mismatch is rejected") {
    auto r1 = Ring::lex({"x"});
    auto r2 = Ring::lex({"y"});
    CHECK_THROWS(P(r1, "x") + P(r2, "y"));
}
