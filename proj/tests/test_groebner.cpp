#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "tracering/groebner.hpp"
#include "tracering/poly_io.hpp"

using namespace tracering;
using fixtures::ideal_of;

namespace {

std::vector<std::string> gb_strings(const GroebnerQ& gb) {
    std::vector<std::string> out;
    for (const auto& e : gb.elems) out.push_back(to_string(e));
    return out;
}

}  // namespace

TEST_CASE("single generator is its own reduced basis") {
    auto I = fixtures::trefoil_x0();
    auto gb = buchberger(I);
    REQUIRE(gb.elems.size() == 1);
    CHECK(to_string(gb.elems[0]) == "y - 1");
    CHECK(is_reduced_groebner_basis(gb));
}

TEST_CASE("hand-run Buchberger example") {
    auto r = Ring::lex({"y", "x"});  // x > y
    auto gb = buchberger(ideal_of(r, {"x*y - 1", "y^2 - 1"}));
    auto strs = gb_strings(gb);
    REQUIRE(strs.size() == 2);
    CHECK(strs[0] == "y^2 - 1");
    CHECK(strs[1] == "x - y");
    CHECK(is_reduced_groebner_basis(gb));
}

TEST_CASE("M003 presentation is already a reduced basis up to scaling") {
    auto gb = buchberger(fixtures::m003_x0());
    auto strs = gb_strings(gb);
    REQUIRE(strs.size() == 3);
    CHECK(strs[0] == "z^4 - m*z^2 - z^2 + 1");
    CHECK(strs[1] == "y - z^2 + m");
    CHECK(strs[2] == "x - z^3 + m*z + z");
}

TEST_CASE("torus bundle generators form their own basis over Q(i)") {
    auto I = fixtures::ptb_xeps_c();
    auto gb = buchberger(I);
    // reduced basis: monic g3, g2/2, g1, and the adjoined minimal polynomial
    auto strs = gb_strings(gb);
    REQUIRE(strs.size() == 4);
    CHECK(strs[0] == "i^2 + 1");
    CHECK(strs[1] == "z^4 - 2*l*z^2 - 4*z^2 + 16");
    CHECK(strs[2] == "y^2 + 1/2*z^2 - l - 4");
    CHECK(strs[3] == "t + 1/2*i*z^2");
    CHECK(is_reduced_groebner_basis(gb));
}

TEST_CASE("normal form and membership") {
    auto I = fixtures::ptb_xeps_q_full();
    auto gb = buchberger(I);
    CHECK(ideal_member(parse_poly(I.ring, "8*u + 2*t*y*z - t*y^3*z"), gb));
    CHECK(ideal_member(parse_poly(I.ring, "y^2*z - 2*y*x"), gb));
    CHECK_FALSE(ideal_member(parse_poly(I.ring, "1"), gb));

    auto r = Ring::lex({"x", "y"});
    auto gb2 = buchberger(ideal_of(r, {"y - 1"}));
    CHECK(normal_form(parse_poly(r, "x^2"), gb2) == parse_poly(r, "x^2"));
    CHECK(normal_form(parse_poly(r, "y - 1"), gb2).is_zero());

    // p - normal_form(p) is always a member
    Poly p = parse_poly(I.ring, "t*y*z^2 + u^2 - 3*l");
    Poly nf = normal_form(p, gb);
    CHECK(ideal_member(p - nf, gb));
}

TEST_CASE("8_20 basis verifies as printed and its dependences are members") {
    auto I = fixtures::k820_x0();
    auto gb = buchberger(I);
    REQUIRE(gb.elems.size() == 5);
    CHECK(is_reduced_groebner_basis(gb));
    // leading monomials (ascending): yx^4, y^3z, y^2xz, x^2z, z^2
    std::vector<Monomial> lms;
    for (const auto& e : gb.elems) lms.push_back(e.lm());
    auto mono = [&](uint32_t ey, uint32_t ex, uint32_t ez) { return Monomial{ey, ex, ez}; };
    CHECK(lms[0] == mono(1, 4, 0));
    CHECK(lms[1] == mono(3, 0, 1));
    CHECK(lms[2] == mono(2, 1, 1));
    CHECK(lms[3] == mono(0, 2, 1));
    CHECK(lms[4] == mono(0, 0, 2));
    // the degree-5 dependence for z
    CHECK(ideal_member(parse_poly(I.ring, fixtures::k820_z_dependence()), gb));
    // z is rationally dependent on (x, y) on this curve
    const char* E =
        "(x^5 - 2*x^3 + x)*z + (x^2 + 1)*y^4 + (-x^4 + 2*x^2 + 1)*y^3 + (-x^2 - 3)*y^2 + "
        "(-x^6 + 6*x^4 - 9*x^2 - 4)*y + (-x^4 + 4*x^2 + 1)*(x^2 - 1)";
    CHECK(ideal_member(parse_poly(I.ring, E), gb));
}

TEST_CASE("reduced basis is independent of generator order") {
    std::mt19937 rng(99);
    for (auto maker : {fixtures::fig8_y0, fixtures::m003_x0, fixtures::k820_x0,
                       fixtures::ptb_xeps_q_full}) {
        IdealPresentation I = maker();
        auto ref = gb_strings(buchberger(I));
        for (int trial = 0; trial < 5; ++trial) {
            IdealPresentation J = I;
            std::shuffle(J.gens.begin(), J.gens.end(), rng);
            CHECK(gb_strings(buchberger(J)) == ref);
        }
    }
}

TEST_CASE("elimination ideals") {
    // fig8 Y0 -> (l, y) is principal, generated by the quartic
    auto I = fixtures::fig8_y0();
    auto E = eliminate(I, {I.ring->var("l"), I.ring->var("y")});
    REQUIRE(E.gens.size() == 1);
    auto [c, prim] = content_and_primitive(E.gens[0]);
    CHECK(to_string(prim) == "y^4 - 7*y^3 - l*y^2 + 16*y^2 + 4*l*y - 11*y - 4*l - 1");

    // rational contraction of the theta-side torus bundle ideal
    auto C = fixtures::ptb_xeps_c();
    std::vector<uint32_t> keep;
    for (uint32_t v = 1; v < C.ring->nvars(); ++v) keep.push_back(v);
    auto R = eliminate(C, keep);
    auto gbR = buchberger_impl<Rat>(R.ring, R.gens);
    auto gbQ4 = buchberger(fixtures::ptb_xeps_q());
    // same ideal: mutual membership
    for (const auto& g : gbR.elems) CHECK(ideal_member(g.mapped_to(gbQ4.ring), gbQ4));
    for (const auto& g : gbQ4.elems) CHECK(ideal_member(g.mapped_to(gbR.ring), gbR));

    // identity elimination returns the same ideal
    auto all = eliminate(fixtures::fig8_x0(), {0, 1});
    CHECK(all.gens.size() == 1);

    // every eliminated generator is a member of the original ideal
    auto gbI = buchberger(I);
    for (const auto& g : E.gens) CHECK(ideal_member(g.mapped_to(I.ring), gbI));
}

TEST_CASE("generic fiber dimensions") {
    auto fig8 = fixtures::fig8_x0();
    auto d1 = generic_fiber_dim(fig8, fig8.ring->var("x"));
    CHECK(d1.finite);
    CHECK(d1.dim == 2);

    auto m003 = fixtures::m003_x0();
    auto d2 = generic_fiber_dim(m003, m003.ring->var("m"));
    CHECK(d2.finite);
    CHECK(d2.dim == 4);

    auto ptbc = fixtures::ptb_xeps_c();
    auto d3 = generic_fiber_dim(ptbc, ptbc.ring->var("l"));
    CHECK(d3.finite);
    CHECK(d3.dim == 8);

    auto ptbq = fixtures::ptb_xeps_q();
    auto d4 = generic_fiber_dim(ptbq, ptbq.ring->var("l"));
    CHECK(d4.finite);
    CHECK(d4.dim == 16);

    auto ptbq8 = fixtures::ptb_xeps_q_full();
    auto d5 = generic_fiber_dim(ptbq8, ptbq8.ring->var("l"));
    CHECK(d5.finite);
    CHECK(d5.dim == 16);

    // hyperbola: generic dimension 1 even though y is not integral over C[x]
    auto hyp = ideal_of(Ring::lex({"x", "y"}), {"x*y - 1"});
    auto d6 = generic_fiber_dim(hyp, 0);
    CHECK(d6.finite);
    CHECK(d6.dim == 1);

    // zero ideal: infinite
    IdealPresentation zero{Ring::lex({"x", "y"}), {}};
    CHECK_FALSE(generic_fiber_dim(zero, 0).finite);
}

TEST_CASE("8_20 generic fiber over Q(x) and its staircase") {
    auto I = fixtures::k820_x0();
    auto fq = fiber_quotient(I, I.ring->var("x"));
    REQUIRE(fq.finite);
    CHECK(fq.dim() == 5);
    // standard monomials are 1, y, y^2, y^3, y^4
    REQUIRE(fq.std_monos.size() == 5);
    for (uint32_t k = 0; k < 5; ++k) {
        Monomial m(2, 0);
        m[fq.fiber_ring->var("y")] = k;
        CHECK(fq.std_monos[k] == m);
    }
}
