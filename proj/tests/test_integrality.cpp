#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tracering/integrality.hpp"
#include "tracering/poly_io.hpp"

using namespace tracering;
using fixtures::ideal_of;

TEST_CASE("image curves match the defining polynomials") {
    auto F = fixtures::fig8_x0();
    Poly P = image_curve(F, parse_poly(F.ring, "y"), parse_poly(F.ring, "x"));
    CHECK(to_string(P) == "y^2 - x^2*y - y + 2*x^2 - 1");

    auto Y = fixtures::fig8_y0();
    Poly PY = image_curve(Y, parse_poly(Y.ring, "y"), parse_poly(Y.ring, "l"));
    CHECK(to_string(PY) == "y^4 - 7*y^3 - l*y^2 + 16*y^2 + 4*l*y - 11*y - 4*l - 1");

    auto K = fixtures::k820_x0();
    Poly PZ = image_curve(K, parse_poly(K.ring, "z"), parse_poly(K.ring, "x"));
    Poly expected = parse_poly(PZ.ring(), fixtures::k820_z_dependence());
    CHECK(PZ == expected);
}

TEST_CASE("image curve rejects constant bases and vanishes on parametrized points") {
    auto T = fixtures::trefoil_x0();
    CHECK_THROWS_AS(image_curve(T, parse_poly(T.ring, "x"), parse_poly(T.ring, "y")),
                    ConstantBaseError);

    // M003 X0 is rational: z -> (m, x, y, z) with m = (z^4 - z^2 + 1)/z^2
    auto M = fixtures::m003_x0();
    Poly PM = image_curve(M, parse_poly(M.ring, "y"), parse_poly(M.ring, "m"));
    auto [c, prim] = content_and_primitive(PM);
    CHECK(c == 1);
    CHECK(PM.lc() > 0);
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> zv(1, 60);
    auto R2 = PM.ring();
    int checked = 0;
    for (int i = 0; checked < 50; ++i) {
        Rat z0(zv(rng), zv(rng) % 7 + 1);
        if (z0 == 0) continue;
        Rat m0 = (z0 * z0 * z0 * z0 - z0 * z0 + 1) / (z0 * z0);
        Rat y0 = z0 * z0 - m0;
        CHECK(eval_rat(PM, {{R2->var("m"), m0}, {R2->var("y"), y0}}) == 0);
        ++checked;
    }
}

TEST_CASE("integral dependence over field, rational, and integer bases") {
    auto H = ideal_of(Ring::lex({"x", "y"}), {"x*y - 1"});
    auto r = is_integral(H, parse_poly(H.ring, "y"), BaseRingKind::FieldUnivariate,
                         parse_poly(H.ring, "x"));
    CHECK_FALSE(r.integral);
    CHECK(to_string(r.witness) == "x");

    auto K = fixtures::k820_x0();
    auto rz = is_integral(K, parse_poly(K.ring, "y"), BaseRingKind::IntegerUnivariate,
                          parse_poly(K.ring, "x"));
    CHECK(rz.integral);
    CHECK(rz.degree == 5);
    CHECK(has_integer_coefficients(rz.dependence));
    CHECK(rz.dependence.lc() == 1);

    auto F = fixtures::fig8_x0();
    auto rf = is_integral(F, parse_poly(F.ring, "y"), BaseRingKind::IntegerUnivariate,
                          parse_poly(F.ring, "x"));
    CHECK(rf.integral);
    CHECK(to_string(rf.dependence) == "y^2 - x^2*y - y + 2*x^2 - 1");

    // torus bundle: l is not integral over C[t]  (the strongly detected slope)
    auto B = fixtures::ptb_xeps_c();
    auto rb = is_integral(B, parse_poly(B.ring, "l"), BaseRingKind::FieldUnivariate,
                          parse_poly(B.ring, "t"));
    CHECK_FALSE(rb.integral);
    // ... while everything is integral over C[l]
    for (const char* f : {"z", "y", "t"}) {
        auto ri = is_integral(B, parse_poly(B.ring, f), BaseRingKind::FieldUnivariate,
                              parse_poly(B.ring, "l"));
        CHECK(ri.integral);
    }
}

TEST_CASE("C/Q/Z monotonicity on the fixtures") {
    for (auto maker : {fixtures::fig8_x0, fixtures::m003_x0, fixtures::k820_x0}) {
        auto I = maker();
        Poly base = Poly::variable(I.ring, I.ring->order().priority[0]);
        for (uint32_t v = 0; v < I.ring->nvars(); ++v) {
            if (as_variable(base) == v) continue;
            Poly f = Poly::variable(I.ring, v);
            auto rz = is_integral(I, f, BaseRingKind::IntegerUnivariate, base);
            auto rq = is_integral(I, f, BaseRingKind::RationalUnivariate, base);
            auto rc = is_integral(I, f, BaseRingKind::FieldUnivariate, base);
            if (rz.integral) CHECK(rq.integral);
            if (rq.integral) CHECK(rc.integral);
        }
    }
}

TEST_CASE("degree consistency with the stated image-curve degrees") {
    auto F = fixtures::fig8_x0();
    CHECK(image_curve(F, parse_poly(F.ring, "y"), parse_poly(F.ring, "x")).degree_in(1) == 2);
    auto Y = fixtures::fig8_y0();
    CHECK(image_curve(Y, parse_poly(Y.ring, "y"), parse_poly(Y.ring, "l")).degree_in(1) == 4);
    auto K = fixtures::k820_x0();
    CHECK(image_curve(K, parse_poly(K.ring, "z"), parse_poly(K.ring, "x")).degree_in(1) == 5);
}

TEST_CASE("rational contraction") {
    auto C = fixtures::ptb_xeps_c();
    auto R = rational_contraction(C);
    CHECK_FALSE(R.ring->number_field());
    auto gbR = buchberger(R);
    auto gbQ = buchberger(fixtures::ptb_xeps_q());
    for (const auto& g : gbR.elems) CHECK(ideal_member(g.mapped_to(gbQ.ring), gbQ));
    for (const auto& g : gbQ.elems) CHECK(ideal_member(g.mapped_to(gbR.ring), gbR));

    // already-rational input comes back as its reduced basis
    auto F = fixtures::fig8_x0();
    auto RF = rational_contraction(F);
    CHECK(RF.gens.size() == 1);
    CHECK(to_string(RF.gens[0]) == "y^2 - x^2*y - y + 2*x^2 - 1");

    // (y - theta) with theta^2 + 1 contracts to (y^2 + 1)
    NumberField nf;
    nf.var = 0;
    nf.min_poly = {Rat(1), Rat(0), Rat(1)};
    MonomialOrder ord;
    ord.priority = {0, 1};
    auto rth = Ring::make({"th", "y"}, ord, nf);
    auto I = ideal_of(rth, {"y - th"});
    auto RI = rational_contraction(I);
    REQUIRE(RI.gens.size() == 1);
    CHECK(to_string(RI.gens[0]) == "y^2 + 1");
    // membership both ways
    auto gbI = buchberger(I);
    CHECK(ideal_member(RI.gens[0].mapped_to(I.ring), gbI));
}

TEST_CASE("peripheral integrality profiles") {
    // fig8 X0 over its peripheral functions: everything integral
    auto F = fixtures::fig8_x0();
    auto pp = [&](const char* s) { return parse_poly(F.ring, s); };
    std::vector<std::pair<std::string, Poly>> periph{
        {"mu", pp("x")}, {"lambda", pp("x^4 - 5*x^2 + 2")},
        {"mulambda", pp("x^3 + x*y^2 - 5*x*y + 2*x")}};
    std::vector<std::pair<std::string, Poly>> coords{{"x", pp("x")}, {"y", pp("y")}};
    auto prof = peripheral_integrality_profile(F, coords, periph);
    CHECK(prof.all_integral);

    // toy: (UV - 1) with peripheral {U}: V is not integral
    auto Huv = ideal_of(Ring::lex({"U", "V"}), {"U*V - 1"});
    auto hp = [&](const char* s) { return parse_poly(Huv.ring, s); };
    auto prof2 = peripheral_integrality_profile(
        Huv, {{"V", hp("V")}}, {{"mu", hp("U")}});
    CHECK_FALSE(prof2.all_integral);
    CHECK(*prof2.first_witness == "V");

    // torus bundle X_eps: no closed essential surface detected
    auto B = fixtures::ptb_xeps_c();
    auto bp = [&](const char* s) { return parse_poly(B.ring, s); };
    std::vector<std::pair<std::string, Poly>> bper{
        {"mu", bp("t")}, {"lambda", bp("l")},
        {"mulambda", bp("1/4*l^2*t + l*t - 1/16*t*z^4 - t")}};
    std::vector<std::pair<std::string, Poly>> bco{
        {"z", bp("z")}, {"y", bp("y")}, {"t", bp("t")}, {"l", bp("l")}};
    auto prof3 = peripheral_integrality_profile(B, bco, bper);
    CHECK(prof3.all_integral);
}
