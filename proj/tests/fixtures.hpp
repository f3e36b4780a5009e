#pragma once

// Shared test fixtures: the bundled example ideals, reproduced here
// directly so the suites do not depend on the corpus module.

#include <string>
#include <vector>

#include "tracering/groebner.hpp"
#include "tracering/poly_io.hpp"

namespace fixtures {

using namespace tracering;

inline IdealPresentation ideal_of(const RingPtr& r, const std::vector<std::string>& gens) {
    IdealPresentation I{r, {}};
    for (const auto& g : gens) I.gens.push_back(parse_poly(r, g));
    return I;
}

// trefoil X0: vars (x, y), order x < y, ideal (y - 1)
inline IdealPresentation trefoil_x0() {
    return ideal_of(Ring::lex({"x", "y"}), {"y - 1"});
}

// figure-eight X0
inline IdealPresentation fig8_x0() {
    return ideal_of(Ring::lex({"x", "y"}), {"y^2 + (-1 - x^2)*y + (-1 + 2*x^2)"});
}

// figure-eight Y0 in (l, xi, y), order l < y < xi
inline IdealPresentation fig8_y0() {
    return ideal_of(Ring::lex({"l", "y", "xi"}),
                    {"(-1 - 4*l) + (-11 + 4*l)*y + (16 - l)*y^2 - 7*y^3 + y^4",
                     "2 - l - 5*xi + xi^2",
                     "1 - 2*xi + y + xi*y - y^2",
                     "2*l + xi + (5 - l)*y - 5*y^2 + y^3"});
}

// M003 X0 in (m, z, y, x), order m < z < y < x
inline IdealPresentation m003_x0() {
    return ideal_of(Ring::lex({"m", "z", "y", "x"}),
                    {"z^4 - m*z^2 - z^2 + 1", "-z^2 + m + y", "-z^3 + m*z + z + x"});
}

// M003 Y0 in (m, zeta)
inline IdealPresentation m003_y0() {
    return ideal_of(Ring::lex({"m", "zeta"}), {"zeta^2 + (-m - 1)*zeta + 1"});
}

// 8_20 X0 in (y, x, z), pure lex y < x < z
inline IdealPresentation k820_x0() {
    return ideal_of(
        Ring::lex({"y", "x", "z"}),
        {"1 + 5*y + 7*y^2 + 2*y^3 - 2*y^4 - y^5 - 2*x^2 - 6*y*x^2 - 3*y^2*x^2 + y^4*x^2 + x^4 + y*x^4",
         "-x - 3*y*x - y^2*x - y^3*x + x^3 + y*x^3 + y^2*z + y^3*z",
         "-1 - 4*y - 3*y^2 + y^3 + y^4 + x^2 + 2*y*x^2 - y^3*x^2 + y^2*x*z",
         "x + 3*y*x + 2*y^2*x - x^3 - y*x^3 - z - 2*y*z - y^2*z + x^2*z",
         "2 + 6*y - 2*y^3 - 3*x^2 - y*x^2 + 2*y^2*x^2 + x*z - 3*y*x*z + z^2"});
}

inline const char* k820_z_dependence() {
    return "z^5 - 2*x*z^4 + (-2 + 3*x^2)*z^3 + (12*x - 9*x^3 + x^5)*z^2 + "
           "(-18*x^2 + 10*x^4 - x^6)*z + (6*x^3 - 2*x^5)";
}

// punctured-torus bundle X_eps (eps = 0) over Q(i): vars (i, l, z, y, t),
// order i < l < z < y < t
inline IdealPresentation ptb_xeps_c() {
    NumberField nf;
    nf.var = 0;
    nf.min_poly = {Rat(1), Rat(0), Rat(1)};
    MonomialOrder ord;
    ord.priority = {0, 1, 2, 3, 4};
    auto r = Ring::make({"i", "l", "z", "y", "t"}, ord, nf);
    return ideal_of(r, {"16 + (-4 - 2*l)*z^2 + z^4",
                        "(-8 - 2*l) + z^2 + 2*y^2",
                        "2*t + i*z^2"});
}

// full 8-variable X_eps ideal over Q(i), with the coordinate relations
inline IdealPresentation ptb_xeps_c_full() {
    NumberField nf;
    nf.var = 0;
    nf.min_poly = {Rat(1), Rat(0), Rat(1)};
    MonomialOrder ord;
    ord.priority = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    auto r = Ring::make({"i", "l", "z", "y", "t", "u", "v", "w", "x"}, ord, nf);
    return ideal_of(r, {"16 + (-4 - 2*l)*z^2 + z^4",
                        "(-8 - 2*l) + z^2 + 2*y^2",
                        "2*t + i*z^2",
                        "8*u + 2*t*y*z - t*y^3*z",
                        "4*v - 6*t*y + t*y^3",
                        "4*w + 2*t*z - t*y^2*z",
                        "2*x - y*z"});
}

// rational contraction of the full 8-variable ideal (X0 union X1)
inline IdealPresentation ptb_xeps_q_full() {
    auto r = Ring::lex({"l", "z", "y", "t", "u", "v", "w", "x"});
    return ideal_of(r, {"16*u - 2*l*t*y*z + t*y*z^3 - 4*t*y*z",
                        "8*v + 2*l*t*y - t*y*z^2 - 4*t*y",
                        "8*w - 2*l*t*z + t*z^3 - 4*t*z",
                        "2*x - y*z",
                        "l*z^2 + 2*t^2 + 2*z^2 - 8",
                        "-2*l + 2*y^2 + z^2 - 8",
                        "-2*l*z^2 + z^4 - 4*z^2 + 16"});
}

// 4-variable rational contraction (g1, g2, h)
inline IdealPresentation ptb_xeps_q() {
    auto r = Ring::lex({"l", "z", "y", "t"});
    return ideal_of(r, {"16 + (-4 - 2*l)*z^2 + z^4",
                        "(-8 - 2*l) + z^2 + 2*y^2",
                        "-8 + (2 + l)*z^2 + 2*t^2"});
}

}  // namespace fixtures
