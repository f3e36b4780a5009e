#pragma once

#include <string>
#include <vector>

#include "tracering/rational.hpp"

namespace tracering {

// Dense univariate polynomial over Z, degree-ascending coefficients.
struct ZPoly {
    std::vector<Int> c;  // c[i] is the coefficient of x^i; no trailing zeros

    static ZPoly zero() { return {}; }
    static ZPoly constant(Int k);
    static ZPoly variable();

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lead() const { return c.back(); }

    void trim();
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator-() const;
    bool operator==(const ZPoly& o) const { return c == o.c; }

    Int content_signed() const;      // gcd of coefficients, sign of leading
    ZPoly primitive() const;         // divide by signed content
    Rat eval(const Rat& x) const;
};

ZPoly zp_gcd(ZPoly a, ZPoly b);      // primitive gcd, positive leading coefficient
// exact division; throws if remainder nonzero
ZPoly zp_div_exact(const ZPoly& a, const ZPoly& b);

std::string zp_to_string(const ZPoly& p, const std::string& var);

// Field of univariate rational functions Q(x): num/den with den primitive,
// positive leading coefficient, gcd(num, den) = 1 (content of num carries
// the rational scale in num itself via a Rat factor).
class RatFunc {
  public:
    RatFunc() : scale_(0), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}
    RatFunc(const Rat& r)                       // constants embed
        : scale_(r), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}
    RatFunc(Rat scale, ZPoly num, ZPoly den);   // normalizes

    static RatFunc variable();
    static RatFunc from_zpoly(ZPoly p) { return RatFunc(Rat(1), std::move(p), ZPoly::constant(1)); }

    bool is_zero() const { return scale_ == 0; }
    const Rat& scale() const { return scale_; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    bool is_polynomial() const;
    bool is_constant() const;
    Rat constant_value() const;
    // numerator as Q-coefficient list with the scale folded in (requires is_polynomial)
    std::vector<Rat> poly_coeffs() const;

    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;
    RatFunc operator-() const;
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

  private:
    void normalize();
    Rat scale_;   // rational multiplier; zero iff the function is zero
    ZPoly num_;   // primitive, positive lead (when nonzero)
    ZPoly den_;   // primitive, positive lead, coprime to num
};

inline bool coef_is_zero(const RatFunc& c) { return c.is_zero(); }
inline RatFunc coef_from_rat(const Rat& c, const RatFunc&) { return RatFunc(c); }

std::string ratfunc_to_string(const RatFunc& f, const std::string& var);

}  // namespace tracering
