#pragma once

#include <map>
#include <vector>

#include "tracering/ring.hpp"

namespace tracering {

// Coefficient-field hooks. Overloads exist for Rat (here) and RatFunc
// (ratfunc.hpp). A field K needs: +,-,*,/ operators, equality, and these.
inline bool coef_is_zero(const Rat& c) { return c == 0; }
inline Rat coef_from_rat(const Rat& c, const Rat&) { return c; }

template <class K>
struct PTerm {
    Monomial mono;
    K coef;
    bool operator==(const PTerm& o) const { return mono == o.mono && coef == o.coef; }
};

// Sparse multivariate polynomial with exact coefficients over the field K.
// Terms are kept sorted in descending active order with no zero
// coefficients; over Q(theta), theta-powers are reduced below the minimal
// polynomial degree on construction.
template <class K>
class BasePoly {
  public:
    using Term = PTerm<K>;

    BasePoly() = default;
    explicit BasePoly(RingPtr ring) : ring_(std::move(ring)) {}
    BasePoly(RingPtr ring, std::vector<Term> terms);  // canonicalizes

    static BasePoly zero(RingPtr ring) { return BasePoly(std::move(ring)); }
    static BasePoly constant(RingPtr ring, K c);
    static BasePoly variable(RingPtr ring, uint32_t v, uint32_t e = 1);
    static BasePoly monomial(RingPtr ring, Monomial m, K c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0);
    }
    size_t size() const { return terms_.size(); }

    const Term& leading() const { return terms_.front(); }
    const Monomial& lm() const { return terms_.front().mono; }
    const K& lc() const { return terms_.front().coef; }

    uint32_t degree_in(uint32_t v) const;
    bool involves(uint32_t v) const;

    BasePoly operator-() const;
    BasePoly operator+(const BasePoly& o) const;
    BasePoly operator-(const BasePoly& o) const;
    BasePoly operator*(const BasePoly& o) const;
    BasePoly& operator+=(const BasePoly& o) { return *this = *this + o; }
    BasePoly& operator-=(const BasePoly& o) { return *this = *this - o; }
    BasePoly& operator*=(const BasePoly& o) { return *this = *this * o; }
    bool operator==(const BasePoly& o) const;
    bool operator!=(const BasePoly& o) const { return !(*this == o); }

    BasePoly scaled(const K& c) const;             // c * this
    BasePoly mono_scaled(const Monomial& m, const K& c) const;
    BasePoly monic() const;                        // divide by leading coefficient

    // this - c * x^m * q, the Groebner reduction step, done in one merge pass
    void sub_mul(const K& c, const Monomial& m, const BasePoly& q);

    // Total substitution of the listed variables by constants; remaining
    // variables stay symbolic. theta-reduction applies as usual.
    BasePoly substituted(const std::vector<std::pair<uint32_t, K>>& point) const;

    // Substitute a polynomial for a variable (used by slope/base adjunction).
    BasePoly substituted_poly(uint32_t v, const BasePoly& value) const;

    // Re-interpret this polynomial in another ring whose variable set
    // contains this ring's variables by name (order may differ).
    BasePoly mapped_to(const RingPtr& target) const;

  private:
    void canonicalize(std::vector<Term>&& raw);

    RingPtr ring_;
    std::vector<Term> terms_;
};

using Poly = BasePoly<Rat>;

// The adjoined generator's minimal polynomial as an element of the ring.
Poly minimal_poly_as_poly(const RingPtr& ring);

// Rewrite theta-powers below the minimal polynomial degree (no-op for
// rings without an adjoined generator). Applied by the parser, by
// evaluation, and implicitly by any normal form whose basis contains the
// minimal polynomial.
Poly theta_reduced(Poly p);

// ---- Rat-specific operations (polycore contract) ----

// content * primitive == p; primitive has coprime integer coefficients and
// positive leading coefficient under the active order. p must be nonzero.
std::pair<Rat, Poly> content_and_primitive(const Poly& p);

// Exact evaluation; every non-theta variable must be bound. Result may be a
// constant or a reduced theta-polynomial.
Poly eval_poly(const Poly& p, const std::vector<std::pair<uint32_t, Rat>>& point);
// Fully bound variant; throws if the result is not a rational constant.
Rat eval_rat(const Poly& p, const std::vector<std::pair<uint32_t, Rat>>& point);

bool has_integer_coefficients(const Poly& p);

extern template class BasePoly<Rat>;

}  // namespace tracering
