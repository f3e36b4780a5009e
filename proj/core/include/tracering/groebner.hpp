#pragma once

#include <cstdint>
#include <vector>

#include "tracering/poly.hpp"
#include "tracering/ratfunc.hpp"

namespace tracering {

// A character-variety model: named variables, monomial order, generators.
struct IdealPresentation {
    RingPtr ring;
    std::vector<Poly> gens;
};

template <class K>
struct GroebnerBasis {
    RingPtr ring;
    std::vector<BasePoly<K>> elems;  // monic, pairwise reduced, LM-ascending
};

using GroebnerQ = GroebnerBasis<Rat>;
using GroebnerF = GroebnerBasis<RatFunc>;

// Unique reduced Groebner basis for the presentation's order. If the ring
// carries an adjoined number field, its minimal polynomial joins the
// generators. S-pair selection is the normal strategy (minimal lcm) with
// the coprimality and chain criteria.
template <class K>
GroebnerBasis<K> buchberger_impl(RingPtr ring, std::vector<BasePoly<K>> gens);

GroebnerQ buchberger(const IdealPresentation& ideal);

// Remainder with no term divisible by any basis leading monomial;
// p - normal_form(p, gb) lies in the ideal. Exact (no rescaling).
template <class K>
BasePoly<K> normal_form(const BasePoly<K>& p, const GroebnerBasis<K>& gb);

template <class K>
bool ideal_member(const BasePoly<K>& p, const GroebnerBasis<K>& gb);

// Post-hoc Buchberger criterion: every S-polynomial reduces to zero and no
// element's term is divisible by another element's leading monomial.
template <class K>
bool is_reduced_groebner_basis(const GroebnerBasis<K>& gb);

// Contraction onto the kept variables via a lex block order (eliminated
// variables highest). Result lives in a ring on the kept variables with
// their relative order preserved.
IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<uint32_t>& keep);

// Quotient by the ideal over the fraction field Q(base): base-variable
// exponents move into RatFunc coefficients and a Groebner basis is computed
// in the remaining variables.
struct FiberQuotient {
    RingPtr fiber_ring;              // original variables minus the base
    uint32_t base = 0;               // index in the original ring
    GroebnerF gb;
    bool finite = false;
    std::vector<Monomial> std_monos;             // all standard monomials, ascending
    std::vector<Monomial> std_monos_theta_free;  // basis over Q(base)(theta)

    // dimension over the fraction field (theta-aware); only when finite
    uint64_t dim() const { return std_monos_theta_free.size(); }

    BasePoly<RatFunc> to_fiber(const Poly& p) const;
    // normal form followed by coordinates with respect to std_monos
    std::vector<RatFunc> coords(const Poly& p) const;
};

FiberQuotient fiber_quotient(const IdealPresentation& ideal, uint32_t base);

// Count of standard monomials over Q(base); INFINITE reported via finite=false.
struct FiberDimResult {
    bool finite;
    uint64_t dim;  // meaningful only when finite
};
FiberDimResult generic_fiber_dim(const IdealPresentation& ideal, uint32_t base);

extern template GroebnerBasis<Rat> buchberger_impl<Rat>(RingPtr, std::vector<BasePoly<Rat>>);
extern template GroebnerBasis<RatFunc> buchberger_impl<RatFunc>(RingPtr, std::vector<BasePoly<RatFunc>>);
extern template BasePoly<Rat> normal_form<Rat>(const BasePoly<Rat>&, const GroebnerBasis<Rat>&);
extern template BasePoly<RatFunc> normal_form<RatFunc>(const BasePoly<RatFunc>&, const GroebnerBasis<RatFunc>&);
extern template bool ideal_member<Rat>(const BasePoly<Rat>&, const GroebnerBasis<Rat>&);
extern template bool ideal_member<RatFunc>(const BasePoly<RatFunc>&, const GroebnerBasis<RatFunc>&);
extern template bool is_reduced_groebner_basis<Rat>(const GroebnerBasis<Rat>&);
extern template bool is_reduced_groebner_basis<RatFunc>(const GroebnerBasis<RatFunc>&);

}  // namespace tracering
