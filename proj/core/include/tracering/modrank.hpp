#pragma once

#include <optional>
#include <variant>
#include <string>
#include <vector>

#include "tracering/integrality.hpp"

namespace tracering {

enum class CoefRing { C, Q, Z };

// A rank computation happens in a working presentation whose base is a
// ring variable: either the base polynomial already is one, or a fresh
// lowest variable s with generator (s - base) is adjoined.
struct ModuleProblem {
    IdealPresentation ideal;          // possibly extended
    uint32_t base_var = 0;            // in ideal.ring
    std::vector<uint32_t> coord_vars; // module coordinates (non-base, non-theta)
    Poly base;                        // original base polynomial (original ring)
};

ModuleProblem make_module_problem(const IdealPresentation& ideal, const Poly& base);

// One rewriting line of a certificate: product == sum coeff[j] * element[j],
// with coefficients polynomial in the base variable; re-checkable by
// ideal membership of (product - combination).
struct TranscriptLine {
    std::string label;         // e.g. "y * y^3"
    Poly product;              // in the working ring
    std::vector<Poly> coeffs;  // same length as the certified set, base-only polys
};

struct FreeBasisCert {
    std::vector<Poly> basis;        // monomial representatives, working ring
    std::string independence;      // "staircase" or "fraction-field-pivots"
    std::vector<TranscriptLine> generation;
    std::string text() const;      // canonical serialized form
};

struct GenSetCert {
    std::vector<Poly> generators;
    std::vector<TranscriptLine> transcripts;
    std::string text() const;
};

struct NonFreenessCert {
    std::vector<Poly> summand_gens;
    std::vector<Poly> syzygy;        // base-only polynomials
    std::vector<Poly> obstruction;   // the two ideal generators
    std::string parity_note;
    std::string text() const;
};

struct CertFailure {
    std::string stage;   // "independence", "generation", "span", "annihilation", ...
    std::string detail;
};

struct RankResult {
    bool finite = false;
    uint64_t value = 0;                    // exact rank when finite && exact
    bool exact = true;
    uint64_t lower = 0, upper = 0;         // meaningful when !exact
    std::optional<std::string> witness;    // non-integral coordinate when infinite
    std::optional<FreeBasisCert> free_basis;
    std::optional<GenSetCert> gen_set;
    std::optional<NonFreenessCert> nonfree;
    std::string note;
};

// Rk over the field base C[I_alpha] (and Q[I_alpha] on rational models):
// INFINITE with witness when a coordinate is not integral, else the generic
// fiber dimension with a certificate (claimed basis verified, else the
// staircase, else an auto generating set from the dependence degrees).
RankResult rank_C(const IdealPresentation& ideal, const Poly& base,
                  const std::vector<Poly>& claimed_basis = {});
RankResult rank_Q(const IdealPresentation& ideal, const Poly& base,
                  const std::vector<Poly>& claimed_basis = {});

// Z-module rank bounds: lower = rank over Q(base); upper from a verified
// integer generating set; exact when they meet or when a non-freeness
// certificate rules the lower bound out.
RankResult rank_Z_bounds(const IdealPresentation& ideal, const Poly& base,
                         const std::vector<Poly>& claimed_generators = {},
                         const std::optional<NonFreenessCert>& nonfree = std::nullopt);

// Certify that `basis` freely generates the quotient as a module over
// ring[base]: independence via the staircase route (all Groebner leading
// monomials base-free, basis = increasing standard monomials) or via
// fraction-field pivots; generation via product transcripts.
std::variant<FreeBasisCert, CertFailure> verify_free_basis(const IdealPresentation& ideal,
                                                           const Poly& base,
                                                           const std::vector<Poly>& basis,
                                                           CoefRing ring);

std::variant<GenSetCert, CertFailure> verify_gen_set(const IdealPresentation& ideal,
                                                     const Poly& base,
                                                     const std::vector<Poly>& generators,
                                                     CoefRing ring);

// Verify the direct-summand non-freeness data: (a) the syzygy annihilates
// the summand generators, (b) it generates the full syzygy module over
// Q[base], (c) the mod-2 lifting obstruction.
std::variant<NonFreenessCert, CertFailure> verify_nonfree(const IdealPresentation& ideal,
                                                          const Poly& base,
                                                          const std::vector<Poly>& summand_gens,
                                                          const std::vector<Poly>& syzygy,
                                                          const std::vector<Poly>& obstruction);

}  // namespace tracering
