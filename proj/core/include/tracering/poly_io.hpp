#pragma once

#include <string>

#include "tracering/poly.hpp"
#include "tracering/ratfunc.hpp"

namespace tracering {

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(std::string msg, size_t at) : std::runtime_error(std::move(msg)), pos(at) {}
};

// Grammar: +,-,* (optional between factors), ^ for non-negative integer
// powers, integer or a/b coefficients, parenthesized subexpressions,
// variables are identifiers declared in the ring.
Poly parse_poly(const RingPtr& ring, const std::string& text);

// Canonical form: terms in descending active order, coefficients as
// integers or a/b, magnitude-1 coefficients elided, variables within a
// term in declaration order, '*' separators, '^' for powers >= 2.
std::string to_string(const Poly& p);

std::string to_string(const BasePoly<RatFunc>& p, const std::string& base_var);

}  // namespace tracering
