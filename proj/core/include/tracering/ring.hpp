#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracering/rational.hpp"

namespace tracering {

// Exponent vector over a fixed variable context. Trailing zeros are
// meaningful only up to the context's variable count; vectors always have
// full length so comparisons are straight loops.
using Monomial = std::vector<uint32_t>;

enum class OrderKind { Lex, GrLex };

// priority lists variables from lowest to highest, as indices into the
// owning context's name table.
struct MonomialOrder {
    OrderKind kind = OrderKind::Lex;
    std::vector<uint32_t> priority;

    // variables scanned highest-first when comparing
    std::vector<uint32_t> highest_first() const {
        return {priority.rbegin(), priority.rend()};
    }
};

// Simple algebraic extension Q(theta): theta is an ordinary variable of the
// context; its monic minimal polynomial is adjoined to every ideal and
// polynomial arithmetic reduces theta-powers below its degree.
struct NumberField {
    uint32_t var = 0;                 // index of theta in the context
    std::vector<Rat> min_poly;        // coefficients, degree ascending, monic
    uint32_t degree() const { return static_cast<uint32_t>(min_poly.size() - 1); }
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Variable context + active monomial order (+ optional adjoined field
// generator). Polynomials hold a RingPtr and require identical rings for
// mixed arithmetic.
class Ring : public std::enable_shared_from_this<Ring> {
  public:
    static RingPtr make(std::vector<std::string> vars, MonomialOrder order,
                        std::optional<NumberField> nf = std::nullopt);

    // Pure-lex order from a list of names, lowest first.
    static RingPtr lex(std::vector<std::string> vars_lowest_first);

    size_t nvars() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(uint32_t v) const { return names_[v]; }
    const MonomialOrder& order() const { return order_; }
    const std::optional<NumberField>& number_field() const { return nf_; }

    std::optional<uint32_t> find(const std::string& name) const;
    uint32_t var(const std::string& name) const;

    // -1, 0, +1 for a < b, a == b, a > b under the active order
    int cmp(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

    Monomial one() const { return Monomial(nvars(), 0); }
    Monomial var_mono(uint32_t v, uint32_t e = 1) const;

    // A ring with the same variables but a different order.
    RingPtr with_order(MonomialOrder order) const;
    // A ring extended by fresh variables (appended; caller supplies the new order).
    RingPtr extended(const std::vector<std::string>& extra, MonomialOrder order) const;
    // Extension with the new variables below every existing one (listed
    // lowest first); relative priorities are preserved.
    RingPtr extended_below(const std::vector<std::string>& extra) const;
    // A name not colliding with any declared variable.
    std::string fresh_name(std::string want) const;

  private:
    Ring(std::vector<std::string> names, MonomialOrder order, std::optional<NumberField> nf);

    std::vector<std::string> names_;
    MonomialOrder order_;
    std::vector<uint32_t> scan_;  // variable indices, highest priority first
    std::optional<NumberField> nf_;
};

inline bool mono_divides(const Monomial& d, const Monomial& m) {
    for (size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i]) return false;
    return true;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

// requires d | m
inline Monomial mono_div(const Monomial& m, const Monomial& d) {
    Monomial r(m);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= d[i];
    return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
    return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return false;
    return true;
}

inline uint32_t mono_degree(const Monomial& m) {
    uint32_t d = 0;
    for (uint32_t e : m) d += e;
    return d;
}

}  // namespace tracering
