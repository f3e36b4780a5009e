#include "tracering/poly_io.hpp"

#include <cctype>
#include <sstream>

#include "tracering/ratfunc.hpp"

namespace tracering {

namespace {

class PolyParser {
  public:
    PolyParser(RingPtr ring, const std::string& text) : ring_(std::move(ring)), s_(text) {}

    Poly parse() {
        Poly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-')) neg = true;
        else (void)eat('+');
        Poly acc = term();
        if (neg) acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                break;
            }
        }
        return acc;
    }

    // factors juxtaposed or joined by '*'
    Poly term() {
        Poly acc = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc *= factor();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(' || c == '_' ||
                       std::isdigit(static_cast<unsigned char>(c))) {
                acc *= factor();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly factor() {
        Poly base = atom();
        skip_ws();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                fail("expected integer exponent after '^'");
            long e = read_uint();
            if (neg) fail("negative exponents are not polynomial");
            Poly acc = Poly::constant(ring_, Rat(1));
            for (long i = 0; i < e; ++i) acc *= base;
            return acc;
        }
        return base;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of polynomial");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int n = read_int();
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                size_t save = pos_;
                ++pos_;
                skip_ws();
                if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                    Int d = read_int();
                    if (d == 0) fail("zero denominator");
                    return Poly::constant(ring_, make_rat(n, d));
                }
                pos_ = save;  // not a rational literal
            }
            return Poly::constant(ring_, Rat(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id = read_ident();
            auto v = ring_->find(id);
            if (!v) fail("undeclared variable '" + id + "'");
            return Poly::variable(ring_, *v);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    Int read_int() {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return Int(digits);
    }

    long read_uint() {
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    std::string read_ident() {
        std::string id;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            id += s_[pos_++];
        return id;
    }

    RingPtr ring_;
    const std::string& s_;
    size_t pos_ = 0;
};

void print_mono(std::ostream& os, const Ring& ring, const Monomial& m, bool lead_star) {
    bool first = !lead_star;
    for (uint32_t v = 0; v < ring.nvars(); ++v) {
        if (m[v] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << ring.name(v);
        if (m[v] >= 2) os << "^" << m[v];
    }
}

}  // namespace

Poly parse_poly(const RingPtr& ring, const std::string& text) {
    return theta_reduced(PolyParser(ring, text).parse());
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const Ring& ring = *p.ring();
    bool first = true;
    for (const auto& t : p.terms()) {
        Rat c = t.coef;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        bool has_vars = mono_degree(t.mono) > 0;
        if (c != 1 || !has_vars) {
            os << to_string(c);
            print_mono(os, ring, t.mono, /*lead_star=*/has_vars);
        } else {
            print_mono(os, ring, t.mono, /*lead_star=*/false);
        }
    }
    return os.str();
}

std::string to_string(const BasePoly<RatFunc>& p, const std::string& base_var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    const Ring& ring = *p.ring();
    bool first = true;
    for (const auto& t : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << ratfunc_to_string(t.coef, base_var) << ")";
        print_mono(os, ring, t.mono, /*lead_star=*/mono_degree(t.mono) > 0);
    }
    return os.str();
}

}  // namespace tracering
