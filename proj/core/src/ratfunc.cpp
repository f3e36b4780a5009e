#include "tracering/ratfunc.hpp"

#include <sstream>
#include <stdexcept>

namespace tracering {

ZPoly ZPoly::constant(Int k) {
    ZPoly p;
    if (k != 0) p.c.push_back(std::move(k));
    return p;
}

ZPoly ZPoly::variable() {
    ZPoly p;
    p.c = {Int(0), Int(1)};
    return p;
}

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r;
    r.c.resize(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator-() const {
    ZPoly r(*this);
    for (auto& k : r.c) k = -k;
    return r;
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    ZPoly r;
    r.c.assign(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
}

Int ZPoly::content_signed() const {
    Int g = 0;
    for (const auto& k : c) g = gcd(g, k);
    if (g == 0) return 1;
    if (lead() < 0) g = -g;
    return g;
}

ZPoly ZPoly::primitive() const {
    Int g = content_signed();
    ZPoly r(*this);
    for (auto& k : r.c) k /= g;
    return r;
}

Rat ZPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + Rat(c[i]);
    return acc;
}

// primitive pseudo-remainder sequence
ZPoly zp_gcd(ZPoly a, ZPoly b) {
    a = a.is_zero() ? a : a.primitive();
    b = b.is_zero() ? b : b.primitive();
    while (!b.is_zero()) {
        // pseudo-remainder of a by b
        ZPoly r = a;
        const Int& lb = b.lead();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Int lr = r.lead();
            // r = lb * r - lr * x^shift * b
            ZPoly t;
            t.c.assign(r.c.size(), Int(0));
            for (size_t i = 0; i < r.c.size(); ++i) t.c[i] = r.c[i] * lb;
            for (size_t i = 0; i < b.c.size(); ++i) t.c[i + shift] -= lr * b.c[i];
            t.trim();
            r = std::move(t);
        }
        a = std::move(b);
        b = r.is_zero() ? r : r.primitive();
    }
    if (a.is_zero()) return a;
    a = a.primitive();
    if (a.lead() < 0)
        for (auto& k : a.c) k = -k;
    return a;
}

ZPoly zp_div_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return {};
    // long division over Q, then integrality of the quotient
    std::vector<Rat> rem;
    rem.reserve(a.c.size());
    for (const auto& k : a.c) rem.emplace_back(k);
    int db = b.degree();
    std::vector<Rat> q(a.c.size(), Rat(0));
    for (int d = static_cast<int>(rem.size()) - 1; d >= db; --d) {
        if (rem[d] == 0) continue;
        Rat f = rem[d] / Rat(b.lead());
        q[d - db] = f;
        for (int i = 0; i <= db; ++i) rem[d - db + i] -= f * Rat(b.c[i]);
    }
    for (int i = 0; i < db; ++i)
        if (rem[i] != 0) throw std::invalid_argument("inexact polynomial division");
    ZPoly out;
    out.c.reserve(q.size());
    for (auto& f : q) {
        if (!is_integer(f)) throw std::invalid_argument("inexact polynomial division (non-integer quotient)");
        out.c.push_back(num(f));
    }
    out.trim();
    return out;
}

std::string zp_to_string(const ZPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = p.c.size(); i-- > 0;) {
        if (p.c[i] == 0) continue;
        Int k = p.c[i];
        if (first) {
            if (k < 0) os << "-";
            first = false;
        } else {
            os << (k < 0 ? " - " : " + ");
        }
        Int a = abs(k);
        if (a != 1 || i == 0) os << a.get_str();
        if (i > 0) {
            if (a != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

RatFunc::RatFunc(Rat scale, ZPoly num, ZPoly den)
    : scale_(std::move(scale)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RatFunc RatFunc::variable() {
    return RatFunc(Rat(1), ZPoly::variable(), ZPoly::constant(1));
}

void RatFunc::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("zero denominator");
    if (scale_ == 0 || num_.is_zero()) {
        scale_ = 0;
        num_ = ZPoly::constant(1);
        den_ = ZPoly::constant(1);
        return;
    }
    Int cn = num_.content_signed(), cd = den_.content_signed();
    scale_ *= make_rat(cn, cd);
    num_ = num_.primitive();
    den_ = den_.primitive();
    ZPoly g = zp_gcd(num_, den_);
    if (g.degree() > 0 || g.lead() != 1) {
        num_ = zp_div_exact(num_, g);
        den_ = zp_div_exact(den_, g);
    }
}

bool RatFunc::is_polynomial() const {
    return is_zero() || (den_.degree() == 0 && den_.lead() == 1);
}

bool RatFunc::is_constant() const {
    return is_zero() || (is_polynomial() && num_.degree() == 0);
}

Rat RatFunc::constant_value() const {
    if (is_zero()) return Rat(0);
    if (!is_constant()) throw std::logic_error("rational function is not constant");
    return scale_ * Rat(num_.lead());
}

std::vector<Rat> RatFunc::poly_coeffs() const {
    if (!is_polynomial()) throw std::logic_error("rational function is not a polynomial");
    std::vector<Rat> out;
    if (is_zero()) return out;
    out.reserve(num_.c.size());
    for (const auto& k : num_.c) out.push_back(scale_ * Rat(k));
    return out;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    // scale*num/den + oscale*onum/oden
    Int pa = scale_.get_num(), qa = scale_.get_den();
    Int pb = o.scale_.get_num(), qb = o.scale_.get_den();
    ZPoly n = ZPoly::constant(pa * qb) * num_ * o.den_ + ZPoly::constant(pb * qa) * o.num_ * den_;
    return RatFunc(make_rat(1, qa * qb), std::move(n), den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator-() const {
    RatFunc r(*this);
    r.scale_ = -r.scale_;
    return r;
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
    if (is_zero() || o.is_zero()) return RatFunc();
    return RatFunc(scale_ * o.scale_, num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
    if (is_zero()) return RatFunc();
    return RatFunc(scale_ / o.scale_, num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
    return scale_ == o.scale_ && num_ == o.num_ && den_ == o.den_;
}

std::string ratfunc_to_string(const RatFunc& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    os << to_string(f.scale()) << "*(" << zp_to_string(f.num(), var) << ")";
    if (f.den().degree() > 0 || f.den().lead() != 1)
        os << "/(" << zp_to_string(f.den(), var) << ")";
    return os.str();
}

}  // namespace tracering
