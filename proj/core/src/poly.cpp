#include "tracering/poly.hpp"

#include <algorithm>

#include "tracering/ratfunc.hpp"

namespace tracering {

template <class K>
BasePoly<K>::BasePoly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
    canonicalize(std::move(terms));
}

template <class K>
void BasePoly<K>::canonicalize(std::vector<Term>&& raw) {
    for (const auto& t : raw)
        if (t.mono.size() != ring_->nvars())
            throw std::invalid_argument("monomial length does not match the variable context");
    std::sort(raw.begin(), raw.end(), [&](const Term& a, const Term& b) {
        return ring_->cmp(a.mono, b.mono) > 0;
    });
    terms_.clear();
    terms_.reserve(raw.size());
    for (auto& t : raw) {
        if (!terms_.empty() && terms_.back().mono == t.mono) {
            terms_.back().coef = terms_.back().coef + t.coef;
            if (coef_is_zero(terms_.back().coef)) terms_.pop_back();
        } else if (!coef_is_zero(t.coef)) {
            terms_.push_back(std::move(t));
        }
    }
}

template <class K>
BasePoly<K> BasePoly<K>::constant(RingPtr ring, K c) {
    BasePoly p(ring);
    if (!coef_is_zero(c)) p.terms_.push_back({ring->one(), std::move(c)});
    return p;
}

template <class K>
BasePoly<K> BasePoly<K>::variable(RingPtr ring, uint32_t v, uint32_t e) {
    BasePoly p(ring);
    std::vector<Term> ts;
    K one = coef_from_rat(Rat(1), K{});
    ts.push_back({ring->var_mono(v, e), std::move(one)});
    return BasePoly(std::move(ring), std::move(ts));
}

template <class K>
BasePoly<K> BasePoly<K>::monomial(RingPtr ring, Monomial m, K c) {
    std::vector<Term> ts;
    ts.push_back({std::move(m), std::move(c)});
    return BasePoly(std::move(ring), std::move(ts));
}

template <class K>
uint32_t BasePoly<K>::degree_in(uint32_t v) const {
    uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
}

template <class K>
bool BasePoly<K>::involves(uint32_t v) const {
    for (const auto& t : terms_)
        if (t.mono[v]) return true;
    return false;
}

template <class K>
BasePoly<K> BasePoly<K>::operator-() const {
    BasePoly r(*this);
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
}

template <class K>
BasePoly<K> BasePoly<K>::operator+(const BasePoly& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("polynomial ring mismatch");
    BasePoly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = ring_->cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            K s = terms_[i].coef + o.terms_[j].coef;
            if (!coef_is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
    for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
    return r;
}

template <class K>
BasePoly<K> BasePoly<K>::operator-(const BasePoly& o) const { return *this + (-o); }

template <class K>
BasePoly<K> BasePoly<K>::operator*(const BasePoly& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("polynomial ring mismatch");
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            raw.push_back({mono_mul(a.mono, b.mono), a.coef * b.coef});
    return BasePoly(ring_, std::move(raw));
}

template <class K>
bool BasePoly<K>::operator==(const BasePoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || !(terms_[i].coef == o.terms_[i].coef))
            return false;
    return true;
}

template <class K>
BasePoly<K> BasePoly<K>::scaled(const K& c) const {
    if (coef_is_zero(c)) return BasePoly(ring_);
    BasePoly r(*this);
    for (auto& t : r.terms_) t.coef = t.coef * c;
    return r;
}

template <class K>
BasePoly<K> BasePoly<K>::mono_scaled(const Monomial& m, const K& c) const {
    if (coef_is_zero(c)) return BasePoly(ring_);
    BasePoly r(ring_);
    r.terms_.reserve(terms_.size());
    // multiplying by a monomial preserves descending order
    for (const auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coef * c});
    return r;
}

template <class K>
BasePoly<K> BasePoly<K>::monic() const {
    if (is_zero()) return *this;
    K inv = coef_from_rat(Rat(1), lc()) / lc();
    return scaled(inv);
}

template <class K>
void BasePoly<K>::sub_mul(const K& c, const Monomial& m, const BasePoly& q) {
    std::vector<Term> merged;
    merged.reserve(terms_.size() + q.terms_.size());
    size_t i = 0, j = 0;
    auto shifted = [&](size_t jj) { return mono_mul(q.terms_[jj].mono, m); };
    while (i < terms_.size() && j < q.terms_.size()) {
        Monomial mj = shifted(j);
        int cc = ring_->cmp(terms_[i].mono, mj);
        if (cc > 0) {
            merged.push_back(std::move(terms_[i++]));
        } else if (cc < 0) {
            merged.push_back({std::move(mj), -(c * q.terms_[j].coef)});
            ++j;
        } else {
            K s = terms_[i].coef - c * q.terms_[j].coef;
            if (!coef_is_zero(s)) merged.push_back({std::move(mj), std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < terms_.size(); ++i) merged.push_back(std::move(terms_[i]));
    for (; j < q.terms_.size(); ++j) merged.push_back({shifted(j), -(c * q.terms_[j].coef)});
    terms_ = std::move(merged);
}

template <class K>
BasePoly<K> BasePoly<K>::substituted(const std::vector<std::pair<uint32_t, K>>& point) const {
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
        K c = t.coef;
        Monomial m = t.mono;
        for (const auto& [v, val] : point) {
            for (uint32_t e = 0; e < t.mono[v]; ++e) c = c * val;
            m[v] = 0;
        }
        raw.push_back({std::move(m), std::move(c)});
    }
    return BasePoly(ring_, std::move(raw));
}

template <class K>
BasePoly<K> BasePoly<K>::substituted_poly(uint32_t v, const BasePoly& value) const {
    BasePoly acc(ring_);
    // Horner in v: group terms by v-exponent
    uint32_t dv = degree_in(v);
    std::vector<BasePoly> buckets(dv + 1, BasePoly(ring_));
    for (const auto& t : terms_) {
        Monomial m = t.mono;
        uint32_t e = m[v];
        m[v] = 0;
        buckets[e] += monomial(ring_, std::move(m), t.coef);
    }
    for (uint32_t e = dv + 1; e-- > 0;) {
        acc = acc * value + buckets[e];
    }
    return acc;
}

template <class K>
BasePoly<K> BasePoly<K>::mapped_to(const RingPtr& target) const {
    std::vector<uint32_t> map(ring_->nvars());
    for (uint32_t v = 0; v < ring_->nvars(); ++v) map[v] = target->var(ring_->name(v));
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars(), 0);
        for (uint32_t v = 0; v < ring_->nvars(); ++v) m[map[v]] = t.mono[v];
        raw.push_back({std::move(m), t.coef});
    }
    return BasePoly(target, std::move(raw));
}

// ---- Rat-specific ----

Poly minimal_poly_as_poly(const RingPtr& ring) {
    const auto& nf = ring->number_field();
    if (!nf) throw std::logic_error("ring has no adjoined generator");
    std::vector<PTerm<Rat>> ts;
    for (uint32_t j = 0; j < nf->min_poly.size(); ++j) {
        if (nf->min_poly[j] == 0) continue;
        ts.push_back({ring->var_mono(nf->var, j), nf->min_poly[j]});
    }
    return Poly(ring, std::move(ts));
}

Poly theta_reduced(Poly p) {
    const auto& nf = p.ring()->number_field();
    if (!nf) return p;
    const uint32_t th = nf->var;
    const uint32_t d = nf->degree();
    Poly m = minimal_poly_as_poly(p.ring());
    while (true) {
        const PTerm<Rat>* worst = nullptr;
        for (const auto& t : p.terms())
            if (t.mono[th] >= d && (!worst || t.mono[th] > worst->mono[th])) worst = &t;
        if (!worst) break;
        Monomial shift = worst->mono;
        shift[th] -= d;
        p.sub_mul(worst->coef, shift, m);
    }
    return p;
}

std::pair<Rat, Poly> content_and_primitive(const Poly& p) {
    if (p.is_zero()) throw std::invalid_argument("content of the zero polynomial");
    Int g = 0, l = 1;
    for (const auto& t : p.terms()) {
        g = gcd(g, num(t.coef));
        l = lcm(l, den(t.coef));
    }
    Rat content = make_rat(g, l);
    if (p.lc() < 0) content = -content;
    return {content, p.scaled(Rat(1) / content)};
}

Poly eval_poly(const Poly& p, const std::vector<std::pair<uint32_t, Rat>>& point) {
    const auto& ring = p.ring();
    for (uint32_t v = 0; v < ring->nvars(); ++v) {
        bool bound = false;
        for (const auto& [pv, val] : point)
            if (pv == v) bound = true;
        bool is_theta = ring->number_field() && ring->number_field()->var == v;
        if (!bound && !is_theta && p.involves(v))
            throw std::invalid_argument("unbound variable in evaluation: " + ring->name(v));
    }
    return theta_reduced(p.substituted(point));
}

Rat eval_rat(const Poly& p, const std::vector<std::pair<uint32_t, Rat>>& point) {
    Poly r = eval_poly(p, point);
    if (r.is_zero()) return Rat(0);
    if (!r.is_constant()) throw std::invalid_argument("evaluation did not produce a constant");
    return r.lc();
}

bool has_integer_coefficients(const Poly& p) {
    for (const auto& t : p.terms())
        if (!is_integer(t.coef)) return false;
    return true;
}

std::string to_string(const Rat& r) { return r.get_str(); }

template class BasePoly<Rat>;
template class BasePoly<RatFunc>;

}  // namespace tracering
