#include "tracering/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tracering {

namespace {

// Content normalization between reduction steps keeps coefficients small
// while building the basis; harmless for membership since only the ideal
// matters there.
void gb_renormalize(BasePoly<Rat>& p) {
    if (p.is_zero()) return;
    Int g = 0, l = 1;
    for (const auto& t : p.terms()) {
        g = gcd(g, num(t.coef));
        l = lcm(l, den(t.coef));
    }
    Rat content = make_rat(g, l);
    if (p.lc() < 0) content = -content;
    p = p.scaled(Rat(1) / content);
}

void gb_renormalize(BasePoly<RatFunc>& p) {
    if (p.is_zero()) return;
    p = p.monic();
}

// Full normal form: every term of the remainder is irreducible. Exact (no
// rescaling), so p - result stays in the ideal.
template <class K>
void top_reduce_full(BasePoly<K>& w, BasePoly<K>& rem, const std::vector<BasePoly<K>>& basis) {
    std::vector<PTerm<K>> tail;
    while (!w.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (mono_divides(g.lm(), w.lm())) {
                K c = w.lc() / g.lc();
                w.sub_mul(c, mono_div(w.lm(), g.lm()), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            tail.push_back(w.leading());
            w = BasePoly<K>(w.ring(), std::vector<PTerm<K>>(w.terms().begin() + 1, w.terms().end()));
        }
    }
    rem = BasePoly<K>(w.ring(), std::move(tail));
}

// Head reduction with content control; the result is zero or has an
// irreducible leading monomial. Only the generated ideal is preserved
// (values may be rescaled), which is all the basis construction needs.
template <class K>
void head_reduce(BasePoly<K>& w, const std::vector<BasePoly<K>>& basis) {
    while (!w.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (mono_divides(g.lm(), w.lm())) {
                K c = w.lc() / g.lc();
                w.sub_mul(c, mono_div(w.lm(), g.lm()), g);
                if (!w.is_zero()) gb_renormalize(w);
                reduced = true;
                break;
            }
        }
        if (!reduced) return;
    }
}

template <class K>
BasePoly<K> spoly(const BasePoly<K>& f, const BasePoly<K>& g) {
    Monomial L = mono_lcm(f.lm(), g.lm());
    BasePoly<K> a = f.mono_scaled(mono_div(L, f.lm()), coef_from_rat(Rat(1), f.lc()) / f.lc());
    BasePoly<K> b = g.mono_scaled(mono_div(L, g.lm()), coef_from_rat(Rat(1), g.lc()) / g.lc());
    return a - b;
}

}  // namespace

template <class K>
BasePoly<K> normal_form(const BasePoly<K>& p, const GroebnerBasis<K>& gb) {
    if (p.ring() != gb.ring) throw std::invalid_argument("normal_form: ring mismatch");
    BasePoly<K> w = p, rem(p.ring());
    top_reduce_full(w, rem, gb.elems);
    return rem;
}

template <class K>
bool ideal_member(const BasePoly<K>& p, const GroebnerBasis<K>& gb) {
    return normal_form(p, gb).is_zero();
}

template <class K>
GroebnerBasis<K> buchberger_impl(RingPtr ring, std::vector<BasePoly<K>> gens) {
    std::vector<BasePoly<K>> basis;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        gb_renormalize(g);
        basis.push_back(std::move(g));
    }

    struct PairKey {
        Monomial lcm;
        uint32_t i, j;
    };
    auto ringp = ring.get();
    auto pair_less = [ringp](const PairKey& a, const PairKey& b) {
        int c = ringp->cmp(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<PairKey, decltype(pair_less)> pending(pair_less);
    std::set<std::pair<uint32_t, uint32_t>> treated;

    auto push_pairs_for = [&](uint32_t k) {
        for (uint32_t i = 0; i < k; ++i)
            pending.insert({mono_lcm(basis[i].lm(), basis[k].lm()), i, k});
    };
    for (uint32_t k = 1; k < basis.size(); ++k) push_pairs_for(k);

    while (!pending.empty()) {
        PairKey pk = *pending.begin();
        pending.erase(pending.begin());
        treated.insert({pk.i, pk.j});
        const auto& f = basis[pk.i];
        const auto& g = basis[pk.j];
        // coprimality criterion
        if (mono_coprime(f.lm(), g.lm())) continue;
        // chain criterion: some h with lm(h) | lcm and both sub-pairs treated
        bool skip = false;
        for (uint32_t k = 0; k < basis.size() && !skip; ++k) {
            if (k == pk.i || k == pk.j) continue;
            if (!mono_divides(basis[k].lm(), pk.lcm)) continue;
            auto key1 = std::minmax(pk.i, k);
            auto key2 = std::minmax(pk.j, k);
            if (treated.count({key1.first, key1.second}) && treated.count({key2.first, key2.second}))
                skip = true;
        }
        if (skip) continue;

        BasePoly<K> s = spoly(f, g);
        head_reduce(s, basis);
        if (s.is_zero()) continue;
        gb_renormalize(s);
        basis.push_back(std::move(s));
        push_pairs_for(static_cast<uint32_t>(basis.size()) - 1);
    }

    // minimalize: drop elements whose LM is divisible by another's
    std::vector<BasePoly<K>> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            if (mono_divides(basis[j].lm(), basis[i].lm())) {
                if (basis[j].lm() == basis[i].lm() && j > i) continue;  // keep one of equals
                redundant = true;
            }
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // inter-reduce to the unique reduced basis
    GroebnerBasis<K> out;
    out.ring = ring;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<BasePoly<K>> others;
            others.reserve(minimal.size() - 1);
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            BasePoly<K> w = minimal[i], rem(ring);
            top_reduce_full(w, rem, others);
            if (rem.is_zero()) {
                minimal.erase(minimal.begin() + i);
                changed = true;
                break;
            }
            if (!(rem == minimal[i])) {
                gb_renormalize(rem);
                minimal[i] = std::move(rem);
                changed = true;
            }
        }
    }
    for (auto& e : minimal) e = e.monic();
    std::sort(minimal.begin(), minimal.end(), [&](const auto& a, const auto& b) {
        return ring->cmp(a.lm(), b.lm()) < 0;
    });
    out.elems = std::move(minimal);
    return out;
}

GroebnerQ buchberger(const IdealPresentation& ideal) {
    std::vector<Poly> gens = ideal.gens;
    if (ideal.ring->number_field()) gens.push_back(minimal_poly_as_poly(ideal.ring));
    return buchberger_impl<Rat>(ideal.ring, std::move(gens));
}

template <class K>
bool is_reduced_groebner_basis(const GroebnerBasis<K>& gb) {
    const auto& es = gb.elems;
    for (size_t i = 0; i < es.size(); ++i) {
        if (es[i].is_zero()) return false;
        if (!(es[i].lc() == coef_from_rat(Rat(1), es[i].lc()))) return false;
        for (size_t j = 0; j < es.size(); ++j) {
            if (i == j) continue;
            for (const auto& t : es[i].terms())
                if (mono_divides(es[j].lm(), t.mono)) return false;
        }
    }
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            BasePoly<K> s = spoly(es[i], es[j]);
            if (!normal_form(s, gb).is_zero()) return false;
        }
    return true;
}

IdealPresentation eliminate(const IdealPresentation& ideal, const std::vector<uint32_t>& keep) {
    const RingPtr& ring = ideal.ring;
    std::vector<bool> kept(ring->nvars(), false);
    for (uint32_t v : keep) kept.at(v) = true;

    // block order: eliminated variables highest, relative priorities preserved
    MonomialOrder block;
    block.kind = OrderKind::Lex;
    for (uint32_t v : ring->order().priority)
        if (kept[v]) block.priority.push_back(v);
    size_t nkept = block.priority.size();
    for (uint32_t v : ring->order().priority)
        if (!kept[v]) block.priority.push_back(v);
    if (nkept == ring->nvars()) {
        GroebnerQ gb = buchberger(ideal);
        return {ring, gb.elems};
    }

    RingPtr bring = ring->with_order(block);
    IdealPresentation bi{bring, {}};
    for (const auto& g : ideal.gens) bi.gens.push_back(g.mapped_to(bring));
    GroebnerQ gb = buchberger(bi);

    // kept-variable ring (declaration order preserved), induced order
    std::vector<std::string> knames;
    std::vector<uint32_t> kvars;
    for (uint32_t v = 0; v < ring->nvars(); ++v)
        if (kept[v]) {
            knames.push_back(ring->name(v));
            kvars.push_back(v);
        }
    MonomialOrder korder;
    korder.kind = ring->order().kind;
    for (uint32_t v : ring->order().priority) {
        if (!kept[v]) continue;
        for (uint32_t i = 0; i < kvars.size(); ++i)
            if (kvars[i] == v) korder.priority.push_back(i);
    }
    std::optional<NumberField> knf;
    if (ring->number_field() && kept[ring->number_field()->var]) {
        NumberField f = *ring->number_field();
        for (uint32_t i = 0; i < kvars.size(); ++i)
            if (kvars[i] == f.var) f.var = i;
        knf = f;
    }
    RingPtr kring = Ring::make(knames, korder, knf);

    IdealPresentation out{kring, {}};
    for (const auto& e : gb.elems) {
        bool pure = true;
        for (uint32_t v = 0; v < ring->nvars(); ++v)
            if (!kept[v] && e.involves(v)) pure = false;
        if (!pure) continue;
        std::vector<PTerm<Rat>> ts;
        for (const auto& t : e.terms()) {
            Monomial m(kvars.size(), 0);
            for (uint32_t i = 0; i < kvars.size(); ++i) m[i] = t.mono[kvars[i]];
            ts.push_back({std::move(m), t.coef});
        }
        // skip the adjoined minimal polynomial itself
        if (knf) {
            Poly cand(kring, std::vector<PTerm<Rat>>(ts));
            bool only_theta = true;
            for (uint32_t v = 0; v < kring->nvars(); ++v)
                if (v != knf->var && cand.involves(v)) only_theta = false;
            if (only_theta) continue;
            out.gens.push_back(std::move(cand));
            continue;
        }
        out.gens.push_back(Poly(kring, std::move(ts)));
    }
    return out;
}

BasePoly<RatFunc> FiberQuotient::to_fiber(const Poly& p) const {
    const RingPtr& oring = p.ring();
    std::vector<PTerm<RatFunc>> ts;
    ts.reserve(p.size());
    RatFunc x = RatFunc::variable();
    for (const auto& t : p.terms()) {
        RatFunc c(t.coef);
        for (uint32_t e = 0; e < t.mono[base]; ++e) c = c * x;
        Monomial m(fiber_ring->nvars(), 0);
        uint32_t k = 0;
        for (uint32_t v = 0; v < oring->nvars(); ++v) {
            if (v == base) continue;
            m[k++] = t.mono[v];
        }
        ts.push_back({std::move(m), std::move(c)});
    }
    return BasePoly<RatFunc>(fiber_ring, std::move(ts));
}

std::vector<RatFunc> FiberQuotient::coords(const Poly& p) const {
    BasePoly<RatFunc> nf = normal_form(to_fiber(p), gb);
    std::vector<RatFunc> out(std_monos.size(), RatFunc());
    for (const auto& t : nf.terms()) {
        bool placed = false;
        for (size_t i = 0; i < std_monos.size(); ++i)
            if (std_monos[i] == t.mono) {
                out[i] = t.coef;
                placed = true;
                break;
            }
        if (!placed) throw std::logic_error("normal form has a non-standard monomial");
    }
    return out;
}

FiberQuotient fiber_quotient(const IdealPresentation& ideal, uint32_t base) {
    const RingPtr& ring = ideal.ring;
    if (ring->number_field() && ring->number_field()->var == base)
        throw std::invalid_argument("the adjoined generator cannot be a module base");

    FiberQuotient fq;
    fq.base = base;
    std::vector<std::string> names;
    std::vector<uint32_t> fvars;
    for (uint32_t v = 0; v < ring->nvars(); ++v)
        if (v != base) {
            names.push_back(ring->name(v));
            fvars.push_back(v);
        }
    MonomialOrder order;
    order.kind = ring->order().kind;
    for (uint32_t v : ring->order().priority) {
        if (v == base) continue;
        for (uint32_t i = 0; i < fvars.size(); ++i)
            if (fvars[i] == v) order.priority.push_back(i);
    }
    std::optional<NumberField> nf;
    if (ring->number_field()) {
        NumberField f = *ring->number_field();
        for (uint32_t i = 0; i < fvars.size(); ++i)
            if (fvars[i] == f.var) f.var = i;
        nf = f;
    }
    fq.fiber_ring = Ring::make(names, order, nf);

    std::vector<BasePoly<RatFunc>> gens;
    for (const auto& g : ideal.gens) gens.push_back(fq.to_fiber(g));
    if (nf) {
        std::vector<PTerm<RatFunc>> ts;
        for (uint32_t j = 0; j < nf->min_poly.size(); ++j) {
            if (nf->min_poly[j] == 0) continue;
            ts.push_back({fq.fiber_ring->var_mono(nf->var, j), RatFunc(nf->min_poly[j])});
        }
        gens.push_back(BasePoly<RatFunc>(fq.fiber_ring, std::move(ts)));
    }
    fq.gb = buchberger_impl<RatFunc>(fq.fiber_ring, std::move(gens));

    // a unit in the basis means the generic fiber is empty
    if (fq.gb.elems.size() == 1 && fq.gb.elems[0].is_constant()) {
        fq.finite = true;
        return fq;
    }
    // finiteness: every fiber variable needs a pure-power leading monomial
    const size_t n = fq.fiber_ring->nvars();
    std::vector<uint64_t> bound(n, 0);
    bool finite = true;
    for (uint32_t v = 0; v < n; ++v) {
        uint64_t best = 0;
        for (const auto& e : fq.gb.elems) {
            const Monomial& lm = e.lm();
            bool pure = lm[v] > 0;
            for (uint32_t u = 0; u < n && pure; ++u)
                if (u != v && lm[u]) pure = false;
            if (pure) best = best ? std::min<uint64_t>(best, lm[v]) : lm[v];
        }
        if (best == 0) {
            finite = false;
            break;
        }
        bound[v] = best;
    }
    fq.finite = finite;
    if (!finite) return fq;

    // enumerate the staircase
    std::vector<Monomial> lms;
    for (const auto& e : fq.gb.elems) lms.push_back(e.lm());
    Monomial cur(n, 0);
    std::vector<Monomial> all;
    while (true) {
        bool standard = true;
        for (const auto& lm : lms)
            if (mono_divides(lm, cur)) {
                standard = false;
                break;
            }
        if (standard) all.push_back(cur);
        // odometer
        uint32_t k = 0;
        while (k < n) {
            if (++cur[k] < bound[k]) break;
            cur[k] = 0;
            ++k;
        }
        if (k == n) break;
    }
    std::sort(all.begin(), all.end(), [&](const Monomial& a, const Monomial& b) {
        return fq.fiber_ring->cmp(a, b) < 0;
    });
    fq.std_monos = std::move(all);
    if (nf) {
        for (const auto& m : fq.std_monos)
            if (m[nf->var] == 0) fq.std_monos_theta_free.push_back(m);
        if (fq.std_monos_theta_free.size() * nf->degree() != fq.std_monos.size())
            throw std::logic_error("staircase is not free over the adjoined field");
    } else {
        fq.std_monos_theta_free = fq.std_monos;
    }
    return fq;
}

FiberDimResult generic_fiber_dim(const IdealPresentation& ideal, uint32_t base) {
    FiberQuotient fq = fiber_quotient(ideal, base);
    if (!fq.finite) return {false, 0};
    return {true, fq.dim()};
}

template GroebnerBasis<Rat> buchberger_impl<Rat>(RingPtr, std::vector<BasePoly<Rat>>);
template GroebnerBasis<RatFunc> buchberger_impl<RatFunc>(RingPtr, std::vector<BasePoly<RatFunc>>);
template BasePoly<Rat> normal_form<Rat>(const BasePoly<Rat>&, const GroebnerBasis<Rat>&);
template BasePoly<RatFunc> normal_form<RatFunc>(const BasePoly<RatFunc>&, const GroebnerBasis<RatFunc>&);
template bool ideal_member<Rat>(const BasePoly<Rat>&, const GroebnerBasis<Rat>&);
template bool ideal_member<RatFunc>(const BasePoly<RatFunc>&, const GroebnerBasis<RatFunc>&);
template bool is_reduced_groebner_basis<Rat>(const GroebnerBasis<Rat>&);
template bool is_reduced_groebner_basis<RatFunc>(const GroebnerBasis<RatFunc>&);

}  // namespace tracering
