#include "tracering/integrality.hpp"

#include <algorithm>

#include "tracering/poly_io.hpp"
#include "tracering/tracecalc.hpp"

namespace tracering {

namespace {

Poly coeff_of_power(const Poly& p, uint32_t v, uint32_t e) {
    std::vector<PTerm<Rat>> ts;
    for (const auto& t : p.terms()) {
        if (t.mono[v] != e) continue;
        Monomial m = t.mono;
        m[v] = 0;
        ts.push_back({std::move(m), t.coef});
    }
    return Poly(p.ring(), std::move(ts));
}

}  // namespace

std::optional<uint32_t> as_variable(const Poly& p) {
    if (p.size() != 1) return std::nullopt;
    const auto& t = p.leading();
    if (t.coef != 1 || mono_degree(t.mono) != 1) return std::nullopt;
    for (uint32_t v = 0; v < t.mono.size(); ++v)
        if (t.mono[v] == 1) return v;
    return std::nullopt;
}

Poly image_curve(const IdealPresentation& ideal, const Poly& f, const Poly& base,
                 std::string f_name, std::string base_name) {
    const RingPtr& R = ideal.ring;
    if (f_name.empty()) {
        auto v = as_variable(f);
        f_name = v ? R->name(*v) : "f";
    }
    if (base_name.empty()) {
        auto v = as_variable(base);
        base_name = v ? R->name(*v) : "s";
    }
    if (base_name == f_name) f_name += "f";

    std::string bn = R->fresh_name("IC" + base_name);
    std::string fn = R->fresh_name("IC" + f_name);
    RingPtr E = R->extended_below({bn, fn});
    uint32_t bv = E->var(bn), fv = E->var(fn);

    IdealPresentation ext{E, {}};
    for (const auto& g : ideal.gens) ext.gens.push_back(g.mapped_to(E));
    ext.gens.push_back(Poly::variable(E, bv) - base.mapped_to(E));
    ext.gens.push_back(Poly::variable(E, fv) - f.mapped_to(E));

    GroebnerQ gb = buchberger(ext);
    std::vector<Poly> pair_elems;
    for (const auto& e : gb.elems) {
        bool pure = true;
        for (uint32_t v = 0; v < E->nvars() && pure; ++v)
            if (v != bv && v != fv && e.involves(v)) pure = false;
        if (!pure) continue;
        if (!e.involves(fv)) {
            if (e.involves(bv))
                throw ConstantBaseError("base function is constant on the curve (relation " +
                                        to_string(e) + ")");
            continue;  // a rational constant cannot appear in a proper ideal
        }
        pair_elems.push_back(e);
    }
    if (pair_elems.empty())
        throw std::invalid_argument("no algebraic relation between base and element; "
                                    "the input is not a curve over the base");
    if (pair_elems.size() > 1)
        throw std::invalid_argument(
            "image ideal is not principal; the input ideal does not cut an irreducible curve");

    RingPtr P = Ring::lex({base_name, f_name});
    std::vector<PTerm<Rat>> ts;
    for (const auto& t : pair_elems[0].terms())
        ts.push_back({Monomial{t.mono[bv], t.mono[fv]}, t.coef});
    Poly img(P, std::move(ts));
    return content_and_primitive(img).second;
}

DependenceResult is_integral(const IdealPresentation& ideal, const Poly& f, BaseRingKind kind,
                             const Poly& base) {
    if (kind == BaseRingKind::PeripheralSubring)
        throw std::invalid_argument("peripheral kind requires is_integral_peripheral");
    Poly P = image_curve(ideal, f, base);
    const RingPtr& R2 = P.ring();
    uint32_t bv = 0, fv = 1;
    uint32_t deg = P.degree_in(fv);
    Poly lead = coeff_of_power(P, fv, deg);

    DependenceResult out;
    out.degree = deg;
    bool lead_constant = lead.is_constant();
    bool lead_unit = lead_constant && (lead.lc() == 1 || lead.lc() == -1);
    bool ok = (kind == BaseRingKind::IntegerUnivariate) ? lead_unit : lead_constant;
    if (!ok) {
        out.integral = false;
        out.witness = lead;
        out.detail = "leading coefficient of the image curve in " + R2->name(fv) + " is " +
                     to_string(lead);
        return out;
    }
    out.integral = true;
    out.dependence = P.scaled(Rat(1) / lead.lc());
    if (kind == BaseRingKind::IntegerUnivariate) {
        // primitive with unit leading coefficient: monic after sign flip
        if (!has_integer_coefficients(out.dependence))
            throw std::logic_error("integer dependence expected after sign normalization");
    }
    // independent re-verification: substitute back and check membership
    {
        std::vector<Poly> images(2, Poly(ideal.ring));
        images[bv] = base;
        images[fv] = f;
        Poly back = compose(out.dependence, ideal.ring, images);
        GroebnerQ gb = buchberger(ideal);
        if (!ideal_member(back, gb))
            throw std::logic_error("dependence failed its membership re-verification");
    }
    return out;
}

DependenceResult is_integral_peripheral(
    const IdealPresentation& ideal, const Poly& f,
    const std::vector<std::pair<std::string, Poly>>& peripheral) {
    if (peripheral.empty()) throw std::invalid_argument("no peripheral trace functions supplied");
    const RingPtr& R = ideal.ring;

    // cheap sufficient route first: integrality over one supplied function
    for (const auto& [nm, tracepoly] : peripheral) {
        try {
            DependenceResult single = is_integral(ideal, f, BaseRingKind::FieldUnivariate, tracepoly);
            if (single.integral) {
                single.detail = "integral over the subring generated by " + nm;
                single.tag_images = {{nm, tracepoly}};
                return single;
            }
        } catch (const ConstantBaseError&) {
            // constant peripheral function generates constants only; skip
        }
    }

    // full tag test: originals highest, then f, tags lowest
    std::vector<std::string> tag_names;
    for (const auto& [nm, p] : peripheral) tag_names.push_back(R->fresh_name("T" + nm));
    std::string fn = R->fresh_name("Tf");
    std::vector<std::string> extra = tag_names;
    extra.push_back(fn);  // f sits above the tags, below the originals
    RingPtr E = R->extended_below(extra);
    // extend_below puts extras lowest in declaration order; we want tags
    // lowest then f above them: declaration order of `extra` already lists
    // tags before f, and extend_below's priority follows that order.
    uint32_t fv = E->var(fn);

    IdealPresentation ext{E, {}};
    for (const auto& g : ideal.gens) ext.gens.push_back(g.mapped_to(E));
    ext.gens.push_back(Poly::variable(E, fv) - f.mapped_to(E));
    for (uint32_t k = 0; k < peripheral.size(); ++k)
        ext.gens.push_back(Poly::variable(E, E->var(tag_names[k])) -
                           peripheral[k].second.mapped_to(E));
    GroebnerQ gb = buchberger(ext);

    DependenceResult out;
    out.tag_images.clear();
    for (uint32_t k = 0; k < peripheral.size(); ++k)
        out.tag_images.push_back({tag_names[k], peripheral[k].second});

    const Poly* best = nullptr;
    for (const auto& e : gb.elems) {
        bool in_subring = true;
        for (uint32_t v = 0; v < R->nvars(); ++v)
            if (e.involves(v)) in_subring = false;
        if (!in_subring || !e.involves(fv)) continue;
        const Monomial& lm = e.lm();
        bool pure = lm[fv] > 0;
        for (uint32_t v = 0; v < E->nvars() && pure; ++v)
            if (v != fv && lm[v]) pure = false;
        if (pure) {
            out.integral = true;
            out.degree = lm[fv];
            // keep only the tag+f variables in the certificate ring
            std::vector<std::string> cert_names = tag_names;
            cert_names.push_back(fn);
            RingPtr C = Ring::lex(cert_names);
            std::vector<PTerm<Rat>> ts;
            for (const auto& t : e.terms()) {
                Monomial m(C->nvars(), 0);
                for (uint32_t k = 0; k < tag_names.size(); ++k)
                    m[k] = t.mono[E->var(tag_names[k])];
                m[C->nvars() - 1] = t.mono[fv];
                ts.push_back({std::move(m), t.coef});
            }
            out.dependence = Poly(C, std::move(ts));
            out.detail = "monic over the peripheral subring";
            return out;
        }
        if (!best || e.lm()[fv] < best->lm()[fv]) best = &e;
    }
    out.integral = false;
    if (best) {
        out.witness = coeff_of_power(*best, fv, best->degree_in(fv));
        out.detail = "no monic relation over the peripheral subring; minimal relation has "
                     "non-unit leading coefficient";
    } else {
        out.detail = "element is transcendental over the peripheral subring";
        out.witness = Poly::zero(E);
    }
    return out;
}

IdealPresentation rational_contraction(const IdealPresentation& ideal) {
    const RingPtr& R = ideal.ring;
    if (!R->number_field()) {
        GroebnerQ gb = buchberger(ideal);
        return {R, gb.elems};
    }
    std::vector<uint32_t> keep;
    for (uint32_t v = 0; v < R->nvars(); ++v)
        if (v != R->number_field()->var) keep.push_back(v);
    return eliminate(ideal, keep);
}

PeripheralProfile peripheral_integrality_profile(
    const IdealPresentation& ideal, const std::vector<std::pair<std::string, Poly>>& coordinates,
    const std::vector<std::pair<std::string, Poly>>& peripheral) {
    PeripheralProfile prof;
    for (const auto& [nm, f] : coordinates) {
        DependenceResult r = is_integral_peripheral(ideal, f, peripheral);
        if (!r.integral && prof.all_integral) {
            prof.all_integral = false;
            prof.first_witness = nm;
        }
        prof.per_coordinate.push_back({nm, std::move(r)});
    }
    return prof;
}

}  // namespace tracering
