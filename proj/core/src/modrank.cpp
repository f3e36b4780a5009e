#include "tracering/modrank.hpp"

#include <algorithm>
#include <sstream>

#include "tracering/poly_io.hpp"
#include "tracering/tracecalc.hpp"

namespace tracering {

namespace {

// ---- univariate Q[x] toolkit (coefficients ascending) ----
using QP = std::vector<Rat>;

void qp_trim(QP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int qp_deg(const QP& p) { return static_cast<int>(p.size()) - 1; }

QP qp_mul(const QP& a, const QP& b) {
    if (a.empty() || b.empty()) return {};
    QP r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    qp_trim(r);
    return r;
}

QP qp_sub(QP a, const QP& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    qp_trim(a);
    return a;
}

// division with remainder; b nonzero
std::pair<QP, QP> qp_divmod(QP a, const QP& b) {
    QP q;
    if (b.empty()) throw std::invalid_argument("polynomial division by zero");
    if (qp_deg(a) >= qp_deg(b)) q.assign(a.size() - b.size() + 1, Rat(0));
    while (qp_deg(a) >= qp_deg(b) && !a.empty()) {
        Rat f = a.back() / b.back();
        int shift = qp_deg(a) - qp_deg(b);
        q[shift] = f;
        for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        qp_trim(a);
    }
    qp_trim(q);
    return {q, a};
}

// extended gcd with monic g
struct GcdExt {
    QP g, u, v;  // g = u*a + v*b
};
GcdExt qp_gcdext(QP a, QP b) {
    QP u0{Rat(1)}, v0, u1, v1{Rat(1)};
    while (!b.empty()) {
        auto [q, r] = qp_divmod(a, b);
        QP u2 = qp_sub(u0, qp_mul(q, u1));
        QP v2 = qp_sub(v0, qp_mul(q, v1));
        a = b;
        b = r;
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    return {a, u0, v0};
}

QP qp_from_zpoly(const ZPoly& z) {
    QP p;
    p.reserve(z.c.size());
    for (const auto& k : z.c) p.emplace_back(k);
    return p;
}

QP qp_scaled(const QP& p, const Rat& s) {
    QP r = p;
    for (auto& c : r) c *= s;
    qp_trim(r);
    return r;
}

bool qp_is_integer(const QP& p) {
    for (const auto& c : p)
        if (!is_integer(c)) return false;
    return true;
}

// RatFunc as a Q[x] polynomial (requires is_polynomial)
QP qp_of(const RatFunc& f) {
    auto cs = f.poly_coeffs();
    QP p(cs.begin(), cs.end());
    qp_trim(p);
    return p;
}

RatFunc rf_of(const QP& p) {
    ZPoly n;
    Int l = 1;
    for (const auto& c : p) l = lcm(l, den(c));
    n.c.reserve(p.size());
    for (const auto& c : p) n.c.push_back(num(c) * (l / den(c)));
    n.trim();
    return RatFunc(make_rat(1, l), std::move(n), ZPoly::constant(1));
}

// ---- linear algebra over Q(base) ----
struct LinSolve {
    bool consistent = false;
    std::vector<RatFunc> particular;          // one solution, free vars zero
    std::vector<std::vector<RatFunc>> kernel; // basis of the homogeneous space
};

// Solve A c = t where A is given by columns.
LinSolve solve_linear(const std::vector<std::vector<RatFunc>>& cols,
                      const std::vector<RatFunc>& t) {
    const size_t k = cols.size();
    const size_t m = t.size();
    // augmented rows
    std::vector<std::vector<RatFunc>> rows(m, std::vector<RatFunc>(k + 1));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < k; ++j) rows[i][j] = cols[j][i];
        rows[i][k] = t[i];
    }
    std::vector<int> pivot_of_col(k, -1);
    size_t r = 0;
    for (size_t c = 0; c < k && r < m; ++c) {
        size_t pr = r;
        while (pr < m && rows[pr][c].is_zero()) ++pr;
        if (pr == m) continue;
        std::swap(rows[pr], rows[r]);
        RatFunc inv = RatFunc(Rat(1)) / rows[r][c];
        for (size_t j = c; j <= k; ++j) rows[r][j] = rows[r][j] * inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            RatFunc f = rows[i][c];
            for (size_t j = c; j <= k; ++j) rows[i][j] = rows[i][j] - f * rows[r][j];
        }
        pivot_of_col[c] = static_cast<int>(r);
        ++r;
    }
    LinSolve out;
    // consistency: no row 0 = nonzero
    for (size_t i = r; i < m; ++i)
        if (!rows[i][k].is_zero()) return out;
    out.consistent = true;
    out.particular.assign(k, RatFunc());
    for (size_t c = 0; c < k; ++c)
        if (pivot_of_col[c] >= 0) out.particular[c] = rows[pivot_of_col[c]][k];
    for (size_t c = 0; c < k; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        std::vector<RatFunc> kv(k, RatFunc());
        kv[c] = RatFunc(Rat(1));
        for (size_t cc = 0; cc < k; ++cc)
            if (pivot_of_col[cc] >= 0) kv[cc] = -rows[pivot_of_col[cc]][c];
        out.kernel.push_back(std::move(kv));
    }
    return out;
}

// pole-clearing: monic lcm of the denominators (positive-degree part)
QP denominators_lcm(const std::vector<RatFunc>& v) {
    ZPoly d = ZPoly::constant(1);
    for (const auto& f : v) {
        if (f.is_zero()) continue;
        ZPoly g = zp_gcd(d, f.den());
        d = zp_div_exact(d * f.den(), g);
    }
    QP q = qp_from_zpoly(d);
    if (!q.empty()) q = qp_scaled(q, Rat(1) / q.back());
    return q;
}

// Find tau in Q(base) such that c0 + tau*kappa is polynomial (and has
// integer coefficients when want_integer). kappa must be polynomial.
// Returns the adjusted coefficient vector. Kernel dimension one only.
std::optional<std::vector<QP>> adjust_affine(const std::vector<RatFunc>& c0,
                                             const std::vector<RatFunc>& kappa_in,
                                             bool want_integer) {
    const size_t k = c0.size();
    // scale the direction vector to a primitive integer-polynomial vector
    // (the multiplier is absorbed into the free parameter)
    std::vector<RatFunc> kappa = kappa_in;
    {
        QP KD = denominators_lcm(kappa);
        if (qp_deg(KD) > 0) {
            RatFunc kd = rf_of(KD);
            for (auto& e : kappa) e = e * kd;
        }
    }
    std::vector<QP> kap(k);
    {
        Int N = 1, G = 0;
        for (size_t i = 0; i < k; ++i) {
            if (!kappa[i].is_polynomial()) return std::nullopt;
            kap[i] = qp_of(kappa[i]);
            for (const auto& c : kap[i]) N = lcm(N, den(c));
        }
        for (auto& p : kap)
            for (auto& c : p) {
                c *= Rat(N);
                G = gcd(G, num(c));
            }
        if (G > 1)
            for (auto& p : kap)
                for (auto& c : p) c /= Rat(G);
        for (size_t i = 0; i < k; ++i) kappa[i] = rf_of(kap[i]);
    }
    // pole phase
    QP D = denominators_lcm(c0);
    RatFunc tau;  // zero
    if (qp_deg(D) > 0) {
        RatFunc Drf = rf_of(D);
        // sigma with sigma*kap_i == -D*c0_i (mod D); tau = sigma/D
        QP sigma0;   // current solution
        QP M{Rat(1)};  // modulus: sigma unique mod M
        for (size_t i = 0; i < k; ++i) {
            RatFunc ri_rf = -(Drf * c0[i]);
            if (!ri_rf.is_polynomial()) return std::nullopt;
            QP ri = qp_divmod(qp_of(ri_rf), D).second;
            // kap_i*(sigma0 + M t) == ri (mod D)
            QP a = qp_divmod(qp_mul(kap[i], M), D).second;
            QP b = qp_divmod(qp_sub(ri, qp_mul(kap[i], sigma0)), D).second;
            if (a.empty()) {
                if (!b.empty()) return std::nullopt;
                continue;
            }
            GcdExt e = qp_gcdext(a, D);
            auto [bq, br] = qp_divmod(b, e.g);
            if (!br.empty()) return std::nullopt;
            QP Dg = qp_divmod(D, e.g).first;
            QP t0 = qp_divmod(qp_mul(e.u, bq), Dg).second;
            sigma0 = qp_sub(sigma0, qp_scaled(qp_mul(M, t0), Rat(-1)));  // sigma0 += M*t0
            M = qp_mul(M, Dg);
            QP Mr = qp_divmod(M, D).second;  // cap at D
            if (Mr.empty()) M = D;
        }
        tau = rf_of(sigma0) / Drf;
    }
    auto value = [&](size_t i) { return c0[i] + tau * kappa[i]; };
    for (size_t i = 0; i < k; ++i)
        if (!value(i).is_polynomial()) return std::nullopt;

    if (want_integer) {
        // residual freedom: tau + a/N with a integer-polynomial; find N
        Int N = 1;
        std::vector<QP> cur(k);
        for (size_t i = 0; i < k; ++i) {
            cur[i] = qp_of(value(i));
            for (const auto& c : cur[i]) N = lcm(N, den(c));
        }
        if (N == 1) return cur;
        if (N > 6) return std::nullopt;  // outside the certified search range
        long n = static_cast<long>(N.get_si());
        int maxdeg = 0;
        for (const auto& p : cur) maxdeg = std::max(maxdeg, qp_deg(p));
        for (const auto& p : kap) maxdeg = std::max(maxdeg, qp_deg(p));
        int digits = maxdeg + 2;
        if (digits > 6) return std::nullopt;
        long total = 1;
        for (int i = 0; i < digits; ++i) total *= n;
        for (long code = 0; code < total; ++code) {
            QP a;
            long c = code;
            for (int i = 0; i < digits; ++i) {
                a.push_back(Rat(c % n));
                c /= n;
            }
            qp_trim(a);
            bool ok = true;
            std::vector<QP> cand(k);
            for (size_t i = 0; i < k && ok; ++i) {
                QP add = qp_scaled(qp_mul(a, kap[i]), make_rat(1, N));
                QP ci = cur[i];
                if (ci.size() < add.size()) ci.resize(add.size(), Rat(0));
                for (size_t j = 0; j < add.size(); ++j) ci[j] += add[j];
                qp_trim(ci);
                if (!qp_is_integer(ci)) ok = false;
                cand[i] = std::move(ci);
            }
            if (ok) return cand;
        }
        return std::nullopt;
    }
    std::vector<QP> outv(k);
    for (size_t i = 0; i < k; ++i) outv[i] = qp_of(value(i));
    return outv;
}

// ---- working context ----
struct WorkCtx {
    ModuleProblem prob;
    FiberQuotient fq;
    GroebnerQ gb;  // of prob.ideal, for membership re-verification

    const RingPtr& ring() const { return prob.ideal.ring; }
};

WorkCtx make_ctx(const IdealPresentation& ideal, const Poly& base) {
    WorkCtx ctx;
    ctx.prob = make_module_problem(ideal, base);
    ctx.fq = fiber_quotient(ctx.prob.ideal, ctx.prob.base_var);
    ctx.gb = buchberger(ctx.prob.ideal);
    return ctx;
}

Poly base_power_poly(const RingPtr& R, uint32_t base_var, const QP& q,
                     uint32_t theta_shift = 0, uint32_t theta_var = 0) {
    std::vector<PTerm<Rat>> ts;
    for (uint32_t e = 0; e < q.size(); ++e) {
        if (q[e] == 0) continue;
        Monomial m = R->var_mono(base_var, e);
        if (theta_shift) m[theta_var] += theta_shift;
        ts.push_back({std::move(m), q[e]});
    }
    return Poly(R, std::move(ts));
}

// coefficient polynomial (in base and theta) attached to set element j,
// assembled from the theta-layered solution entries
Poly assemble_coeff(const WorkCtx& ctx, const std::vector<std::vector<QP>>& layers, size_t j) {
    const RingPtr& R = ctx.ring();
    const auto& nf = R->number_field();
    Poly acc(R);
    for (uint32_t e = 0; e < layers.size(); ++e) {
        uint32_t theta_var = nf ? nf->var : 0;
        acc += base_power_poly(R, ctx.prob.base_var, layers[e][j], e, theta_var);
    }
    return acc;
}

// fiber monomial -> full-ring polynomial
Poly mono_to_poly(const WorkCtx& ctx, const Monomial& fm) {
    const RingPtr& R = ctx.ring();
    Monomial m(R->nvars(), 0);
    uint32_t k = 0;
    for (uint32_t v = 0; v < R->nvars(); ++v) {
        if (v == ctx.prob.base_var) continue;
        m[v] = fm[k++];
    }
    return Poly::monomial(R, std::move(m), Rat(1));
}

bool is_coordinate_monomial(const WorkCtx& ctx, const Poly& p, Monomial* out) {
    if (p.size() != 1 || !(p.lc() == 1)) return false;
    const Monomial& m = p.lm();
    if (m[ctx.prob.base_var]) return false;
    const auto& nf = ctx.ring()->number_field();
    if (nf && m[nf->var]) return false;
    if (out) *out = m;
    return true;
}

// strip into the fiber ring
Monomial to_fiber_mono(const WorkCtx& ctx, const Monomial& m) {
    Monomial fm(ctx.fq.fiber_ring->nvars(), 0);
    uint32_t k = 0;
    for (uint32_t v = 0; v < ctx.ring()->nvars(); ++v) {
        if (v == ctx.prob.base_var) continue;
        fm[k++] = m[v];
    }
    return fm;
}

std::string transcript_text(const std::vector<Poly>& set, const TranscriptLine& line) {
    std::ostringstream os;
    os << line.label << " = ";
    bool first = true;
    for (size_t j = 0; j < set.size(); ++j) {
        if (line.coeffs[j].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << to_string(line.coeffs[j]) << ")*[" << to_string(set[j]) << "]";
    }
    if (first) os << "0";
    return os.str();
}

// Expand products set*coordinates in the fraction-field coordinates and
// produce transcript lines; nullopt on the first failing product, with the
// label reported through `fail`.
std::optional<std::vector<TranscriptLine>> build_transcripts(
    const WorkCtx& ctx, const std::vector<Poly>& set, bool want_integer, std::string* fail) {
    const RingPtr& R = ctx.ring();
    const auto& nf = R->number_field();
    const uint32_t theta_deg = nf ? nf->degree() : 1;

    // columns: coords of theta^e * set[j] over the full staircase
    std::vector<std::vector<RatFunc>> cols;
    std::vector<std::pair<uint32_t, size_t>> col_ids;  // (theta power, set index)
    for (uint32_t e = 0; e < theta_deg; ++e) {
        for (size_t j = 0; j < set.size(); ++j) {
            Poly p = set[j];
            if (e) {
                Poly th = Poly::variable(R, nf->var);
                for (uint32_t i = 0; i < e; ++i) p *= th;
            }
            cols.push_back(ctx.fq.coords(normal_form(p, ctx.gb)));
            col_ids.push_back({e, j});
        }
    }

    std::vector<TranscriptLine> lines;
    for (uint32_t v : ctx.prob.coord_vars) {
        for (size_t j = 0; j < set.size(); ++j) {
            Poly prod = Poly::variable(R, v) * set[j];
            std::string label = R->name(v) + " * (" + to_string(set[j]) + ")";
            LinSolve sol = solve_linear(cols, ctx.fq.coords(normal_form(prod, ctx.gb)));
            if (!sol.consistent) {
                if (fail) *fail = label + ": product lies outside the span";
                return std::nullopt;
            }
            std::optional<std::vector<QP>> adj;
            if (sol.kernel.empty()) {
                adj = adjust_affine(sol.particular, std::vector<RatFunc>(cols.size(), RatFunc()),
                                    want_integer);
            } else if (sol.kernel.size() == 1) {
                adj = adjust_affine(sol.particular, sol.kernel[0], want_integer);
            } else {
                if (fail) *fail = label + ": relation space has rank > 1 (unsupported)";
                return std::nullopt;
            }
            if (!adj) {
                if (fail)
                    *fail = label + (want_integer
                                         ? ": no integer base-ring combination found"
                                         : ": coefficients are not polynomial in the base");
                return std::nullopt;
            }
            // reassemble per set element across theta layers
            std::vector<std::vector<QP>> layers(theta_deg, std::vector<QP>(set.size()));
            for (size_t cix = 0; cix < cols.size(); ++cix)
                layers[col_ids[cix].first][col_ids[cix].second] = (*adj)[cix];
            TranscriptLine line;
            line.label = label;
            line.product = prod;
            line.coeffs.reserve(set.size());
            for (size_t jj = 0; jj < set.size(); ++jj)
                line.coeffs.push_back(assemble_coeff(ctx, layers, jj));
            // independent membership re-verification
            Poly comb(R);
            for (size_t jj = 0; jj < set.size(); ++jj) comb += line.coeffs[jj] * set[jj];
            if (!ideal_member(prod - comb, ctx.gb))
                throw std::logic_error("transcript failed its membership re-verification");
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

bool contains_one(const std::vector<Poly>& set) {
    for (const auto& p : set)
        if (p.is_constant() && !p.is_zero() && p.lc() == 1) return true;
    return false;
}

}  // namespace

ModuleProblem make_module_problem(const IdealPresentation& ideal, const Poly& base) {
    ModuleProblem prob;
    prob.base = base;
    const RingPtr& R = ideal.ring;
    if (auto v = as_variable(base)) {
        prob.ideal = ideal;
        prob.base_var = *v;
    } else {
        std::string sname = R->fresh_name("s");
        RingPtr E = R->extended_below({sname});
        prob.base_var = E->var(sname);
        prob.ideal.ring = E;
        for (const auto& g : ideal.gens) prob.ideal.gens.push_back(g.mapped_to(E));
        prob.ideal.gens.push_back(Poly::variable(E, prob.base_var) - base.mapped_to(E));
    }
    const RingPtr& W = prob.ideal.ring;
    for (uint32_t v = 0; v < R->nvars(); ++v) {
        uint32_t wv = W->var(R->name(v));
        if (wv == prob.base_var) continue;
        if (W->number_field() && W->number_field()->var == wv) continue;
        prob.coord_vars.push_back(wv);
    }
    return prob;
}

std::string FreeBasisCert::text() const {
    std::ostringstream os;
    os << "free-basis rank " << basis.size() << " independence=" << independence << "\n";
    std::vector<std::string> lines;
    for (const auto& l : generation) lines.push_back(transcript_text(basis, l));
    std::sort(lines.begin(), lines.end());
    for (const auto& s : lines) os << "  " << s << "\n";
    return os.str();
}

std::string GenSetCert::text() const {
    std::ostringstream os;
    os << "generating-set size " << generators.size() << "\n";
    std::vector<std::string> lines;
    for (const auto& l : transcripts) lines.push_back(transcript_text(generators, l));
    std::sort(lines.begin(), lines.end());
    for (const auto& s : lines) os << "  " << s << "\n";
    return os.str();
}

std::string NonFreenessCert::text() const {
    std::ostringstream os;
    os << "non-freeness: syzygy (";
    for (size_t i = 0; i < syzygy.size(); ++i)
        os << (i ? ", " : "") << to_string(syzygy[i]);
    os << ") on (";
    for (size_t i = 0; i < summand_gens.size(); ++i)
        os << (i ? ", " : "") << to_string(summand_gens[i]);
    os << "); obstruction ideal (" << to_string(obstruction[0]) << ", "
       << to_string(obstruction[1]) << "); " << parity_note << "\n";
    return os.str();
}

std::variant<FreeBasisCert, CertFailure> verify_free_basis(const IdealPresentation& ideal,
                                                           const Poly& base,
                                                           const std::vector<Poly>& basis_in,
                                                           CoefRing ring) {
    WorkCtx ctx = make_ctx(ideal, base);
    const RingPtr& R = ctx.ring();
    if (!ctx.fq.finite)
        return CertFailure{"span", "the module is not finitely generated over the base"};

    std::vector<Poly> basis;
    for (const auto& b : basis_in) basis.push_back(b.mapped_to(R));

    // elements must be monomials in the coordinates
    std::vector<Monomial> bmonos;
    for (const auto& b : basis) {
        Monomial m;
        if (!is_coordinate_monomial(ctx, b, &m))
            return CertFailure{"independence",
                               "basis element " + to_string(b) + " is not a coordinate monomial"};
        bmonos.push_back(m);
    }
    const uint64_t dim = ctx.fq.dim();
    if (basis.size() > dim) {
        // exhibit a dependence: expand the last element in the earlier ones
        std::vector<std::vector<RatFunc>> cols;
        for (size_t j = 0; j + 1 < basis.size(); ++j)
            cols.push_back(ctx.fq.coords(normal_form(basis[j], ctx.gb)));
        LinSolve sol = solve_linear(cols, ctx.fq.coords(normal_form(basis.back(), ctx.gb)));
        std::string rel = sol.consistent ? " (it reduces to a combination of the earlier ones)"
                                         : "";
        return CertFailure{"independence", "basis has " + std::to_string(basis.size()) +
                                               " elements but the module rank is " +
                                               std::to_string(dim) + rel};
    }
    if (basis.size() < dim)
        return CertFailure{"generation", "basis has " + std::to_string(basis.size()) +
                                             " elements but the module rank is " +
                                             std::to_string(dim)};
    if (!contains_one(basis))
        return CertFailure{"generation", "the constant 1 is not among the basis elements"};

    FreeBasisCert cert;
    cert.basis = basis;

    // route 1: staircase
    bool staircase_ok = true;
    for (const auto& e : ctx.gb.elems) {
        if (e.lm()[ctx.prob.base_var]) staircase_ok = false;
    }
    if (staircase_ok) {
        std::vector<Monomial> lms;
        for (const auto& e : ctx.gb.elems) lms.push_back(e.lm());
        for (size_t i = 0; i < bmonos.size() && staircase_ok; ++i) {
            for (const auto& lm : lms)
                if (mono_divides(lm, bmonos[i])) staircase_ok = false;
            if (i && R->cmp(bmonos[i - 1], bmonos[i]) >= 0) staircase_ok = false;
        }
    }
    if (staircase_ok) {
        cert.independence = "staircase";
    } else {
        // route 2: fraction-field pivots
        std::vector<std::vector<RatFunc>> cols;
        for (const auto& b : basis) cols.push_back(ctx.fq.coords(normal_form(b, ctx.gb)));
        // rank test: solve homogeneous system and require trivial kernel
        LinSolve sol = solve_linear(cols, std::vector<RatFunc>(ctx.fq.std_monos.size(), RatFunc()));
        if (!sol.kernel.empty()) {
            std::ostringstream os;
            os << "dependence over the fraction field:";
            for (size_t j = 0; j < basis.size(); ++j)
                if (!sol.kernel[0][j].is_zero()) os << " [" << to_string(basis[j]) << "]";
            return CertFailure{"independence", os.str()};
        }
        cert.independence = "fraction-field-pivots";
    }

    std::string fail;
    auto lines = build_transcripts(ctx, basis, ring == CoefRing::Z, &fail);
    if (!lines) return CertFailure{"generation", fail};
    cert.generation = std::move(*lines);
    return cert;
}

std::variant<GenSetCert, CertFailure> verify_gen_set(const IdealPresentation& ideal,
                                                     const Poly& base,
                                                     const std::vector<Poly>& generators_in,
                                                     CoefRing ring) {
    WorkCtx ctx = make_ctx(ideal, base);
    const RingPtr& R = ctx.ring();
    if (!ctx.fq.finite)
        return CertFailure{"span", "the module is not finitely generated over the base"};
    std::vector<Poly> gens;
    for (const auto& g : generators_in) gens.push_back(g.mapped_to(R));
    if (!contains_one(gens))
        return CertFailure{"span", "the constant 1 is not among the generators"};
    std::string fail;
    auto lines = build_transcripts(ctx, gens, ring == CoefRing::Z, &fail);
    if (!lines) return CertFailure{"generation", fail};
    GenSetCert cert;
    cert.generators = std::move(gens);
    cert.transcripts = std::move(*lines);
    return cert;
}

std::variant<NonFreenessCert, CertFailure> verify_nonfree(const IdealPresentation& ideal,
                                                          const Poly& base,
                                                          const std::vector<Poly>& summand_in,
                                                          const std::vector<Poly>& syzygy_in,
                                                          const std::vector<Poly>& obstruction) {
    WorkCtx ctx = make_ctx(ideal, base);
    const RingPtr& R = ctx.ring();
    if (summand_in.size() < 2 || summand_in.size() != syzygy_in.size())
        return CertFailure{"annihilation", "summand and syzygy lengths do not match"};
    std::vector<Poly> gens, syz;
    for (const auto& g : summand_in) gens.push_back(g.mapped_to(R));
    for (const auto& s : syzygy_in) syz.push_back(s.mapped_to(R));
    for (const auto& s : syz)
        for (uint32_t v = 0; v < R->nvars(); ++v)
            if (v != ctx.prob.base_var && s.involves(v))
                return CertFailure{"annihilation", "syzygy entries must be base-ring polynomials"};

    // (a) the syzygy annihilates
    Poly comb(R);
    for (size_t i = 0; i < gens.size(); ++i) comb += syz[i] * gens[i];
    if (!ideal_member(comb, ctx.gb))
        return CertFailure{"annihilation",
                           "sum of syzygy multiples is not in the ideal: " + to_string(comb)};

    // (b) the syzygy generates the kernel over Q[base]
    std::vector<std::vector<RatFunc>> cols;
    for (const auto& g : gens) cols.push_back(ctx.fq.coords(normal_form(g, ctx.gb)));
    LinSolve sol = solve_linear(cols, std::vector<RatFunc>(ctx.fq.std_monos.size(), RatFunc()));
    if (sol.kernel.size() != 1)
        return CertFailure{"kernel", "syzygy module has rank " + std::to_string(sol.kernel.size()) +
                                         ", expected 1"};
    // primitive integral form of the computed kernel vector
    std::vector<QP> kv(gens.size());
    {
        QP D = denominators_lcm(sol.kernel[0]);
        RatFunc Drf = qp_deg(D) > 0 ? rf_of(D) : RatFunc(Rat(1));
        Int N = 1;
        for (size_t i = 0; i < gens.size(); ++i) {
            RatFunc e = sol.kernel[0][i] * Drf;
            if (!e.is_polynomial())
                return CertFailure{"kernel", "kernel vector could not be cleared to polynomials"};
            kv[i] = qp_of(e);
            for (const auto& c : kv[i]) N = lcm(N, den(c));
        }
        Int G = 0;
        for (auto& p : kv)
            for (auto& c : p) {
                c *= Rat(N);
                G = gcd(G, num(c));
            }
        if (G != 0)
            for (auto& p : kv)
                for (auto& c : p) c /= Rat(G);
    }
    // compare with the claim up to a global sign
    auto qp_of_poly = [&](const Poly& p) {
        QP q(p.degree_in(ctx.prob.base_var) + 1, Rat(0));
        for (const auto& t : p.terms()) q[t.mono[ctx.prob.base_var]] = t.coef;
        qp_trim(q);
        return q;
    };
    std::vector<QP> claimed(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) claimed[i] = qp_of_poly(syz[i]);
    bool same = true, negated = true;
    for (size_t i = 0; i < gens.size(); ++i) {
        if (claimed[i] != kv[i]) same = false;
        QP neg = qp_scaled(kv[i], Rat(-1));
        if (claimed[i] != neg) negated = false;
    }
    if (!same && !negated)
        return CertFailure{"kernel", "claimed syzygy is not the primitive kernel generator"};

    // (c) parity obstruction (mod-2 lifting inconsistency)
    const size_t k = gens.size();
    QP sk = claimed[k - 1], sk1 = claimed[k - 2];
    if (qp_deg(sk) != 0 || (sk[0] != 2 && sk[0] != -2))
        return CertFailure{"parity", "last syzygy entry must be the constant +/-2"};
    if (obstruction.size() != 2)
        return CertFailure{"parity", "obstruction ideal must have two generators"};
    {
        QP o1 = qp_of_poly(obstruction[0].mapped_to(R));
        QP o2 = qp_of_poly(obstruction[1].mapped_to(R));
        auto eq_abs = [](const QP& a, const QP& b) {
            return a == b || a == qp_scaled(b, Rat(-1));
        };
        bool match = (eq_abs(o1, sk) && eq_abs(o2, sk1)) || (eq_abs(o2, sk) && eq_abs(o1, sk1));
        if (!match)
            return CertFailure{"parity",
                               "obstruction ideal is not generated by the last two syzygy entries"};
    }
    // all constant terms even, so unknown degree-1 lift coefficients drop mod 2
    for (size_t i = 0; i < k; ++i) {
        Rat c0 = claimed[i].empty() ? Rat(0) : claimed[i][0];
        if (!is_integer(c0) || num(c0) % 2 != 0)
            return CertFailure{"parity", "syzygy constant terms are not all even"};
    }
    // gamma = (0, ..., 0, s_k, -s_{k-1}); lift constants p_i(0) = gamma_i(0)/2
    std::vector<Rat> p0(k, Rat(0));
    p0[k - 2] = sk[0] / 2;
    p0[k - 1] = -(sk1.empty() ? Rat(0) : sk1[0]) / 2;
    Rat sum(0);
    for (size_t i = 0; i < k; ++i) {
        Rat s1 = qp_deg(claimed[i]) >= 1 ? claimed[i][1] : Rat(0);
        sum += s1 * p0[i];
    }
    if (!is_integer(sum) || num(sum) % 2 == 0)
        return CertFailure{"parity", "degree-one lift coefficients are consistent mod 2; "
                                     "no obstruction"};

    NonFreenessCert cert;
    cert.summand_gens = gens;
    cert.syzygy = syz;
    cert.obstruction = {obstruction[0].mapped_to(R), obstruction[1].mapped_to(R)};
    cert.parity_note = "degree-one coefficient is odd on one side and even on the other";
    return cert;
}

namespace {

RankResult rank_field(const IdealPresentation& ideal, const Poly& base,
                      const std::vector<Poly>& claimed_basis, CoefRing cr) {
    WorkCtx ctx = make_ctx(ideal, base);
    const RingPtr& R = ctx.ring();
    RankResult out;

    // integrality screen over the field base
    Poly bvar = Poly::variable(R, ctx.prob.base_var);
    std::vector<DependenceResult> deps;
    for (uint32_t v : ctx.prob.coord_vars) {
        DependenceResult dep =
            is_integral(ctx.prob.ideal, Poly::variable(R, v), BaseRingKind::FieldUnivariate, bvar);
        if (!dep.integral) {
            out.finite = false;
            out.witness = R->name(v);
            out.note = "coordinate " + R->name(v) + " is not integral over the base: " +
                       dep.detail;
            return out;
        }
        deps.push_back(std::move(dep));
    }
    out.finite = true;
    out.value = ctx.fq.dim();
    out.exact = true;
    out.lower = out.upper = out.value;

    // certificate: claimed basis, else the staircase, else the product set
    std::vector<std::string> attempts;
    if (!claimed_basis.empty()) {
        auto r = verify_free_basis(ideal, base, claimed_basis, cr);
        if (auto* cert = std::get_if<FreeBasisCert>(&r)) {
            out.free_basis = std::move(*cert);
            return out;
        }
        auto& f = std::get<CertFailure>(r);
        attempts.push_back("claimed basis failed at " + f.stage + ": " + f.detail);
    }
    {
        std::vector<Poly> staircase;
        for (const auto& m : ctx.fq.std_monos_theta_free)
            staircase.push_back(mono_to_poly(ctx, m));
        auto r = verify_free_basis(ideal, base, staircase, cr);
        if (auto* cert = std::get_if<FreeBasisCert>(&r)) {
            out.free_basis = std::move(*cert);
            out.note = attempts.empty() ? "" : attempts[0];
            return out;
        }
        auto& f = std::get<CertFailure>(r);
        attempts.push_back("staircase basis failed at " + f.stage + ": " + f.detail);
    }
    // generating set from the dependence degrees, with monic rewriting
    // transcripts: multiplying past a top power applies the dependence
    {
        GenSetCert cert;
        std::vector<Monomial> elems;
        Monomial cur(R->nvars(), 0);
        std::vector<uint32_t> degs;
        for (const auto& d : deps) degs.push_back(d.degree);
        while (true) {
            elems.push_back(cur);
            size_t k = 0;
            for (; k < ctx.prob.coord_vars.size(); ++k) {
                uint32_t v = ctx.prob.coord_vars[k];
                if (++cur[v] < degs[k]) break;
                cur[v] = 0;
            }
            if (k == ctx.prob.coord_vars.size()) break;
        }
        auto index_of = [&](const Monomial& m) -> size_t {
            for (size_t i = 0; i < elems.size(); ++i)
                if (elems[i] == m) return i;
            throw std::logic_error("product left the generating set");
        };
        for (const auto& m : elems) cert.generators.push_back(Poly::monomial(R, m, Rat(1)));
        for (size_t k = 0; k < ctx.prob.coord_vars.size(); ++k) {
            uint32_t v = ctx.prob.coord_vars[k];
            // dependence coefficients a_j(base), degree-ascending
            std::vector<Poly> a;
            const Poly& D = deps[k].dependence;  // ring (base, f)
            for (uint32_t j = 0; j < degs[k]; ++j) {
                std::vector<PTerm<Rat>> ts;
                for (const auto& t : D.terms())
                    if (t.mono[1] == j)
                        ts.push_back({R->var_mono(ctx.prob.base_var, t.mono[0]), t.coef});
                a.push_back(Poly(R, std::move(ts)));
            }
            for (const auto& m : elems) {
                TranscriptLine line;
                Monomial pm = m;
                pm[v] += 1;
                line.product = Poly::monomial(R, pm, Rat(1));
                line.label = R->name(v) + " * (" + to_string(Poly::monomial(R, m, Rat(1))) + ")";
                line.coeffs.assign(elems.size(), Poly::zero(R));
                if (m[v] + 1 < degs[k]) {
                    line.coeffs[index_of(pm)] = Poly::constant(R, Rat(1));
                } else {
                    Monomial rest = m;
                    rest[v] = 0;
                    for (uint32_t j = 0; j < degs[k]; ++j) {
                        if (a[j].is_zero()) continue;
                        Monomial ej = rest;
                        ej[v] = j;
                        line.coeffs[index_of(ej)] = -a[j];
                    }
                }
                Poly comb(R);
                for (size_t jj = 0; jj < elems.size(); ++jj)
                    comb += line.coeffs[jj] * cert.generators[jj];
                if (!ideal_member(line.product - comb, ctx.gb))
                    throw std::logic_error("rewriting transcript failed membership re-verification");
                cert.transcripts.push_back(std::move(line));
            }
        }
        out.gen_set = std::move(cert);
        std::string note;
        for (const auto& att : attempts) note += (note.empty() ? "" : "; ") + att;
        out.note = note + (note.empty() ? "" : "; ") +
                   "certificate: dependence-degree generating set of size " +
                   std::to_string(out.gen_set->generators.size());
    }
    return out;
}

}  // namespace

RankResult rank_C(const IdealPresentation& ideal, const Poly& base,
                  const std::vector<Poly>& claimed_basis) {
    return rank_field(ideal, base, claimed_basis, CoefRing::C);
}

RankResult rank_Q(const IdealPresentation& ideal, const Poly& base,
                  const std::vector<Poly>& claimed_basis) {
    if (ideal.ring->number_field())
        throw std::invalid_argument("rank over Q[I_alpha] requires a rational model; "
                                    "apply the rational contraction first");
    return rank_field(ideal, base, claimed_basis, CoefRing::Q);
}

RankResult rank_Z_bounds(const IdealPresentation& ideal, const Poly& base,
                         const std::vector<Poly>& claimed_generators,
                         const std::optional<NonFreenessCert>& nonfree) {
    if (ideal.ring->number_field())
        throw std::invalid_argument("rank over Z[I_alpha] requires a rational model");
    WorkCtx ctx = make_ctx(ideal, base);
    const RingPtr& R = ctx.ring();
    RankResult out;

    Poly bvar = Poly::variable(R, ctx.prob.base_var);
    std::vector<uint32_t> degs;
    for (uint32_t v : ctx.prob.coord_vars) {
        DependenceResult dep = is_integral(ctx.prob.ideal, Poly::variable(R, v),
                                           BaseRingKind::IntegerUnivariate, bvar);
        if (!dep.integral) {
            out.finite = false;
            out.witness = R->name(v);
            out.note = "coordinate " + R->name(v) + " is not integral over Z[base]: " + dep.detail;
            return out;
        }
        degs.push_back(dep.degree);
    }
    out.finite = true;
    RankResult rq = rank_Q(ideal, base);
    out.lower = rq.value;

    if (!claimed_generators.empty()) {
        auto r = verify_gen_set(ideal, base, claimed_generators, CoefRing::Z);
        if (auto* cert = std::get_if<GenSetCert>(&r)) {
            out.upper = cert->generators.size();
            out.gen_set = std::move(*cert);
        } else {
            auto& f = std::get<CertFailure>(r);
            out.note = "claimed generating set failed at " + f.stage + ": " + f.detail;
            uint64_t prod = 1;
            for (uint32_t d : degs) prod *= d;
            out.upper = prod;
        }
    } else {
        uint64_t prod = 1;
        for (uint32_t d : degs) prod *= d;
        out.upper = prod;  // dependence-degree product set generates over Z
    }

    if (nonfree) out.nonfree = nonfree;
    if (out.lower == out.upper) {
        out.exact = true;
        out.value = out.lower;
    } else if (nonfree && out.upper == out.lower + 1) {
        out.exact = true;
        out.value = out.upper;
        out.note += (out.note.empty() ? "" : "; ");
        out.note += "non-freeness certificate rules out a generating set of the lower-bound size";
    } else {
        out.exact = false;
        out.value = out.upper;
    }
    return out;
}

}  // namespace tracering
