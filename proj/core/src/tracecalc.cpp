#include "tracering/tracecalc.hpp"

#include <algorithm>

namespace tracering {

namespace {

std::vector<int32_t> inv_letters(const std::vector<int32_t>& w) {
    std::vector<int32_t> r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
}

// Canonical representative: minimal over all rotations of w and w^-1,
// preferring fewer inverse letters so the rewriting metric decreases.
std::vector<int32_t> canonical(const std::vector<int32_t>& w) {
    if (w.empty()) return w;
    std::vector<int32_t> best;
    int best_neg = -1;
    auto consider = [&](const std::vector<int32_t>& u) {
        int neg = 0;
        for (int32_t g : u)
            if (g < 0) ++neg;
        for (size_t i = 0; i < u.size(); ++i) {
            std::vector<int32_t> rot(u.begin() + i, u.end());
            rot.insert(rot.end(), u.begin(), u.begin() + i);
            if (best_neg < 0 || neg < best_neg || (neg == best_neg && rot < best)) {
                best = std::move(rot);
                best_neg = neg;
            }
        }
    };
    consider(w);
    consider(inv_letters(w));
    return best;
}

}  // namespace

TraceRing::TraceRing(const std::vector<std::string>& gen_names) {
    ngens_ = static_cast<uint32_t>(gen_names.size());
    if (ngens_ == 0 || ngens_ > 3)
        throw std::invalid_argument("trace coordinates support 1 to 3 generators");
    for (uint32_t size = 1; size <= ngens_; ++size) {
        // enumerate increasing index tuples of the given size
        std::vector<uint32_t> sub(size);
        for (uint32_t i = 0; i < size; ++i) sub[i] = i;
        while (true) {
            subsets_.push_back(sub);
            // next combination
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && sub[i] == ngens_ - size + i) --i;
            if (i < 0) break;
            ++sub[i];
            for (uint32_t j = i + 1; j < size; ++j) sub[j] = sub[j - 1] + 1;
        }
    }
    std::vector<std::string> names;
    for (uint32_t k = 0; k < subsets_.size(); ++k) {
        std::string nm = "I";
        for (uint32_t g : subsets_[k]) nm += gen_names[g];
        names.push_back(nm);
        index_[subsets_[k]] = k;
    }
    ring_ = Ring::lex(names);
}

uint32_t TraceRing::coord(const std::vector<uint32_t>& subset) const {
    auto it = index_.find(subset);
    if (it == index_.end()) throw std::invalid_argument("not a trace coordinate subset");
    return it->second;
}

Poly TraceCalculator::coordinate(const std::vector<int32_t>& sorted_positive) {
    std::vector<uint32_t> sub;
    sub.reserve(sorted_positive.size());
    for (int32_t g : sorted_positive) sub.push_back(static_cast<uint32_t>(g - 1));
    return Poly::variable(tr_.ring(), tr_.coord(sub));
}

Poly TraceCalculator::trace_of_word(const GroupWord& w) {
    for (int32_t g : w.letters)
        if (g == 0 || static_cast<uint32_t>(std::abs(g)) > tr_.ngens())
            throw std::invalid_argument("word letter outside the generating set");
    GroupWord c = cyclic_reduce(w);
    return compute(c.letters);
}

Poly TraceCalculator::compute(const std::vector<int32_t>& w0) {
    const RingPtr& R = tr_.ring();
    GroupWord cr = cyclic_reduce(GroupWord{w0});
    if (cr.letters.empty()) return Poly::constant(R, Rat(2));
    std::vector<int32_t> w = canonical(cr.letters);
    auto hit = memo_.find(w);
    if (hit != memo_.end()) return hit->second;

    const size_t n = w.size();
    Poly result(R);
    auto gen = [&](int32_t g) { return coordinate({std::abs(g)}); };

    if (n == 1) {
        result = gen(w[0]);
        memo_[w] = result;
        return result;
    }

    // adjacent equal pair (cyclically): tr(u g g) = I_g tr(u g) - tr(u)
    for (size_t i = 0; i < n; ++i) {
        size_t j = (i + 1) % n;
        if (w[i] != w[j]) continue;
        std::vector<int32_t> r(w.begin() + (j + 1), w.end());
        r.insert(r.end(), w.begin(), w.begin() + (j + 1));
        std::vector<int32_t> u(r.begin(), r.end() - 2);
        int32_t g = r.back();
        std::vector<int32_t> ug = u;
        ug.push_back(g);
        result = gen(g) * compute(ug) - compute(u);
        memo_[w] = result;
        return result;
    }

    // inverse letter: tr(P g^-1) = tr(P) I_g - tr(P g)
    for (size_t i = 0; i < n; ++i) {
        if (w[i] >= 0) continue;
        std::vector<int32_t> r(w.begin() + (i + 1), w.end());
        r.insert(r.end(), w.begin(), w.begin() + (i + 1));
        std::vector<int32_t> p(r.begin(), r.end() - 1);
        int32_t g = -r.back();
        std::vector<int32_t> pg = p;
        pg.push_back(g);
        result = compute(p) * gen(g) - compute(pg);
        memo_[w] = result;
        return result;
    }

    // repeated positive letter (non-adjacent): w ~ X Y with both starting at
    // the letter: tr(XY) = tr(X) tr(Y) - tr(X Y^-1)
    {
        std::map<int32_t, size_t> seen;
        for (size_t i = 0; i < n; ++i) {
            auto it = seen.find(w[i]);
            if (it != seen.end()) {
                size_t a = it->second, b = i;
                std::vector<int32_t> X(w.begin() + a, w.begin() + b);
                std::vector<int32_t> Y(w.begin() + b, w.end());
                Y.insert(Y.end(), w.begin(), w.begin() + a);
                std::vector<int32_t> XYinv = X;
                auto yi = inv_letters(Y);
                XYinv.insert(XYinv.end(), yi.begin(), yi.end());
                result = compute(X) * compute(Y) - compute(XYinv);
                memo_[w] = result;
                return result;
            }
            seen[w[i]] = i;
        }
    }

    // distinct positive letters
    if (std::is_sorted(w.begin(), w.end())) {
        result = coordinate(w);
        memo_[w] = result;
        return result;
    }

    // adjacent descent: swap with the triple product identity
    for (size_t i = 0; i + 1 < n; ++i) {
        if (w[i] <= w[i + 1]) continue;
        int32_t Y = w[i], Z = w[i + 1];
        std::vector<int32_t> X(w.begin() + (i + 2), w.end());
        X.insert(X.end(), w.begin(), w.begin() + i);
        std::vector<int32_t> swapped(w.begin(), w.begin() + i);
        swapped.push_back(Z);
        swapped.push_back(Y);
        swapped.insert(swapped.end(), w.begin() + (i + 2), w.end());
        auto XZ = X, XY = X;
        XZ.push_back(Z);
        XY.push_back(Y);
        result = -compute(swapped) + gen(Y) * compute(XZ) + gen(Z) * compute(XY) +
                 compute({Y, Z}) * compute(X) - compute(X) * gen(Y) * gen(Z);
        memo_[w] = result;
        return result;
    }
    throw std::logic_error("trace rewriting reached an unreducible word");
}

IdealPresentation character_ideal(const Presentation& pres) {
    if (pres.ngens() > 3)
        throw std::invalid_argument(
            "relator processing supports at most 3 generators; supply the ideal directly");
    TraceRing tr(pres.gen_names);
    TraceCalculator calc(tr);
    IdealPresentation out{tr.ring(), {}};
    for (const auto& r : pres.relators) {
        GroupWord rr = free_reduce(r);
        // V over the empty word and all coordinate words
        std::vector<GroupWord> vs;
        vs.push_back(GroupWord{});
        for (const auto& sub : tr.subsets()) {
            GroupWord v;
            for (uint32_t g : sub) v.letters.push_back(static_cast<int32_t>(g + 1));
            vs.push_back(v);
        }
        for (const auto& v : vs) {
            Poly gen = calc.trace_of_word(concat(rr, v)) - calc.trace_of_word(v);
            if (!gen.is_zero()) out.gens.push_back(std::move(gen));
        }
    }
    return out;
}

Poly slope_trace(const Presentation& pres, const SlopeSpec& slope) {
    TraceRing tr(pres.gen_names);
    TraceCalculator calc(tr);
    return calc.trace_of_word(slope_word(pres, slope));
}

Poly compose(const Poly& p, const RingPtr& target, const std::vector<Poly>& images) {
    if (images.size() != p.ring()->nvars())
        throw std::invalid_argument("compose: one image required per source variable");
    Poly acc(target);
    for (const auto& t : p.terms()) {
        Poly prod = Poly::constant(target, t.coef);
        for (uint32_t v = 0; v < images.size(); ++v)
            for (uint32_t e = 0; e < t.mono[v]; ++e) prod *= images[v];
        acc += prod;
    }
    return acc;
}

}  // namespace tracering
