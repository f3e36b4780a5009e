#include "tracering/ring.hpp"

#include <algorithm>

namespace tracering {

Ring::Ring(std::vector<std::string> names, MonomialOrder order, std::optional<NumberField> nf)
    : names_(std::move(names)), order_(std::move(order)), nf_(std::move(nf)) {
    if (order_.priority.size() != names_.size())
        throw std::invalid_argument("monomial order priority must be a permutation of the variables");
    std::vector<bool> seen(names_.size(), false);
    for (uint32_t v : order_.priority) {
        if (v >= names_.size() || seen[v])
            throw std::invalid_argument("monomial order priority must be a permutation of the variables");
        seen[v] = true;
    }
    scan_ = order_.highest_first();
}

RingPtr Ring::make(std::vector<std::string> vars, MonomialOrder order,
                   std::optional<NumberField> nf) {
    return RingPtr(new Ring(std::move(vars), std::move(order), std::move(nf)));
}

RingPtr Ring::lex(std::vector<std::string> vars_lowest_first) {
    MonomialOrder ord;
    ord.kind = OrderKind::Lex;
    ord.priority.resize(vars_lowest_first.size());
    for (uint32_t i = 0; i < vars_lowest_first.size(); ++i) ord.priority[i] = i;
    return make(std::move(vars_lowest_first), std::move(ord));
}

std::optional<uint32_t> Ring::find(const std::string& name) const {
    for (uint32_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

uint32_t Ring::var(const std::string& name) const {
    auto v = find(name);
    if (!v) throw std::invalid_argument("unknown variable: " + name);
    return *v;
}

int Ring::cmp(const Monomial& a, const Monomial& b) const {
    if (order_.kind == OrderKind::GrLex) {
        uint32_t da = mono_degree(a), db = mono_degree(b);
        if (da != db) return da < db ? -1 : 1;
    }
    for (uint32_t v : scan_) {
        if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
    }
    return 0;
}

Monomial Ring::var_mono(uint32_t v, uint32_t e) const {
    Monomial m(nvars(), 0);
    m[v] = e;
    return m;
}

RingPtr Ring::with_order(MonomialOrder order) const {
    return make(names_, std::move(order), nf_);
}

RingPtr Ring::extended(const std::vector<std::string>& extra, MonomialOrder order) const {
    std::vector<std::string> names = names_;
    for (const auto& n : extra) {
        if (find(n)) throw std::invalid_argument("variable already declared: " + n);
        names.push_back(n);
    }
    return make(std::move(names), std::move(order), nf_);
}

RingPtr Ring::extended_below(const std::vector<std::string>& extra) const {
    MonomialOrder ord;
    ord.kind = OrderKind::Lex;
    uint32_t n = static_cast<uint32_t>(nvars());
    for (uint32_t k = 0; k < extra.size(); ++k) ord.priority.push_back(n + k);
    for (uint32_t v : order_.priority) ord.priority.push_back(v);
    return extended(extra, std::move(ord));
}

std::string Ring::fresh_name(std::string want) const {
    while (find(want)) want += "_";
    return want;
}

}  // namespace tracering
