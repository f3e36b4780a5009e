#pragma once

#include <string>
#include <vector>

#include "tracering/rational.hpp"

namespace tracering {

// Freely reduced word in a finitely generated free group. Letters are
// 1-based generator indices, negative for inverses.
struct GroupWord {
    std::vector<int32_t> letters;

    bool operator==(const GroupWord& o) const { return letters == o.letters; }
    size_t length() const { return letters.size(); }
};

GroupWord free_reduce(GroupWord w);
GroupWord cyclic_reduce(GroupWord w);
GroupWord inverse(const GroupWord& w);
GroupWord concat(const GroupWord& a, const GroupWord& b);  // freely reduced
GroupWord power(const GroupWord& w, long e);
GroupWord commutator(const GroupWord& a, const GroupWord& b);

// Word grammar: generators are identifiers, `'` is inverse, `^k` and `^-k`
// are powers, juxtaposition (whitespace or none between tokens) is product,
// parentheses group, `[a,b]` is the commutator a b a^-1 b^-1.
GroupWord parse_word(const std::string& text, const std::vector<std::string>& gen_names);

std::string word_to_string(const GroupWord& w, const std::vector<std::string>& gen_names);

struct Presentation {
    std::vector<std::string> gen_names;
    std::vector<GroupWord> relators;   // freely reduced
    GroupWord mu, lambda;              // peripheral basis words

    uint32_t ngens() const { return static_cast<uint32_t>(gen_names.size()); }
};

// Primitive slope (p, q), identified with (-p, -q). Canonical form has
// q > 0, or q == 0 and p > 0.
struct SlopeSpec {
    long p = 1, q = 0;

    SlopeSpec() = default;
    SlopeSpec(long p_, long q_);  // normalizes; throws on non-coprime or (0,0)

    bool operator==(const SlopeSpec& o) const { return p == o.p && q == o.q; }
    bool operator<(const SlopeSpec& o) const { return std::pair(q, p) < std::pair(o.q, o.p); }
    std::string str() const;
};

// the word mu^p lambda^q
GroupWord slope_word(const Presentation& pres, const SlopeSpec& slope);

}  // namespace tracering
