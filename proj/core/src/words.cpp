#include "tracering/words.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace tracering {

GroupWord free_reduce(GroupWord w) {
    std::vector<int32_t> out;
    for (int32_t g : w.letters) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return {std::move(out)};
}

GroupWord cyclic_reduce(GroupWord w) {
    w = free_reduce(std::move(w));
    while (w.letters.size() >= 2 && w.letters.front() == -w.letters.back()) {
        w.letters.erase(w.letters.begin());
        w.letters.pop_back();
        w = free_reduce(std::move(w));
    }
    return w;
}

GroupWord inverse(const GroupWord& w) {
    GroupWord r;
    r.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
    return r;
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
    GroupWord r = a;
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return free_reduce(std::move(r));
}

GroupWord power(const GroupWord& w, long e) {
    GroupWord base = e < 0 ? inverse(w) : w;
    long n = e < 0 ? -e : e;
    GroupWord r;
    for (long i = 0; i < n; ++i) r = concat(r, base);
    return r;
}

GroupWord commutator(const GroupWord& a, const GroupWord& b) {
    return concat(concat(a, b), concat(inverse(a), inverse(b)));
}

namespace {

class WordParser {
  public:
    WordParser(const std::string& s, const std::vector<std::string>& names)
        : s_(s), names_(names) {}

    GroupWord parse() {
        GroupWord w = sequence();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input in word");
        return w;
    }

  private:
    [[noreturn]] void fail(const std::string& m) {
        throw std::invalid_argument(m + " (at offset " + std::to_string(pos_) + ")");
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    GroupWord sequence(char stop = '\0') {
        GroupWord acc;
        while (true) {
            char c = peek();
            if (c == '\0' || c == stop || c == ',' || c == ')' || c == ']') break;
            acc = concat(acc, factor());
        }
        return acc;
    }

    GroupWord factor() {
        GroupWord base = atom();
        while (true) {
            char c = peek();
            if (c == '\'') {
                ++pos_;
                base = inverse(base);
            } else if (c == '^') {
                ++pos_;
                skip_ws();
                bool neg = false;
                if (pos_ < s_.size() && s_[pos_] == '-') {
                    neg = true;
                    ++pos_;
                }
                if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    fail("expected integer exponent");
                long e = 0;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    e = e * 10 + (s_[pos_++] - '0');
                base = power(base, neg ? -e : e);
            } else {
                break;
            }
        }
        return base;
    }

    GroupWord atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            GroupWord w = sequence();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return w;
        }
        if (c == '[') {
            ++pos_;
            GroupWord a = sequence();
            if (peek() != ',') fail("expected ',' in commutator");
            ++pos_;
            GroupWord b = sequence();
            if (peek() != ']') fail("expected ']'");
            ++pos_;
            return commutator(a, b);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                id += s_[pos_++];
            for (uint32_t i = 0; i < names_.size(); ++i)
                if (names_[i] == id) return {{static_cast<int32_t>(i + 1)}};
            fail("unknown generator '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "' in word");
    }

    const std::string& s_;
    const std::vector<std::string>& names_;
    size_t pos_ = 0;
};

}  // namespace

GroupWord parse_word(const std::string& text, const std::vector<std::string>& gen_names) {
    return WordParser(text, gen_names).parse();
}

std::string word_to_string(const GroupWord& w, const std::vector<std::string>& gen_names) {
    if (w.letters.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) os << " ";
        int32_t g = w.letters[i];
        os << gen_names.at(static_cast<size_t>(std::abs(g)) - 1);
        if (g < 0) os << "'";
    }
    return os.str();
}

SlopeSpec::SlopeSpec(long p_, long q_) : p(p_), q(q_) {
    if (p == 0 && q == 0) throw std::invalid_argument("slope (0,0) is not a slope");
    long g = std::gcd(std::abs(p), std::abs(q));
    if (g != 1) throw std::invalid_argument("slope " + std::to_string(p_) + "/" +
                                            std::to_string(q_) + " is not primitive");
    if (q < 0 || (q == 0 && p < 0)) {
        p = -p;
        q = -q;
    }
}

std::string SlopeSpec::str() const {
    return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

GroupWord slope_word(const Presentation& pres, const SlopeSpec& slope) {
    return concat(power(pres.mu, slope.p), power(pres.lambda, slope.q));
}

}  // namespace tracering
