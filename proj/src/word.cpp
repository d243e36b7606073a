#include "operadkit/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace operadkit {

namespace {

void check_gamma(int gamma) {
    if (gamma < 0 || gamma > kMaxGamma)
        throw std::invalid_argument("gamma out of range [0," + std::to_string(kMaxGamma) + "]");
}

int count_zeros(const GammaWord& w) {
    return static_cast<int>(std::count(w.letters.begin(), w.letters.end(), 0));
}

}  // namespace

GammaWord::GammaWord(int g, std::vector<std::uint8_t> ls) : gamma(g), letters(std::move(ls)) {
    check_gamma(g);
    if (letters.empty()) throw std::invalid_argument("empty word");
    for (auto l : letters)
        if (l > gamma) throw std::invalid_argument("letter exceeds gamma");
}

GammaWord::GammaWord(int g, std::initializer_list<int> ls) : gamma(g) {
    check_gamma(g);
    if (ls.size() == 0) throw std::invalid_argument("empty word");
    letters.reserve(ls.size());
    for (int l : ls) {
        if (l < 0 || l > gamma) throw std::invalid_argument("letter out of range");
        letters.push_back(static_cast<std::uint8_t>(l));
    }
}

bool is_dias_element(const GammaWord& w) { return count_zeros(w) == 1; }

bool is_trias_element(const GammaWord& w) { return count_zeros(w) >= 1; }

GammaWord tm_compose(const GammaWord& u, int i, const GammaWord& v) {
    if (u.gamma != v.gamma) throw std::invalid_argument("gamma mismatch");
    if (i < 1 || i > u.arity()) throw std::invalid_argument("position out of range");
    GammaWord r;
    r.gamma = u.gamma;
    r.letters.reserve(static_cast<std::size_t>(u.arity() + v.arity() - 1));
    const std::uint8_t ui = u.letters[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k < i - 1; ++k) r.letters.push_back(u.letters[static_cast<std::size_t>(k)]);
    for (auto vl : v.letters) r.letters.push_back(std::max(ui, vl));
    for (int k = i; k < u.arity(); ++k) r.letters.push_back(u.letters[static_cast<std::size_t>(k)]);
    return r;
}

GammaWord tm_compose_all(const GammaWord& u, const std::vector<GammaWord>& vs) {
    if (static_cast<int>(vs.size()) != u.arity())
        throw std::invalid_argument("need one operand per position");
    GammaWord r = u;
    for (int i = u.arity(); i >= 1; --i) r = tm_compose(r, i, vs[static_cast<std::size_t>(i - 1)]);
    return r;
}

GammaWord mirror(const GammaWord& w) {
    GammaWord r = w;
    std::reverse(r.letters.begin(), r.letters.end());
    return r;
}

int root_position(const GammaWord& w) {
    if (!is_dias_element(w)) throw std::invalid_argument("word is not a pluriassociative element");
    for (int i = 1; i <= w.arity(); ++i)
        if (w.letter(i) == 0) return i;
    return 0;  // unreachable
}

std::vector<GammaWord> enumerate_words(WordFamily family, int gamma, int n) {
    check_gamma(gamma);
    if (n < 1) throw std::invalid_argument("arity must be >= 1");
    std::vector<GammaWord> out;
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
    const int need = family == WordFamily::Dias ? 1 : -1;  // -1: at least one zero
    // Lexicographic by construction: letters tried in increasing order.
    auto rec = [&](auto&& self, int pos, int zeros) -> void {
        if (pos == n) {
            if (need < 0 ? zeros >= 1 : zeros == need) out.emplace_back(gamma, cur);
            return;
        }
        for (int l = 0; l <= gamma; ++l) {
            int z = zeros + (l == 0 ? 1 : 0);
            if (need == 1 && z > 1) continue;
            cur[static_cast<std::size_t>(pos)] = static_cast<std::uint8_t>(l);
            self(self, pos + 1, z);
        }
    };
    rec(rec, 0, 0);
    return out;
}

void WordLinComb::add(const GammaWord& w, const Rat& c) {
    if (sgn(c) == 0) return;
    auto it = terms.find(w);
    if (it == terms.end()) {
        terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
}

WordLinComb operator+(WordLinComb a, const WordLinComb& b) {
    for (const auto& [w, c] : b.terms) a.add(w, c);
    return a;
}

WordLinComb operator-(WordLinComb a, const WordLinComb& b) {
    for (const auto& [w, c] : b.terms) a.add(w, -c);
    return a;
}

WordLinComb operator*(const Rat& c, WordLinComb a) {
    if (sgn(c) == 0) return WordLinComb{a.gamma, {}};
    for (auto& [w, v] : a.terms) v *= c;
    return a;
}

WordLinComb kbasis_expand(const GammaWord& x) {
    if (!is_dias_element(x)) throw std::invalid_argument("K-basis index must be a pluriassociative word");
    std::vector<int> movable;  // positions with letter in [1, gamma-1]
    for (int i = 1; i <= x.arity(); ++i)
        if (x.letter(i) >= 1 && x.letter(i) < x.gamma) movable.push_back(i);
    WordLinComb out;
    out.gamma = x.gamma;
    const std::size_t m = movable.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        GammaWord w = x;
        int ham = 0;
        for (std::size_t b = 0; b < m; ++b)
            if (mask & (std::size_t{1} << b)) {
                ++w.letters[static_cast<std::size_t>(movable[b] - 1)];
                ++ham;
            }
        out.add(w, (ham % 2 == 0) ? Rat(1) : Rat(-1));
    }
    return out;
}

WordLinComb kbasis_contract(const GammaWord& x) {
    if (!is_dias_element(x)) throw std::invalid_argument("not a pluriassociative word");
    // x = sum of K_{x'} over all x' >= x letterwise (zero stays put).
    WordLinComb out;
    out.gamma = x.gamma;
    GammaWord w = x;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos > x.arity()) {
            out.add(w, Rat(1));
            return;
        }
        if (x.letter(pos) == 0) {
            self(self, pos + 1);
            return;
        }
        for (int l = x.letter(pos); l <= x.gamma; ++l) {
            w.letters[static_cast<std::size_t>(pos - 1)] = static_cast<std::uint8_t>(l);
            self(self, pos + 1);
        }
        w.letters[static_cast<std::size_t>(pos - 1)] = x.letters[static_cast<std::size_t>(pos - 1)];
    };
    rec(rec, 1);
    return out;
}

WordLinComb kbasis_contract(const WordLinComb& c) {
    WordLinComb out;
    out.gamma = c.gamma;
    for (const auto& [w, coef] : c.terms) out = out + coef * kbasis_contract(w);
    return out;
}

WordLinComb kbasis_compose(const GammaWord& x, int i, const GammaWord& y) {
    if (x.gamma != y.gamma) throw std::invalid_argument("gamma mismatch");
    if (!is_dias_element(x) || !is_dias_element(y))
        throw std::invalid_argument("K-basis indices must be pluriassociative words");
    if (x.arity() < 2 || y.arity() < 2) throw std::invalid_argument("arity must be >= 2");
    if (i < 1 || i > x.arity()) throw std::invalid_argument("position out of range");

    int min_y = 0;  // least nonzero letter of y
    for (int j = 1; j <= y.arity(); ++j)
        if (y.letter(j) != 0 && (min_y == 0 || y.letter(j) < min_y)) min_y = y.letter(j);

    WordLinComb out;
    out.gamma = x.gamma;
    const int xi = x.letter(i);
    if (min_y > xi) {
        out.add(tm_compose(x, i, y), Rat(1));
    } else if (min_y == xi) {
        // xi != 0 here since min_y >= 1. The zero inherited from y sits at
        // offset i-1+root(y) in the composite; it is replaced by each a in [xi, gamma].
        GammaWord base = tm_compose(x, i, y);
        const int zero_at = i - 1 + root_position(y);
        for (int a = xi; a <= x.gamma; ++a) {
            GammaWord w = base;
            w.letters[static_cast<std::size_t>(zero_at - 1)] = static_cast<std::uint8_t>(a);
            out.add(w, Rat(1));
        }
    }
    // min_y < xi: zero.
    return out;
}

std::string to_string(const GammaWord& w) {
    std::ostringstream os;
    if (w.gamma <= 9) {
        for (auto l : w.letters) os << int(l);
    } else {
        for (std::size_t k = 0; k < w.letters.size(); ++k) {
            if (k) os << ',';
            os << int(w.letters[k]);
        }
    }
    return os.str();
}

GammaWord parse_word(int gamma, const std::string& text) {
    check_gamma(gamma);
    if (text.empty()) throw std::invalid_argument("empty word");
    std::vector<std::uint8_t> ls;
    if (text.find(',') != std::string::npos) {
        std::istringstream is(text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("bad word literal: " + text);
            int v = std::stoi(tok);
            if (v < 0 || v > gamma) throw std::invalid_argument("letter out of range in: " + text);
            ls.push_back(static_cast<std::uint8_t>(v));
        }
    } else {
        if (gamma > 9)
            throw std::invalid_argument("ambiguous digit string for gamma > 9, use commas: " + text);
        for (char ch : text) {
            if (ch < '0' || ch > '9') throw std::invalid_argument("bad word literal: " + text);
            int v = ch - '0';
            if (v > gamma) throw std::invalid_argument("letter out of range in: " + text);
            ls.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return GammaWord(gamma, std::move(ls));
}

}  // namespace operadkit
