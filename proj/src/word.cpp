#include "moulde/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace moulde {

Word reverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

std::string word_to_string(const Word& w) {
    if (w.empty()) return "e";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ";
        os << "x" << w[i];
    }
    return os.str();
}

void WordSum::add(const Word& w, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordSum& WordSum::operator+=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordSum& WordSum::operator-=(const WordSum& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

WordSum& WordSum::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

WordSum WordSum::prepend(int n) const {
    WordSum r;
    for (const auto& [w, c] : terms_) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(n);
        nw.insert(nw.end(), w.begin(), w.end());
        r.terms_.emplace(std::move(nw), c);
    }
    return r;
}

std::string WordSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*[" << word_to_string(w) << "]";
    }
    return os.str();
}

WordSum shuffle(const Word& u, const Word& v) {
    if (u.empty()) return WordSum(v);
    if (v.empty()) return WordSum(u);
    Word u1(u.begin() + 1, u.end()), v1(v.begin() + 1, v.end());
    WordSum r = shuffle(u1, v).prepend(u.front());
    r += shuffle(u, v1).prepend(v.front());
    return r;
}

WordSum stuffle(const Word& u, const Word& v) {
    if (u.empty()) return WordSum(v);
    if (v.empty()) return WordSum(u);
    int n = u.front(), m = v.front();
    if (n == m) return WordSum();
    Word u1(u.begin() + 1, u.end()), v1(v.begin() + 1, v.end());
    WordSum r = stuffle(u1, v).prepend(n);
    r += stuffle(u, v1).prepend(m);
    // polar contraction, expanded: (x_n - x_m as letters) / (x_n - x_m)
    RationalFunction polar(Polynomial{Rational(1)},
                           Polynomial::variable(n) - Polynomial::variable(m));
    WordSum rest = stuffle(u1, v1);
    r += rest.prepend(n) * polar;
    r += rest.prepend(m) * (-polar);
    return r;
}

namespace {

template <typename F>
WordSum bilinear(const WordSum& u, const WordSum& v, F&& word_product) {
    WordSum r;
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) r += word_product(wu, wv) * (cu * cv);
    return r;
}

}  // namespace

WordSum shuffle(const WordSum& u, const WordSum& v) {
    return bilinear(u, v, [](const Word& a, const Word& b) { return shuffle(a, b); });
}

WordSum stuffle(const WordSum& u, const WordSum& v) {
    return bilinear(u, v, [](const Word& a, const Word& b) { return stuffle(a, b); });
}

WordSum reverse_sum(const WordSum& s) {
    WordSum r;
    for (const auto& [w, c] : s.terms()) r.add(reverse(w), c);
    return r;
}

// ---------------------------------------------------------------------------
// Parsing.

namespace {

struct WordParser {
    const std::string& text;
    size_t pos = 0;

    explicit WordParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool is_letter_ahead() {
        skip_ws();
        return pos + 1 < text.size() && text[pos] == 'x' &&
               std::isdigit(static_cast<unsigned char>(text[pos + 1]));
    }

    int parse_letter() {
        skip_ws();
        if (!is_letter_ahead()) fail("expected letter x<n>");
        pos += 1;
        long n = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            n = n * 10 + (text[pos++] - '0');
        if (n < 1) fail("letter index must be positive");
        return static_cast<int>(n);
    }

    Word parse_word_body() {
        skip_ws();
        if (peek() == 'e' && !is_letter_ahead()) {
            ++pos;
            return Word{};
        }
        Word w;
        while (is_letter_ahead()) w.push_back(parse_letter());
        if (w.empty()) fail("expected word");
        return w;
    }

    // A factor is either a word or a scalar coefficient (number or
    // parenthesized rational-function expression).
    struct Factor {
        bool is_scalar;
        RationalFunction scalar;
        WordSum sum;
    };

    Factor parse_factor() {
        skip_ws();
        char c = peek();
        if (c == 'x' || (c == 'e' && !is_letter_ahead())) {
            return Factor{false, RationalFunction(), WordSum(parse_word_body())};
        }
        if (c == '(') {
            size_t depth = 0, start = pos;
            size_t i = pos;
            for (; i < text.size(); ++i) {
                if (text[i] == '(') ++depth;
                if (text[i] == ')' && --depth == 0) break;
            }
            if (i >= text.size()) fail("unbalanced parentheses");
            std::string inner = text.substr(start + 1, i - start - 1);
            pos = i + 1;
            return Factor{true, parse_ratfun(inner), WordSum()};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string lit;
            while (pos < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/'))
                lit += text[pos++];
            return Factor{true, RationalFunction{parse_rational(lit)}, WordSum()};
        }
        fail("syntax error");
    }

    // 0 = none, 1 = stuffle '*', 2 = shuffle "sh"/"#"
    int parse_op() {
        skip_ws();
        if (pos < text.size() && text[pos] == '*') {
            ++pos;
            return 1;
        }
        if (pos < text.size() && text[pos] == '#') {
            ++pos;
            return 2;
        }
        if (pos + 1 < text.size() && text[pos] == 's' && text[pos + 1] == 'h' &&
            (pos + 2 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[pos + 2])))) {
            pos += 2;
            return 2;
        }
        return 0;
    }

    WordSum parse_term() {
        Factor acc = parse_factor();
        while (true) {
            int op = parse_op();
            if (op == 0) break;
            Factor rhs = parse_factor();
            if (acc.is_scalar && rhs.is_scalar) {
                acc.scalar *= rhs.scalar;
            } else if (acc.is_scalar) {
                acc = Factor{false, RationalFunction(), rhs.sum * acc.scalar};
            } else if (rhs.is_scalar) {
                acc.sum *= rhs.scalar;
            } else {
                acc.sum = op == 1 ? stuffle(acc.sum, rhs.sum) : shuffle(acc.sum, rhs.sum);
            }
        }
        if (acc.is_scalar) fail("term without a word");
        return acc.sum;
    }

    WordSum parse_sum() {
        WordSum r;
        bool neg = false;
        if (peek() == '-') {
            ++pos;
            neg = true;
        }
        WordSum t = parse_term();
        r += neg ? t * RationalFunction{Rational(-1)} : t;
        while (!at_end()) {
            char c = peek();
            if (c == '+')
                neg = false;
            else if (c == '-')
                neg = true;
            else
                fail("syntax error");
            ++pos;
            t = parse_term();
            r += neg ? t * RationalFunction{Rational(-1)} : t;
        }
        return r;
    }
};

}  // namespace

Word parse_word(const std::string& text) {
    WordParser p(text);
    Word w = p.parse_word_body();
    if (!p.at_end()) p.fail("syntax error");
    return w;
}

WordSum parse_wordsum(const std::string& text) {
    WordParser p(text);
    return p.parse_sum();
}

}  // namespace moulde
