#include "moulde/ratfun.hpp"

#include <atomic>
#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

namespace moulde {

bool PolyLess::operator()(const Polynomial& a, const Polynomial& b) const {
    auto ia = a.terms().begin(), ea = a.terms().end();
    auto ib = b.terms().begin(), eb = b.terms().end();
    GradedLexLess exp_less;
    for (; ia != ea && ib != eb; ++ia, ++ib) {
        if (exp_less(ia->first, ib->first)) return true;
        if (exp_less(ib->first, ia->first)) return false;
        int c = cmp(ia->second, ib->second);
        if (c != 0) return c < 0;
    }
    return ia == ea && ib != eb;
}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (den.is_constant()) {
        num_ *= 1 / den.constant_value();
        return;
    }
    Rational lc = den.leading_coefficient();
    if (lc != 1) {
        den *= 1 / lc;
        num_ *= 1 / lc;
    }
    fac_[std::move(den)] = 1;
    cancel();
}

// Divides each factor out of the numerator as far as it goes. Factors that
// only partially overlap the numerator must be composite (monic linear forms
// are irreducible); those are split with poly_gcd and re-examined.
void RationalFunction::cancel() {
    den_cache_.reset();
    if (num_.is_zero()) {
        fac_.clear();
        return;
    }
    std::vector<std::pair<Polynomial, int>> work(fac_.begin(), fac_.end());
    fac_.clear();
    Polynomial q;
    while (!work.empty()) {
        auto [f, m] = std::move(work.back());
        work.pop_back();
        if (f.terms().size() == 1 && f.total_degree() > 1) {
            // Monomial factor: split into its variables.
            const Exponents& e = f.leading_exponents();
            for (size_t j = 0; j < e.size(); ++j)
                if (e[j] > 0)
                    work.emplace_back(Polynomial::variable(static_cast<int>(j) + 1),
                                      m * static_cast<int>(e[j]));
            continue;
        }
        while (m > 0 && Polynomial::try_div_exact(num_, f, q)) {
            num_ = q;
            --m;
        }
        if (m == 0) continue;
        if (f.total_degree() > 1) {
            Polynomial g = poly_gcd(num_, f);
            if (!g.is_constant()) {
                work.emplace_back(Polynomial::div_exact(f, g), m);
                work.emplace_back(std::move(g), m);
                continue;
            }
        }
        fac_[std::move(f)] += m;
    }
}

const Polynomial& RationalFunction::den() const {
    auto p = std::atomic_load(&den_cache_);
    if (!p) {
        Polynomial prod{Rational(1)};
        for (const auto& [f, m] : fac_)
            for (int k = 0; k < m; ++k) prod *= f;
        p = std::make_shared<const Polynomial>(std::move(prod));
        std::shared_ptr<const Polynomial> expected;
        if (!std::atomic_compare_exchange_strong(&den_cache_, &expected, p))
            p = std::atomic_load(&den_cache_);
    }
    return *p;
}

int RationalFunction::num_variables() const {
    int n = num_.num_variables();
    for (const auto& [f, m] : fac_) n = std::max(n, f.num_variables());
    return n;
}

int64_t RationalFunction::total_degree() const {
    int64_t d = num_.total_degree();
    for (const auto& [f, m] : fac_) d -= m * f.total_degree();
    return d;
}

bool RationalFunction::operator==(const RationalFunction& o) const {
    if (!(num_ == o.num_)) return false;
    if (fac_ == o.fac_) return true;
    return den() == o.den();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    RationalFunction r;
    // Least common denominator: per-factor maximum multiplicity; each
    // numerator picks up the complementary factors of the other side.
    Polynomial na = a.num_, nb = b.num_;
    for (const auto& [f, m] : a.fac_) {
        auto it = b.fac_.find(f);
        int mb = it == b.fac_.end() ? 0 : it->second;
        for (int k = mb; k < m; ++k) nb *= f;
        r.fac_[f] = std::max(m, mb);
    }
    for (const auto& [f, m] : b.fac_) {
        auto it = a.fac_.find(f);
        int ma = it == a.fac_.end() ? 0 : it->second;
        for (int k = ma; k < m; ++k) na *= f;
        r.fac_[f] = std::max(m, ma);
    }
    r.num_ = na + nb;
    r.cancel();
    return r;
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    // Cross-cancel before multiplying the numerators to keep them small.
    RationalFunction left, right;
    left.num_ = a.num_;
    left.fac_ = b.fac_;
    left.cancel();
    right.num_ = b.num_;
    right.fac_ = a.fac_;
    right.cancel();
    RationalFunction r;
    r.num_ = left.num_ * right.num_;
    r.fac_ = std::move(left.fac_);
    for (const auto& [f, m] : right.fac_) r.fac_[f] += m;
    r.cancel();
    return r;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    RationalFunction inv;
    inv.num_ = Polynomial{Rational(1)};
    for (const auto& [f, m] : b.fac_)
        for (int k = 0; k < m; ++k) inv.num_ *= f;
    if (b.num_.is_constant()) {
        inv.num_ *= 1 / b.num_.constant_value();
    } else {
        Rational lc = b.num_.leading_coefficient();
        Polynomial d = b.num_;
        d *= 1 / lc;
        inv.num_ *= 1 / lc;
        inv.fac_[std::move(d)] = 1;
        inv.cancel();
    }
    return a * inv;
}

RationalFunction RationalFunction::substitute(const std::map<int, Polynomial>& map) const {
    RationalFunction r;
    r.num_ = num_.substitute(map);
    Rational scale(1);
    for (const auto& [f, m] : fac_) {
        Polynomial img = f.substitute(map);
        if (img.is_zero()) throw PoleError("substitution lands on a pole");
        if (img.is_constant()) {
            for (int k = 0; k < m; ++k) scale /= img.constant_value();
            continue;
        }
        Rational lc = img.leading_coefficient();
        if (lc != 1) {
            img *= 1 / lc;
            for (int k = 0; k < m; ++k) scale /= lc;
        }
        r.fac_[std::move(img)] += m;
    }
    r.num_ *= scale;
    r.cancel();
    return r;
}

Rational RationalFunction::evaluate(const std::vector<Rational>& point) const {
    Rational d(1);
    for (const auto& [f, m] : fac_) {
        Rational v = f.evaluate(point);
        if (v == 0) throw PoleError("evaluation point lies on a pole");
        for (int k = 0; k < m; ++k) d *= v;
    }
    return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << den().to_string() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser.

namespace {

struct Parser {
    const std::string& text;
    size_t pos = 0;

    explicit Parser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos) + " in \"" + text +
                                    "\"");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    RationalFunction parse_expr() {
        RationalFunction r = eat('-') ? -parse_term() : parse_term();
        while (true) {
            if (eat('+'))
                r += parse_term();
            else if (eat('-'))
                r -= parse_term();
            else
                break;
        }
        return r;
    }

    RationalFunction parse_term() {
        RationalFunction r = parse_power();
        while (true) {
            if (eat('*'))
                r *= parse_power();
            else if (eat('/'))
                r /= parse_power();
            else {
                // implicit multiplication: "(x1+1)(x2)" or "2x1"
                char c = peek();
                if (c == '(' || c == 'x')
                    r *= parse_power();
                else
                    break;
            }
        }
        return r;
    }

    RationalFunction parse_power() {
        RationalFunction base = parse_atom();
        if (eat('^')) {
            skip_ws();
            bool neg = eat('-');
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected exponent");
            long e = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                e = e * 10 + (text[pos++] - '0');
            RationalFunction r{Rational(1)};
            for (long k = 0; k < e; ++k) r *= base;
            if (neg) r = RationalFunction{Rational(1)} / r;
            return r;
        }
        return base;
    }

    RationalFunction parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            RationalFunction r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == 'x') {
            ++pos;
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                fail("expected variable index");
            long v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                v = v * 10 + (text[pos++] - '0');
            if (v < 1) fail("variable index must be positive");
            return RationalFunction::variable(static_cast<int>(v));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                digits += text[pos++];
            return RationalFunction{Rational(digits)};
        }
        fail("unexpected character");
    }
};

}  // namespace

RationalFunction parse_ratfun(const std::string& text) {
    Parser p(text);
    RationalFunction r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return r;
}

}  // namespace moulde
