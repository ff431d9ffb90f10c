#include "moulde/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace moulde {

namespace {

void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

uint32_t exp_at(const Exponents& e, size_t j) { return j < e.size() ? e[j] : 0; }

}  // namespace

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    int64_t da = exponents_degree(a), db = exponents_degree(b);
    if (da != db) return da < db;
    size_t n = std::max(a.size(), b.size());
    for (size_t j = n; j-- > 0;) {
        uint32_t ea = exp_at(a, j), eb = exp_at(b, j);
        if (ea != eb) return ea < eb;
    }
    return false;
}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial Polynomial::monomial(const Rational& c, int var, uint32_t power) {
    assert(var >= 1);
    Polynomial p;
    if (c == 0) return p;
    Exponents e;
    if (power > 0) {
        e.assign(static_cast<size_t>(var), 0);
        e[static_cast<size_t>(var) - 1] = power;
    }
    p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Polynomial::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return terms_.begin()->second;
}

int Polynomial::num_variables() const {
    size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return static_cast<int>(n);
}

int64_t Polynomial::total_degree() const {
    if (terms_.empty()) return 0;
    return exponents_degree(terms_.rbegin()->first);
}

int64_t Polynomial::degree_in(int var) const {
    int64_t d = 0;
    for (const auto& [e, c] : terms_)
        d = std::max<int64_t>(d, exp_at(e, static_cast<size_t>(var) - 1));
    return d;
}

const Rational& Polynomial::leading_coefficient() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->second;
}

const Exponents& Polynomial::leading_exponents() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    return terms_.rbegin()->first;
}

void Polynomial::add_term(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    Exponents key = e;
    trim(key);
    auto [it, inserted] = terms_.emplace(std::move(key), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    Exponents e;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            e.assign(std::max(ea.size(), eb.size()), 0);
            for (size_t j = 0; j < e.size(); ++j) e[j] = exp_at(ea, j) + exp_at(eb, j);
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::div_exact(const Polynomial& a, const Polynomial& b) {
    Polynomial q;
    if (!try_div_exact(a, b, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

// If a = h*b then at every step the leading term of the running remainder is
// a multiple of b's leading term, so the first failure proves inexactness.
bool Polynomial::try_div_exact(const Polynomial& a, const Polynomial& b, Polynomial& quotient) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (b.is_constant()) {
        quotient = a;
        quotient *= 1 / b.constant_value();
        return true;
    }
    Polynomial rem = a, quot;
    const Exponents& lb = b.leading_exponents();
    const Rational& cb = b.leading_coefficient();
    while (!rem.is_zero()) {
        const Exponents& la = rem.leading_exponents();
        Exponents qe(std::max(la.size(), lb.size()), 0);
        for (size_t j = 0; j < qe.size(); ++j) {
            uint32_t ea = exp_at(la, j), eb = exp_at(lb, j);
            if (ea < eb) return false;
            qe[j] = ea - eb;
        }
        Polynomial t;
        t.add_term(qe, rem.leading_coefficient() / cb);
        quot += t;
        rem -= t * b;
    }
    quotient = std::move(quot);
    return true;
}

Polynomial Polynomial::substitute(const std::map<int, Polynomial>& map) const {
    Polynomial result;
    for (const auto& [e, c] : terms_) {
        Polynomial t{c};
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            auto it = map.find(static_cast<int>(j) + 1);
            if (it == map.end()) {
                t *= Polynomial::monomial(Rational(1), static_cast<int>(j) + 1, e[j]);
            } else {
                for (uint32_t k = 0; k < e[j]; ++k) t *= it->second;
            }
        }
        result += t;
    }
    return result;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    Rational sum(0);
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (j >= point.size()) throw std::invalid_argument("evaluation point too short");
            for (uint32_t k = 0; k < e[j]; ++k) v *= point[j];
        }
        sum += v;
    }
    return sum;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = !e.empty();
        if (a != 1 || !has_vars) {
            os << a.get_str();
            if (has_vars) os << "*";
        }
        bool star = false;
        for (size_t j = 0; j < e.size(); ++j) {
            if (e[j] == 0) continue;
            if (star) os << "*";
            os << "x" << (j + 1);
            if (e[j] > 1) os << "^" << e[j];
            star = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// GCD: monomial content, then recursive content-and-PRS with a univariate
// evaluation shortcut for the (common) coprime case.

namespace {

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    Polynomial q = p;
    q *= 1 / p.leading_coefficient();
    return q;
}

// Per-variable minimum exponents over all terms.
Exponents monomial_content(const Polynomial& p) {
    Exponents m;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (first) {
            m = e;
            first = false;
        } else {
            m.resize(std::min(m.size(), e.size()));
            for (size_t j = 0; j < m.size(); ++j) m[j] = std::min(m[j], e[j]);
        }
        if (m.empty()) break;
    }
    trim(m);
    return m;
}

Polynomial exponents_to_poly(const Exponents& e) {
    Polynomial p{Rational(1)};
    for (size_t j = 0; j < e.size(); ++j)
        if (e[j] > 0) p *= Polynomial::monomial(Rational(1), static_cast<int>(j) + 1, e[j]);
    return p;
}

// Coefficients of p viewed as a univariate polynomial in x_var; the
// coefficient polynomials do not involve x_var.
std::vector<Polynomial> univariate_view(const Polynomial& p, int var) {
    std::vector<Polynomial> coeffs(static_cast<size_t>(p.degree_in(var)) + 1);
    size_t vj = static_cast<size_t>(var) - 1;
    for (const auto& [e, c] : p.terms()) {
        uint32_t d = exp_at(e, vj);
        Exponents rest = e;
        if (vj < rest.size()) rest[vj] = 0;
        coeffs[d].add_term(rest, c);
    }
    return coeffs;
}

Polynomial from_univariate(const std::vector<Polynomial>& coeffs, int var) {
    Polynomial p;
    for (size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d].is_zero()) continue;
        Polynomial pw = d == 0 ? Polynomial{Rational(1)}
                               : Polynomial::monomial(Rational(1), var, static_cast<uint32_t>(d));
        p += coeffs[d] * pw;
    }
    return p;
}

void normalize_univariate(std::vector<Polynomial>& c) {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

Polynomial coefficient_content(const std::vector<Polynomial>& coeffs) {
    Polynomial g;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? make_monic(c) : poly_gcd(g, c);
        if (g.is_constant()) return Polynomial{Rational(1)};
    }
    return g.is_zero() ? Polynomial{Rational(1)} : g;
}

// Pseudo-remainder of univariate views; modifies nothing.
std::vector<Polynomial> pseudo_remainder(std::vector<Polynomial> u, const std::vector<Polynomial>& v) {
    const Polynomial& lv = v.back();
    while (u.size() >= v.size()) {
        Polynomial lu = u.back();
        size_t shift = u.size() - v.size();
        for (auto& c : u) c = c * lv;
        for (size_t j = 0; j < v.size(); ++j) u[j + shift] -= lu * v[j];
        normalize_univariate(u);
        if (u.empty()) break;
    }
    return u;
}

int highest_common_variable(const Polynomial& a, const Polynomial& b) {
    int n = std::min(a.num_variables(), b.num_variables());
    for (int v = n; v >= 1; --v)
        if (a.degree_in(v) > 0 && b.degree_in(v) > 0) return v;
    return 0;
}

std::vector<Rational> rationals_of(const std::vector<long>& v) {
    std::vector<Rational> r;
    r.reserve(v.size());
    for (long x : v) r.emplace_back(x);
    return r;
}

// Univariate image of p in x_var with all other variables set to point.
std::vector<Rational> evaluate_to_univariate(const Polynomial& p, int var,
                                             const std::vector<Rational>& point) {
    std::vector<Rational> c(static_cast<size_t>(p.degree_in(var)) + 1, Rational(0));
    size_t vj = static_cast<size_t>(var) - 1;
    for (const auto& [e, coeff] : p.terms()) {
        Rational v = coeff;
        for (size_t j = 0; j < e.size(); ++j) {
            if (j == vj || e[j] == 0) continue;
            for (uint32_t k = 0; k < e[j]; ++k) v *= point[j];
        }
        c[exp_at(e, vj)] += v;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

size_t univariate_gcd_degree(std::vector<Rational> u, std::vector<Rational> v) {
    auto norm = [](std::vector<Rational>& p) {
        while (!p.empty() && p.back() == 0) p.pop_back();
    };
    norm(u);
    norm(v);
    while (!v.empty()) {
        // u mod v
        while (u.size() >= v.size()) {
            Rational q = u.back() / v.back();
            size_t shift = u.size() - v.size();
            for (size_t j = 0; j < v.size(); ++j) u[j + shift] -= q * v[j];
            norm(u);
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return u.empty() ? 0 : u.size() - 1;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial{Rational(1)};

    Exponents ma = monomial_content(a), mb = monomial_content(b);
    Exponents mc(std::min(ma.size(), mb.size()), 0);
    for (size_t j = 0; j < mc.size(); ++j) mc[j] = std::min(ma[j], mb[j]);
    trim(mc);
    Polynomial pa = ma.empty() ? a : Polynomial::div_exact(a, exponents_to_poly(ma));
    Polynomial pb = mb.empty() ? b : Polynomial::div_exact(b, exponents_to_poly(mb));
    Polynomial common = exponents_to_poly(mc);

    if (pa.is_constant() || pb.is_constant()) return make_monic(common);

    int v = highest_common_variable(pa, pb);
    if (v == 0) return make_monic(common);

    std::vector<Polynomial> ua = univariate_view(pa, v), ub = univariate_view(pb, v);
    Polynomial ca = coefficient_content(ua), cb = coefficient_content(ub);
    Polynomial cont = poly_gcd(ca, cb);
    if (!ca.is_constant())
        for (auto& c : ua) c = Polynomial::div_exact(c, ca);
    if (!cb.is_constant())
        for (auto& c : ub) c = Polynomial::div_exact(c, cb);

    // Coprimality shortcut: specialize all variables but x_v at a point where
    // the leading coefficient of ua survives; if the univariate images are
    // coprime, the primitive parts share no factor involving x_v.
    {
        size_t nv = static_cast<size_t>(std::max(pa.num_variables(), pb.num_variables()));
        const Polynomial& lead = ua.back();
        static const std::vector<std::vector<long>> trials = {
            {3, 5, 7, 11, 13, 17, 19, 23}, {2, 9, 4, 25, 6, 49, 8, 27}, {13, 3, 31, 5, 43, 7, 61, 11}};
        for (const auto& t : trials) {
            std::vector<Rational> point = rationals_of(t);
            point.resize(std::max(point.size(), nv), Rational(1));
            std::vector<Rational> lead_pt(point.begin(), point.end());
            if (lead.evaluate(lead_pt) == 0) continue;
            size_t d = univariate_gcd_degree(evaluate_to_univariate(pa, v, point),
                                             evaluate_to_univariate(pb, v, point));
            if (d == 0) return make_monic(cont * common);
            break;
        }
    }

    // Primitive PRS in x_v.
    std::vector<Polynomial>&u = ua.size() >= ub.size() ? ua : ub, &w = ua.size() >= ub.size() ? ub : ua;
    while (true) {
        std::vector<Polynomial> r = pseudo_remainder(u, w);
        if (r.empty()) break;
        Polynomial cr = coefficient_content(r);
        if (!cr.is_constant())
            for (auto& c : r) c = Polynomial::div_exact(c, cr);
        u = std::move(w);
        w = std::move(r);
    }
    if (w.size() <= 1) return make_monic(cont * common);
    return make_monic(cont * common * from_univariate(w, v));
}

}  // namespace moulde
