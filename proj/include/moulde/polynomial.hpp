#ifndef MOULDE_POLYNOMIAL_HPP
#define MOULDE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moulde/rational.hpp"

namespace moulde {

// Exponent vector; entry j is the exponent of x_{j+1}. Canonical form has no
// trailing zeros.
using Exponents = std::vector<uint32_t>;

inline int64_t exponents_degree(const Exponents& e) {
    int64_t d = 0;
    for (uint32_t k : e) d += k;
    return d;
}

// Graded lexicographic order with x_1 < x_2 < ...: compare total degree
// first, then exponents from the highest variable index down.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over Q. No zero coefficients are stored.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, Rational, GradedLexLess>;

    Polynomial() = default;
    explicit Polynomial(const Rational& c);
    // The monomial c * x_{var}^power, variables indexed from 1.
    static Polynomial monomial(const Rational& c, int var, uint32_t power = 1);
    static Polynomial variable(int var) { return monomial(Rational(1), var); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero polynomial included); throws if non-constant.
    Rational constant_value() const;

    const TermMap& terms() const { return terms_; }
    // Number of variables actually referenced (max index).
    int num_variables() const;
    int64_t total_degree() const;  // degree of 0 is reported as 0
    int64_t degree_in(int var) const;

    // Leading term with respect to graded lex.
    const Rational& leading_coefficient() const;
    const Exponents& leading_exponents() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    // Exact division; throws std::domain_error if b does not divide a.
    static Polynomial div_exact(const Polynomial& a, const Polynomial& b);

    // Exact-division attempt; returns false (leaving quotient unspecified)
    // when b does not divide a.
    static bool try_div_exact(const Polynomial& a, const Polynomial& b, Polynomial& quotient);

    // Substitutes x_{var} := image for every entry of the map; unmapped
    // variables stay fixed.
    Polynomial substitute(const std::map<int, Polynomial>& map) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    std::string to_string() const;

    void add_term(const Exponents& e, const Rational& c);

  private:
    TermMap terms_;
};

// Monic (leading coefficient 1) greatest common divisor.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

}  // namespace moulde

#endif
