#ifndef MOULDE_RATFUN_HPP
#define MOULDE_RATFUN_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "moulde/polynomial.hpp"

namespace moulde {

// Thrown when a substitution or evaluation hits a pole.
struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

// Arbitrary total order on polynomials (term maps compared entrywise); only
// used as a map key order.
struct PolyLess {
    bool operator()(const Polynomial& a, const Polynomial& b) const;
};

// Reduced quotient of polynomials with a monic denominator in graded lex.
//
// The denominator is kept as a multiset of monic nonconstant factors. Every
// denominator arising in this calculus is a product of linear forms (pole
// hyperplanes stay linear under the linear substitutions used throughout), so
// cancellation is trial division per factor instead of a general multivariate
// gcd; composite factors (from parsed input or explicit division) fall back to
// poly_gcd splitting. The invariant gcd(num, den) = 1 still holds, and the
// expanded denominator is produced lazily for den(), to_string and equality.
class RationalFunction {
  public:
    RationalFunction() = default;
    RationalFunction(const Rational& c) : num_(c) {}
    RationalFunction(Polynomial num, Polynomial den);
    explicit RationalFunction(Polynomial p) : num_(std::move(p)) {}

    static RationalFunction variable(int var) {
        return RationalFunction(Polynomial::variable(var));
    }

    using FactorMap = std::map<Polynomial, int, PolyLess>;

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const;  // expanded factor product, cached
    const FactorMap& den_factors() const { return fac_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return fac_.empty(); }
    int num_variables() const;

    // deg num - deg den; only meaningful for nonzero values.
    int64_t total_degree() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    bool operator==(const RationalFunction& o) const;

    // Exact substitution x_var := image, then canonicalization. Throws
    // PoleError if the denominator vanishes identically.
    RationalFunction substitute(const std::map<int, Polynomial>& map) const;

    // Throws PoleError if the point lies on a pole.
    Rational evaluate(const std::vector<Rational>& point) const;

    // Canonical text: "(<num>)/(<den>)", the denominator omitted when 1.
    std::string to_string() const;

  private:
    Polynomial num_;
    FactorMap fac_;
    mutable std::shared_ptr<const Polynomial> den_cache_;

    // Cancels num_ against fac_ (restores gcd(num, den) = 1).
    void cancel();
};

// Parses polynomial/rational-function expressions over +, -, *, /, ^,
// parentheses, integer and a/b literals, and variables x1, x2, ...
RationalFunction parse_ratfun(const std::string& text);

}  // namespace moulde

#endif
