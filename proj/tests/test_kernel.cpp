#include <doctest.h>

#include <random>

#include "moulde/bernoulli.hpp"
#include "moulde/ratfun.hpp"

using namespace moulde;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int vars, int max_terms) {
    Polynomial p;
    int terms = 1 + static_cast<int>(rng() % static_cast<uint64_t>(max_terms));
    for (int t = 0; t < terms; ++t) {
        Polynomial mono{random_rational(rng, 9)};
        for (int v = 1; v <= vars; ++v) {
            uint32_t e = static_cast<uint32_t>(rng() % 3);
            if (e) mono *= Polynomial::monomial(Rational(1), v, e);
        }
        p += mono;
    }
    return p;
}

RationalFunction random_ratfun(std::mt19937_64& rng, int vars) {
    Polynomial den = random_poly(rng, vars, 2);
    while (den.is_zero()) den = random_poly(rng, vars, 2);
    return RationalFunction(random_poly(rng, vars, 3), den);
}

std::vector<Rational> random_point(std::mt19937_64& rng, int vars) {
    std::vector<Rational> p;
    for (int v = 0; v < vars; ++v) p.push_back(random_rational(rng, 97));
    return p;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(to_string(rat(-2, 6)) == "-1/3");
    CHECK_THROWS(parse_rational("3/0"));
}

TEST_CASE("polynomial ring laws (seeded)") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 40; ++k) {
        Polynomial a = random_poly(rng, 3, 3), b = random_poly(rng, 3, 3),
                   c = random_poly(rng, 3, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Polynomial());
        if (!b.is_zero()) CHECK(Polynomial::div_exact(a * b, b) == a);
    }
}

TEST_CASE("polynomial exact division failure is detected") {
    Polynomial x1 = Polynomial::variable(1), x2 = Polynomial::variable(2);
    Polynomial q;
    CHECK_FALSE(Polynomial::try_div_exact(x1 + x2, x1, q));
    CHECK(Polynomial::try_div_exact((x1 + x2) * x1, x1, q));
    CHECK(q == x1 + x2);
    CHECK_THROWS_AS(Polynomial::div_exact(x1, x2), std::domain_error);
}

TEST_CASE("poly_gcd on shared factors") {
    std::mt19937_64 rng(7);
    Polynomial x1 = Polynomial::variable(1), x2 = Polynomial::variable(2);
    Polynomial g = x1 + x2;
    Polynomial a = g * (x1 - x2), b = g * (x1 * x2 + Polynomial{Rational(1)});
    Polynomial d = poly_gcd(a, b);
    CHECK(d == g);  // monic already
    CHECK(poly_gcd(x1, x2).is_constant());
}

TEST_CASE("rational function field laws (seeded)") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 25; ++k) {
        RationalFunction a = random_ratfun(rng, 3), b = random_ratfun(rng, 3),
                         c = random_ratfun(rng, 3);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RationalFunction());
        CHECK(a + RationalFunction() == a);
        if (!a.is_zero()) CHECK(a / a == RationalFunction{Rational(1)});
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("canonical form: reduced, monic denominator, idempotent printing") {
    RationalFunction f = parse_ratfun("(x1^2 - x2^2)/(2*x1 + 2*x2)");
    CHECK(f.is_polynomial());
    CHECK(f.to_string() == "-1/2*x2 + 1/2*x1");
    RationalFunction g = parse_ratfun("(x1)/(3*x2)");
    CHECK(g.den().leading_coefficient() == 1);
    CHECK(g.to_string() == "(1/3*x1)/(x2)");
    for (const char* text : {"(x1 - x2)/(x1*x2)", "x1^2 + 1/2", "(2)/(x1^2)"}) {
        std::string once = parse_ratfun(text).to_string();
        CHECK(parse_ratfun(once).to_string() == once);
    }
}

TEST_CASE("substitution and evaluation agree; poles throw") {
    RationalFunction f = parse_ratfun("(x1 + x2)/(x1 - x2)");
    CHECK_THROWS_AS(f.substitute({{1, Polynomial::variable(2)}}), PoleError);
    CHECK_THROWS_AS(f.evaluate({Rational(1), Rational(1)}), PoleError);
    CHECK(f.evaluate({Rational(3), Rational(1)}) == rat(2));
    RationalFunction g = f.substitute({{2, -Polynomial::variable(2)}});
    CHECK(g == parse_ratfun("(x1 - x2)/(x1 + x2)"));
}

TEST_CASE("Schwartz-Zippel cross-check, 200 seeded cases") {
    std::mt19937_64 rng(424242);
    int done = 0;
    while (done < 200) {
        RationalFunction a = random_ratfun(rng, 3), b = random_ratfun(rng, 3);
        RationalFunction lhs = (a + b) * (a - b);
        RationalFunction rhs = a * a - b * b;
        CHECK(lhs == rhs);
        std::vector<Rational> p = random_point(rng, 3);
        try {
            Rational va = a.evaluate(p), vb = b.evaluate(p);
            CHECK(lhs.evaluate(p) == va * va - vb * vb);
            ++done;
        } catch (const PoleError&) {
            // resample
        }
    }
}

TEST_CASE("parser reports offsets and rejects malformed input") {
    CHECK_THROWS_WITH_AS(parse_ratfun("x1 + @"), doctest::Contains("at offset 5"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfun("x0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ratfun("(x1"), std::invalid_argument);
    CHECK(parse_ratfun("2x1(x2+1)") == parse_ratfun("2*x1*x2 + 2*x1"));
    CHECK(parse_ratfun("x1^-2") == RationalFunction(Polynomial{Rational(1)},
                                                    Polynomial::monomial(Rational(1), 1, 2)));
}

TEST_CASE("Bernoulli numbers against the generating series x/(e^x - 1)") {
    // Independent oracle: multiply the claimed series sum B_k x^k / k! by
    // (e^x - 1)/x and demand the identity series through order 14.
    const int N = 14;
    std::vector<Rational> lhs(N + 1), expfac(N + 1);
    Rational fact(1);
    for (int k = 0; k <= N; ++k) {
        if (k > 0) fact *= k;
        lhs[static_cast<size_t>(k)] = bernoulli(k) / fact;
        // (e^x - 1)/x = sum x^k / (k+1)!
        Rational f1(1);
        for (int j = 2; j <= k + 1; ++j) f1 *= j;
        expfac[static_cast<size_t>(k)] = 1 / f1;
    }
    for (int n = 0; n <= N; ++n) {
        Rational coeff(0);
        for (int k = 0; k <= n; ++k)
            coeff += lhs[static_cast<size_t>(k)] * expfac[static_cast<size_t>(n - k)];
        CHECK(coeff == (n == 0 ? Rational(1) : Rational(0)));
    }
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(12) == rat(-691, 2730));
    CHECK(bernoulli(13) == 0);
}
