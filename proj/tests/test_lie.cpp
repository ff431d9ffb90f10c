#include <doctest.h>

#include <random>

#include "moulde/bracket_expr.hpp"
#include "moulde/lie.hpp"
#include "moulde/named.hpp"
#include "moulde/verify.hpp"

using namespace moulde;

namespace {

Mould rand_mould(uint64_t seed, int D) {
    std::mt19937_64 rng(seed);
    return random_lie_mould(rng, D);
}

}  // namespace

TEST_CASE("both brackets are antisymmetric and bilinear") {
    const int D = 3;
    Mould f = rand_mould(11, D), g = rand_mould(22, D), h = rand_mould(33, D);
    for (Action a : {Action::ari, Action::ihara}) {
        CHECK((apply_bracket(a, f, g) + apply_bracket(a, g, f)).is_zero());
        CHECK((apply_bracket(a, f + h, g) - apply_bracket(a, f, g) - apply_bracket(a, h, g))
                  .is_zero());
        CHECK((apply_bracket(a, f * rat(3, 2), g) - apply_bracket(a, f, g) * rat(3, 2))
                  .is_zero());
        CHECK(apply_bracket(a, f, f).is_zero());
    }
}

TEST_CASE("Jacobi identity for both brackets (seeded)") {
    const int D = 3;
    Mould f = rand_mould(5, D), g = rand_mould(6, D), h = rand_mould(7, D);
    for (Action a : {Action::ari, Action::ihara}) {
        Mould jac = apply_bracket(a, f, apply_bracket(a, g, h)) +
                    apply_bracket(a, g, apply_bracket(a, h, f)) +
                    apply_bracket(a, h, apply_bracket(a, f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("bracket respects the depth filtration") {
    Mould f = Mould::concentrated(2, parse_ratfun("x1 - x2"), 5);
    Mould g = Mould::concentrated(1, parse_ratfun("x1^2"), 5);
    Mould b = ihara_bracket(f, g);
    CHECK(b.min_depth() == 3);
}

TEST_CASE("Ihara bracket oracle at depth 2") {
    // {x_1^2, -1/(2 x_1)} = -2 x_1 + x_2
    Mould f = Mould::concentrated(1, parse_ratfun("x1^2"), 2);
    Mould g = Mould::concentrated(1, parse_ratfun("-1/(2 x1)"), 2);
    CHECK(ihara_bracket(f, g).at(2) == parse_ratfun("x2 - 2 x1"));
}

TEST_CASE("exp and log are mutually inverse for both actions") {
    const int D = 4;
    Mould f = rand_mould(77, D);
    for (Action a : {Action::ari, Action::ihara}) {
        Mould F = exp_pre(f, a);
        CHECK(F.depth0() == 1);
        CHECK(equal_through_depth(log_pre(F, a), f, D));
        CHECK(equal_through_depth(exp_pre(log_pre(F, a), a), F, D));
    }
}

TEST_CASE("ad_pow and ad_series") {
    const int D = 4;
    Mould f = rand_mould(101, D), g = rand_mould(102, D);
    CHECK(equal_through_depth(ad_pow(g, f, 0, Action::ihara), f, D));
    CHECK(equal_through_depth(ad_pow(g, f, 1, Action::ihara), ihara_bracket(f, g), D));
    CHECK(equal_through_depth(ad_pow(g, f, 2, Action::ihara),
                              ihara_bracket(ihara_bracket(f, g), g), D));
}

TEST_CASE("adjoint of the unit is the identity") {
    const int D = 3;
    Mould f = rand_mould(55, D);
    CHECK(equal_through_depth(adjoint(Mould::unit(D), f, Action::ihara), f, D));
}

TEST_CASE("preari rejects nonzero depth-0 input") {
    CHECK_THROWS_AS(preari(Mould::unit(2), Mould::zero(2)), std::invalid_argument);
}

TEST_CASE("bracket expression parsing and right-nesting") {
    BracketExpr e = parse_bracket_expr("{mono:2, mono:4, mono:2}");
    REQUIRE(e.children.size() == 3);
    const int D = 4;
    Mould direct = ihara_bracket(
        monomial_seed(2, D), ihara_bracket(monomial_seed(4, D), monomial_seed(2, D)));
    CHECK(equal_through_depth(evaluate_bracket_expr(e, Action::ihara, D), direct, D));
    CHECK_THROWS_WITH_AS(parse_bracket_expr("{mono:2}"), doctest::Contains("two"),
                         std::invalid_argument);
    CHECK_THROWS_AS(parse_bracket_expr("{mono:2, "), std::invalid_argument);
}

TEST_CASE("the s-family closes under the bracket") {
    // {s_1, s_2} = s_3 with the calibrated bracket orientation
    Mould a = Mould::concentrated(1, s_r(1), 3);
    Mould b = Mould::concentrated(2, s_r(2), 3);
    CHECK(ihara_bracket(a, b).at(3) == s_r(3));
}

TEST_CASE("psi0 printed values") {
    CHECK(psi0(1) == parse_ratfun("1/x1"));
    CHECK(psi0(2) == parse_ratfun("(2 x1 - x2)/(3 x1 (x1 - x2) x2)"));
    CHECK(psi0(3) ==
          parse_ratfun("(3 x2 x1^2 - 2 x3 x1^2 - 3 x2^2 x1 + 2 x3^2 x1 - x2 x3^2 + x2^2 x3)/"
                       "(6 x1 x2 x3 (x1 - x2) (x1 - x3) (x2 - x3))"));
}

TEST_CASE("dupal basics") {
    CHECK(dupal(1) == parse_ratfun("-1/2"));
    CHECK(dupal(3).is_zero());
    CHECK(dupal(5).is_zero());
    CHECK(pal(1).at(1) == parse_ratfun("-1/(2 x1)"));
}

TEST_CASE("psiB is only defined through depth 5") {
    CHECK_THROWS_AS(psiB(6), std::invalid_argument);
    CHECK_THROWS_AS(psiB_mould(6), std::invalid_argument);
    CHECK(psiB(4) == psi0(4) * RationalFunction{rat(-1, 18)});
}

TEST_CASE("named registry") {
    CHECK(is_named("pal"));
    CHECK(is_named("eta:3"));
    CHECK_FALSE(is_named("nonsense"));
    CHECK_THROWS_AS(make_named("nonsense", 3), std::invalid_argument);
    CHECK(make_named("zero", 3).is_zero());
    CHECK(make_named("one", 3).depth0() == 1);
}
