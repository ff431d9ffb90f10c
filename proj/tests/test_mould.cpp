#include <doctest.h>

#include "moulde/checks.hpp"
#include "moulde/mould.hpp"
#include "moulde/named.hpp"

using namespace moulde;

namespace {

Mould sample_mould() {
    Mould f(3);
    f.set(1, parse_ratfun("x1^2"));
    f.set(2, parse_ratfun("(x1 - x2)/(x1*x2)"));
    f.set(3, parse_ratfun("x1*x2 + x3"));
    return f;
}

}  // namespace

TEST_CASE("sharp and flat are mutually inverse") {
    Mould f = sample_mould();
    CHECK(equal_through_depth(flat(sharp(f)), f, 3));
    CHECK(equal_through_depth(sharp(flat(f)), f, 3));
}

TEST_CASE("anti is an involution and varphi has sign (-1)^r") {
    Mould f = sample_mould();
    CHECK(equal_through_depth(anti(anti(f)), f, 3));
    Mould v = varphi(f);
    CHECK(v.at(1) == anti(f).at(1) * Rational(-1));
    CHECK(v.at(2) == anti(f).at(2));
    CHECK(v.at(3) == anti(f).at(3) * Rational(-1));
    CHECK(equal_through_depth(varphi(varphi(f)), f, 3));
}

TEST_CASE("swap_flat equals anti composed with flat") {
    Mould f = sample_mould();
    CHECK(equal_through_depth(swap_flat(f), anti(flat(f)), 3));
}

TEST_CASE("evaluation follows the word convention") {
    Mould f = sample_mould();
    CHECK(evaluate(f, Word{2}) == parse_ratfun("x2^2"));
    CHECK(evaluate(f, Word{2, 1}) == parse_ratfun("(x2 - x1)/(x1*x2)"));
    CHECK(evaluate(f, Word{}) == RationalFunction{f.depth0()});
    CHECK(evaluate(f, parse_wordsum("x1 x2 + x2 x1")).is_zero());
    CHECK_THROWS_AS(evaluate(f, Word{1, 2, 3, 1}), std::out_of_range);
    Mould g(2);
    g.set(2, parse_ratfun("1/(x1 - x2)"));
    CHECK_THROWS_AS(evaluate(g, Word{1, 1}), PoleError);  // pole at x1 = x2
}

TEST_CASE("mould arithmetic and truncation") {
    Mould f = sample_mould();
    Mould g = f + f;
    CHECK(g.at(2) == f.at(2) * Rational(2));
    CHECK((f - f).is_zero());
    CHECK(f.truncated(2).max_depth() == 2);
    CHECK(f.min_depth() == 1);
    CHECK(Mould::unit(2).min_depth() == 0);
    CHECK(Mould::zero(2).min_depth() == -1);
}

TEST_CASE("JSON round trip") {
    Mould f = sample_mould();
    f.name = "sample";
    f.set_weight_tag(3);
    Mould g = mould_from_json(mould_to_json(f));
    CHECK(g.name == "sample");
    CHECK(g.weight_tag() == std::optional<int>(3));
    CHECK(equal_through_depth(f, g, 3));
    CHECK(g.depth0() == f.depth0());
}

TEST_CASE("component variable-count validation") {
    Mould f(2);
    CHECK_THROWS_AS(f.set(1, parse_ratfun("x2")), std::invalid_argument);
}

TEST_CASE("check_weight and reversal on canonical elements") {
    Mould q = Q4(4);
    CHECK(check_weight(q, 0).passed());  // degree -4 at depth 4
    CHECK(lemma_reversal_check(q).passed());
    CHECK(check_in_V(q).passed());
    Mould s3 = sigma3(2);
    CHECK(check_weight(s3, 3).passed());
}

TEST_CASE("check_ls rejects a non-solution") {
    Mould f(2);
    f.set(1, parse_ratfun("x1"));  // odd depth-1 component
    VerificationReport r = check_ls(f);
    CHECK_FALSE(r.passed());
}

TEST_CASE("report JSON shape") {
    Mould f(2);
    f.set(1, parse_ratfun("x1"));
    std::string j = check_ls(f).to_json();
    CHECK(j.find("\"law\"") != std::string::npos);
    CHECK(j.find("\"passed\": false") != std::string::npos);
    CHECK(j.find("\"witness\"") != std::string::npos);
}
