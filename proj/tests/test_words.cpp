#include <doctest.h>

#include <algorithm>

#include "moulde/word.hpp"

using namespace moulde;

namespace {

// Independent shuffle oracle: enumerate the C(|u|+|v|, |u|) ways to choose
// the positions of u inside the result.
WordSum shuffle_by_enumeration(const Word& u, const Word& v) {
    size_t n = u.size(), m = v.size();
    std::vector<bool> mask(n + m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(n), true);
    std::sort(mask.begin(), mask.end());
    WordSum sum;
    do {
        Word w;
        size_t iu = 0, iv = 0;
        for (bool take_u : mask) w.push_back(take_u ? u[iu++] : v[iv++]);
        sum.add(w, RationalFunction{Rational(1)});
    } while (std::next_permutation(mask.begin(), mask.end()));
    // next_permutation enumerates each mask once, but with mask sorted
    // ascending the u-positions come last; all masks are covered exactly once.
    return sum;
}

std::vector<Word> words_up_to(int max_len, int alphabet) {
    std::vector<Word> out{{}};
    size_t start = 0;
    for (int len = 1; len <= max_len; ++len) {
        size_t end = out.size();
        for (size_t j = start; j < end; ++j)
            if (static_cast<int>(out[j].size()) == len - 1)
                for (int a = 1; a <= alphabet; ++a) {
                    Word w = out[j];
                    w.push_back(a);
                    out.push_back(w);
                }
        start = end;
    }
    return out;
}

}  // namespace

TEST_CASE("word parsing") {
    CHECK(parse_word("x1 x2 x1") == Word{1, 2, 1});
    CHECK(parse_word("e") == Word{});
    CHECK(word_to_string(Word{3, 1}) == "x3 x1");
    CHECK(reverse(Word{1, 2, 3}) == Word{3, 2, 1});
    CHECK_THROWS_WITH_AS(parse_word("x1 @"), doctest::Contains("at offset 3"),
                         std::invalid_argument);
}

TEST_CASE("word sum parsing") {
    WordSum s = parse_wordsum("x1 x2 - 2 * x2 x1");
    CHECK(s.terms().size() == 2);
    CHECK(s.terms().at(Word{2, 1}) == RationalFunction{Rational(-2)});
    WordSum sh = parse_wordsum("x1 sh x2");
    CHECK(sh == shuffle(Word{1}, Word{2}));
    WordSum st = parse_wordsum("x1 * x2");
    CHECK(st == stuffle(Word{1}, Word{2}));
    CHECK_THROWS_AS(parse_wordsum("x1 +"), std::invalid_argument);
}

TEST_CASE("shuffle against position-enumeration oracle, total length <= 4") {
    std::vector<Word> words = words_up_to(3, 2);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 4) continue;
            CHECK(shuffle(u, v) == shuffle_by_enumeration(u, v));
        }
}

TEST_CASE("shuffle is commutative and associative") {
    std::vector<Word> words = words_up_to(2, 3);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 4) continue;
            CHECK(shuffle(u, v) == shuffle(v, u));
        }
    WordSum a{Word{1}}, b{Word{2}}, c{Word{3, 1}};
    CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
}

TEST_CASE("stuffle base cases and the polar depth-2 expansion") {
    CHECK(stuffle(Word{}, Word{1, 2}) == WordSum(Word{1, 2}));
    CHECK(stuffle(Word{1}, Word{1}).is_zero());  // equal leading letters
    // x1 * x2 = x1x2 + x2x1 + (x1 - x2)/(x1 - x2) read letterwise
    WordSum expect;
    expect.add(Word{1, 2}, RationalFunction{Rational(1)});
    expect.add(Word{2, 1}, RationalFunction{Rational(1)});
    RationalFunction inv = RationalFunction{Rational(1)} /
                           (RationalFunction::variable(1) - RationalFunction::variable(2));
    expect.add(Word{1}, inv);
    expect.add(Word{2}, -inv);
    CHECK(stuffle(Word{1}, Word{2}) == expect);
}

TEST_CASE("stuffle is commutative and associative, total length <= 4") {
    std::vector<Word> words = words_up_to(2, 3);
    for (const Word& u : words)
        for (const Word& v : words) {
            if (u.size() + v.size() > 4) continue;
            CHECK(stuffle(u, v) == stuffle(v, u));
        }
    // Associativity holds on words with pairwise disjoint letters (the only
    // shape the double shuffle equations use); the n = m degeneration rule
    // breaks it when operands share a letter.
    for (const Word& u : {Word{1}, Word{2, 1}})
        for (const Word& v : {Word{3}, Word{4}})
            for (const Word& w : {Word{5}, Word{6, 5}})
                if (u.size() + v.size() + w.size() <= 4)
                    CHECK(stuffle(stuffle(WordSum(u), WordSum(v)), WordSum(w)) ==
                          stuffle(WordSum(u), stuffle(WordSum(v), WordSum(w))));
}

TEST_CASE("reverse_sum flips every word") {
    WordSum s = shuffle(Word{1, 2}, Word{3});
    WordSum r = reverse_sum(s);
    for (const auto& [w, c] : s.terms()) CHECK(r.terms().at(reverse(w)) == c);
}
