#ifndef MOULDE_WORD_HPP
#define MOULDE_WORD_HPP

#include <map>
#include <string>
#include <vector>

#include "moulde/ratfun.hpp"

namespace moulde {

// A word in the letters x_n, n >= 1; the empty vector is the empty word.
using Word = std::vector<int>;

Word parse_word(const std::string& text);
std::string word_to_string(const Word& w);
Word reverse(const Word& w);

// Formal linear combination of words with rational-function coefficients.
class WordSum {
  public:
    using TermMap = std::map<Word, RationalFunction>;

    WordSum() = default;
    WordSum(const Word& w) { add(w, RationalFunction{Rational(1)}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const RationalFunction& c);

    WordSum& operator+=(const WordSum& o);
    WordSum& operator-=(const WordSum& o);
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }
    WordSum& operator*=(const RationalFunction& c);
    friend WordSum operator*(WordSum s, const RationalFunction& c) { return s *= c; }

    // Prepends the letter x_n to every word.
    WordSum prepend(int n) const;

    bool operator==(const WordSum& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

  private:
    TermMap terms_;
};

WordSum shuffle(const Word& u, const Word& v);
WordSum stuffle(const Word& u, const Word& v);
WordSum shuffle(const WordSum& u, const WordSum& v);
WordSum stuffle(const WordSum& u, const WordSum& v);
WordSum reverse_sum(const WordSum& s);

// WordSum grammar: term (('+'|'-') term)*, term := [coeff '*'] word, with '*'
// between two words denoting the stuffle product and infix "sh" the shuffle.
WordSum parse_wordsum(const std::string& text);

}  // namespace moulde

#endif
