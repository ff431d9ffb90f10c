#ifndef MOULDE_MOULD_HPP
#define MOULDE_MOULD_HPP

#include <optional>
#include <string>
#include <vector>

#include "moulde/word.hpp"

namespace moulde {

// Depth-truncated mould: depth-0 scalar plus one rational function in
// x_1..x_r per depth r = 1..max_depth. Results of any operation are exact
// through the truncation depth.
class Mould {
  public:
    explicit Mould(int max_depth, Rational depth0 = Rational(0));

    static Mould zero(int max_depth) { return Mould(max_depth); }
    static Mould unit(int max_depth) { return Mould(max_depth, Rational(1)); }
    // Mould concentrated in one depth.
    static Mould concentrated(int depth, RationalFunction component, int max_depth);

    int max_depth() const { return static_cast<int>(comp_.size()); }
    const Rational& depth0() const { return depth0_; }
    void set_depth0(const Rational& c) { depth0_ = c; }

    const RationalFunction& at(int r) const;
    void set(int r, RationalFunction f);

    const std::optional<int>& weight_tag() const { return weight_; }
    void set_weight_tag(std::optional<int> k) { weight_ = std::move(k); }

    bool is_zero() const;
    // First depth with a nonzero component, 0 counting depth0; -1 if zero.
    int min_depth() const;

    Mould truncated(int new_max_depth) const;

    Mould operator-() const;
    friend Mould operator+(const Mould& a, const Mould& b);
    friend Mould operator-(const Mould& a, const Mould& b);
    Mould& operator+=(const Mould& o) { return *this = *this + o; }
    Mould& operator-=(const Mould& o) { return *this = *this - o; }
    Mould& operator*=(const Rational& c);
    friend Mould operator*(Mould f, const Rational& c) { return f *= c; }

    // Componentwise equality through the smaller truncation depth.
    friend bool equal_through_depth(const Mould& a, const Mould& b, int depth);

    std::string name;

  private:
    Rational depth0_;
    std::vector<RationalFunction> comp_;
    std::optional<int> weight_;
};

// Evaluation per the word convention: a word (n_1..n_r) reads the depth-r
// component at (x_{n_1},...,x_{n_r}); extended linearly over a WordSum.
// Throws PoleError when a substitution lands on a pole.
RationalFunction evaluate(const Mould& f, const Word& w);
RationalFunction evaluate(const Mould& f, const WordSum& s);

Mould sharp(const Mould& f);      // x_i -> x_1 + ... + x_i
Mould flat(const Mould& f);       // x_i -> x_i - x_{i-1}
Mould anti(const Mould& f);       // argument reversal
Mould varphi(const Mould& f);     // (-1)^r times anti
Mould swap_flat(const Mould& f);  // f(x_r, x_{r-1}-x_r, ..., x_1-x_2)

// Mould JSON: {"name", "weight", "max_depth", "depth0", "components": {"r": text}}
std::string mould_to_json(const Mould& f);
Mould mould_from_json(const std::string& json_text);

}  // namespace moulde

#endif
