#ifndef MOULDE_RATIONAL_HPP
#define MOULDE_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace moulde {

// Arbitrary-precision rational, canonical (reduced, positive denominator).
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "a" or "a/b".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

// Small random rational for probabilistic zero tests. Numerators in
// [-bound, bound], denominators in [1, bound].
Rational random_rational(std::mt19937_64& rng, long bound = 50);

}  // namespace moulde

#endif
