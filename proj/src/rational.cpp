#include "moulde/rational.hpp"

namespace moulde {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    try {
        Rational q(text);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("invalid rational literal: " + text);
    }
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational random_rational(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> num(-bound, bound);
    std::uniform_int_distribution<long> den(1, bound);
    return rat(num(rng), den(rng));
}

}  // namespace moulde
