#ifndef MOULDE_BERNOULLI_HPP
#define MOULDE_BERNOULLI_HPP

#include "moulde/rational.hpp"

namespace moulde {

// Bernoulli number B_r with B_1 = -1/2.
Rational bernoulli(int r);

}  // namespace moulde

#endif
