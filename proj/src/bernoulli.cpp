#include "moulde/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace moulde {

// sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1, which forces B_1 = -1/2.
Rational bernoulli(int r) {
    if (r < 0) throw std::invalid_argument("bernoulli index must be nonnegative");
    static std::mutex mu;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard<std::mutex> lock(mu);
    for (int n = static_cast<int>(cache.size()); n <= r; ++n) {
        Rational sum(0);
        Rational binom(1);  // C(n+1, k), k running from 0
        for (int k = 0; k < n; ++k) {
            sum += binom * cache[static_cast<size_t>(k)];
            binom *= n + 1 - k;
            binom /= k + 1;
        }
        cache.push_back(-sum / binom);
    }
    return cache[static_cast<size_t>(r)];
}

}  // namespace moulde
