#ifndef MOULDE_VERIFY_HPP
#define MOULDE_VERIFY_HPP

#include <random>

#include "moulde/checks.hpp"
#include "moulde/named.hpp"

namespace moulde {

// psi_0 Witt identity for 3 <= r <= D and {s_m, s_n} = (m-n) s_{m+n} for
// m, n in {1,2,3}.
VerificationReport witt_check(int max_depth);

// phi_0's depth-3 ari identity, the failure of its depth-4 analogue, and the
// flat-phi_0 versus psi-family comparisons (equal through depth 3, not at 4).
VerificationReport phi0_extra_check(int max_depth);

// Both shuffle factorizations of pal: plain and flat, 0 <= i <= r <= D.
VerificationReport pal_symmetral_check(int max_depth);

// phi_0(x_1..x_i sh x_{i+1}..x_r) = 0 for all splits.
VerificationReport phi0_shuffle_check(int max_depth);

// flat(phi_0) fails both solution laws somewhere below the truncation.
VerificationReport phi0_flat_not_solution(int max_depth);

struct LiftComparison {
    VerificationReport report;
    Mould difference;  // chi_E(f) - chi_B(f)
};

// chi_E(f) = chi_B(f) at depths d..d+3; at depth d+4 the difference equals
// (1/240){f, Q_4} and is nonzero.
LiftComparison compare_lifts(const Mould& f, int max_depth);

// Random element of L with polynomial components (small sparse data).
Mould random_lie_mould(std::mt19937_64& rng, int max_depth);

// Flat-compatibility {f,g}_ari^flat = {f^flat, g^flat} on seeded pairs from V
// plus the printed depth-3 counterexample outside V.
VerificationReport prop42_check(int max_depth, uint64_t seed, int pairs);

struct Prop54Result {
    VerificationReport report;
    bool plain_convention_matches_at_top = false;  // outcome at depth d+4
};

// chi_B(x_1^2) versus the psi_B ad-series (factorial convention asserted
// through depth d+4) and the shuffle factorizations of B = exp(psi_B).
Prop54Result prop54_check(int max_depth);

// {xi_3, xi_9} - 3 {xi_5, xi_7} = 0 through the given depth.
VerificationReport xi_relation_check(int max_depth);

// Evaluates the bracket decomposition for sigma_{which} and asserts every
// depth below the stated modulus is a polynomial; which = 3 also pins the
// exact components.
VerificationReport sigma_decomposition_check(int which, int max_depth);

}  // namespace moulde

#endif
