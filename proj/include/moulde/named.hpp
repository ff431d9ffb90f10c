#ifndef MOULDE_NAMED_HPP
#define MOULDE_NAMED_HPP

#include "moulde/lie.hpp"

namespace moulde {

// d^(r): (B_r/r!) sum_i (-1)^i C(r-1,i) x_{i+1} / (x_1...x_r). The numerator
// index is the mirrored reading of the two candidates; it is the one under
// which log_ari(pal) reproduces the known phi_0 values (see phi0()).
RationalFunction dupal(int r);

// P: P^(0) = 1, P^(r) = 1/(x_1+...+x_r) * sum_i P^(i) d^(r-i)(x_{i+1}..x_r).
Mould pal(int max_depth);

// phi_0 = log_ari(pal). Aborts with std::logic_error if depths 1..3 disagree
// with their known closed forms (convention calibration gate).
Mould phi0(int max_depth);

// s_r = sum_{i=0}^{r-1} (r-i) prod_{j != i} 1/(x_j - x_i), x_0 = 0.
RationalFunction s_r(int r);
RationalFunction psi0(int r);      // C(r+1,2)^{-1} s_r
RationalFunction psi0_bar(int r);  // -(1/2^r) psi0(r)
RationalFunction psiB(int r);      // defined for 1 <= r <= 5 only

Mould psi0_mould(int max_depth);
Mould psiB_mould(int max_depth);  // max_depth <= 5

// Depth-4 cyclic sum over Z/5Z, x_0 = 0.
Mould Q4(int max_depth = 4);

// Depth-1 mould x_1^power (negative even powers allowed).
Mould monomial_seed(int power, int max_depth);

// Ecalle lift: sum 1/n! ad^n(phi_0^flat)(f) for the Ihara bracket.
// Validates that f solves the linearized double shuffle equations.
Mould chi_E(const Mould& f, int max_depth, bool validate_input = true);

// Brown lift of a mould concentrated in a single depth, then by linearity.
Mould chi_B(const Mould& f, int max_depth, bool validate_input = true);
Mould chi_B_inv(const Mould& F, int max_depth);

Mould eta(int weight_label, int max_depth);  // chi_E(x_1^(w-1)), w odd
Mould xi(int weight_label, int max_depth);   // chi_B(x_1^(w-1)), w odd

Mould sigma3(int max_depth);  // (0, x_1^2, -2x_1+x_2, 0, ...)

// Named-mould registry: zero, one, pal, dupal, phi0, phi0flat, psi0, psi0bar,
// psiB, B, Q4, sigma3, sigma3-truncated, s:<r>, eta:<w>, xi:<w>, mono:<k>.
Mould make_named(const std::string& name, int max_depth);
bool is_named(const std::string& name);

}  // namespace moulde

#endif
