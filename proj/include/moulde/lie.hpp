#ifndef MOULDE_LIE_HPP
#define MOULDE_LIE_HPP

#include "moulde/mould.hpp"

namespace moulde {

enum class Action { ari, ihara };

// Preari action f (*) g: each depth-d component sums the biextensions of
// f^(r) and g^(s) with r + s = d, where an f-block is absorbed into its right
// neighbor (plus the pure concatenation boundary term) minus absorption into
// the left neighbor. Inputs must have depth-0 component 0.
Mould preari(const Mould& f, const Mould& g);

// {f, g}_ari = preari(f, g) - preari(g, f)
Mould ari_bracket(const Mould& f, const Mould& g);

// Linearized Ihara action: excise r successive arguments, subtracting the
// left neighbor (x_0 = 0), plus (-1)^r times the reversed-difference terms.
Mould ihara_preaction(const Mould& f, const Mould& g);

Mould ihara_bracket(const Mould& f, const Mould& g);

Mould apply_action(Action a, const Mould& f, const Mould& g);
Mould apply_bracket(Action a, const Mould& f, const Mould& g);

// exp(f) = 1 + sum f^n / n! with f^n = f act f^(n-1), truncated at the
// operands' depth. Requires f^(0) = 0.
Mould exp_pre(const Mould& f, Action action);

// Depth-by-depth inversion of exp_pre (the naive alternating series is not
// valid for these non-associative actions). Requires F^(0) = 1.
Mould log_pre(const Mould& F, Action action);

// ad^n(g)(f) with ad(g)(f) = {f, g}; right-action convention.
Mould ad_pow(const Mould& g, const Mould& f, int n, Action bracket);

// sum_n c_n ad^n(g)(f) with c_n = 1/n! (factorial = true) or 1.
Mould ad_series(const Mould& g, const Mould& f, Action bracket, bool factorial = true);

// Ad(G)(f) = sum 1/n! ad^n(log G)(f). Requires G^(0) = 1, f^(0) = 0.
Mould adjoint(const Mould& G, const Mould& f, Action bracket);

}  // namespace moulde

#endif
