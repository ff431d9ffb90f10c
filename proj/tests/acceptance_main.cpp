// Acceptance suite: one line per criterion, "ok N - ..." or "FAIL N - ...".
// Depth-6 items run only with --long.

#include <cstring>
#include <iostream>
#include <random>
#include <thread>

#include "moulde/bracket_expr.hpp"
#include "moulde/verify.hpp"

using namespace moulde;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& what) {
    std::cout << (ok ? "ok " : "FAIL ") << n << " - " << what << std::endl;
    if (!ok) ++failures;
}

int jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

}  // namespace

int main(int argc, char** argv) {
    bool long_mode = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--long") == 0) long_mode = true;

    const int D = 5;

    // 1. Calibration gate: log_ari(pal) at depths 1..3. phi0() itself aborts
    // on miscalibration, so constructing it is the assertion.
    bool c1 = false;
    try {
        Mould p = phi0(3);
        c1 = p.at(1) == parse_ratfun("-1/(2 x1)") &&
             p.at(2) == parse_ratfun("(x1 - x2)/(12 x1 x2 (x1 + x2))");
    } catch (const std::logic_error&) {
    }
    line(1, c1, "calibration gate: log_ari(pal) matches the depth 1-3 closed forms");

    // 2. psi_0 values, the s-family identity, Witt for r = 3,4,5.
    bool c2 = psi0(1) == parse_ratfun("1/x1") &&
              psi0(2) == parse_ratfun("(2 x1 - x2)/(3 x1 (x1 - x2) x2)") &&
              psi0(3) == parse_ratfun("(3 x2 x1^2 - 2 x3 x1^2 - 3 x2^2 x1 + 2 x3^2 x1 "
                                      "- x2 x3^2 + x2^2 x3)/"
                                      "(6 x1 x2 x3 (x1 - x2) (x1 - x3) (x2 - x3))") &&
              witt_check(5).passed();
    line(2, c2, "psi_0 closed forms, {s_m,s_n} identity (calibrated sign), Witt r<=5");

    // 3. (phi_0^(r))^flat versus the psi-family.
    line(3, phi0_extra_check(4).passed(),
         "(phi_0^(r))^flat = -(1/2^r) psi_0^(r) for r<=3, differs from psi_B^(4)");

    // 4. Proposition 4.2 flat-compatibility on V, plus the counterexample.
    line(4, prop42_check(4, 20240501, 25).passed(),
         "flat-compatibility of the brackets on V (25 seeded pairs) and the "
         "printed counterexample 2(x1-x3)x3");

    // 5. sigma_3 anchor.
    {
        Mould seed = monomial_seed(2, 2);
        RationalFunction expect = parse_ratfun("x2 - 2 x1");
        bool ok = chi_E(seed, 2).at(2) == expect && chi_B(seed, 2).at(2) == expect;
        line(5, ok, "chi_E(x1^2)^(2) = chi_B(x1^2)^(2) = -2x1 + x2");
    }

    // 6. Theorem 1.2 + Remark 5.3 for the three seeds (d + 4 = 5).
    {
        bool ok = true;
        for (const char* name : {"mono:2", "mono:4", "mono:-2"})
            ok = ok && compare_lifts(make_named(name, D), D).report.passed();
        if (long_mode) ok = ok && compare_lifts(make_named("mono:2", 6), 6).report.passed();
        line(6, ok,
             std::string("chi_E = chi_B to depth d+3; depth-(d+4) difference is "
                         "(1/240){f, Q_4} for x1^2, x1^4, x1^-2") +
                 (long_mode ? " (and x1^2 at D=6)" : ""));
    }

    // 7. Membership laws.
    {
        int J = jobs();
        bool ok = check_dm(chi_E(monomial_seed(2, D), D), J).passed() &&
                  check_dm(chi_E(monomial_seed(4, D), D), J).passed() &&
                  check_dm(chi_B(monomial_seed(2, D), D), J).passed() &&
                  check_dm(psi0_mould(D), J, /*equations_only=*/true).passed() &&
                  check_ls(Q4(4), J).passed() &&
                  pal_symmetral_check(D).passed() &&
                  phi0_shuffle_check(D).passed() &&
                  phi0_flat_not_solution(4).passed();
        line(7, ok,
             "dm for chi_E/chi_B images, dm equations for psi_0; ls for Q_4; pal and "
             "phi_0 factorizations; phi_0^flat fails both laws");
    }

    // 8. Theorem 1.1: bracket closure of ls and dm on seeded combinations.
    {
        std::mt19937_64 rng(97531);
        int J = jobs();
        bool ok = true;
        std::vector<Mould> ls_pool = {monomial_seed(2, D), monomial_seed(4, D),
                                      monomial_seed(-2, D), Q4(D)};
        int ls_pairs = long_mode ? 3 : 2, dm_pairs = long_mode ? 2 : 1;
        for (int k = 0; k < ls_pairs && ok; ++k) {
            Mould f = Mould::zero(D), g = Mould::zero(D);
            for (const Mould& b : ls_pool) {
                f += b * random_rational(rng, 5);
                g += b * random_rational(rng, 5);
            }
            ok = check_ls(ihara_bracket(f, g), J).passed();
        }
        std::vector<Mould> dm_pool = {chi_E(monomial_seed(2, D), D, false),
                                      chi_B(monomial_seed(4, D), D, false),
                                      chi_E(monomial_seed(-2, D), D, false)};
        for (int k = 0; k < dm_pairs && ok; ++k) {
            Mould f = Mould::zero(D), g = Mould::zero(D);
            for (const Mould& b : dm_pool) {
                f += b * random_rational(rng, 5);
                g += b * random_rational(rng, 5);
            }
            ok = check_dm(ihara_bracket(f, g), J).passed();
        }
        line(8, ok, "Ihara bracket preserves ls and dm on seeded combinations");
    }

    // 9. chi_E is a morphism for the Ihara bracket.
    {
        Mould f = monomial_seed(2, D), g = monomial_seed(4, D);
        Mould lhs = chi_E(ihara_bracket(f, g), D, false);
        Mould rhs = ihara_bracket(chi_E(f, D, false), chi_E(g, D, false));
        line(9, equal_through_depth(lhs, rhs, D),
             "chi_E({x1^2, x1^4}) = {chi_E(x1^2), chi_E(x1^4)} through depth 5");
    }

    // 10. chi_B round trips.
    {
        Mould a = monomial_seed(2, D), b = monomial_seed(4, D);
        bool ok = equal_through_depth(chi_B_inv(chi_B(a, D), D), a, D) &&
                  equal_through_depth(chi_B_inv(chi_B(b, D), D), b, D) &&
                  check_ls(chi_B_inv(chi_E(a, D, false), D), jobs()).passed();
        line(10, ok, "chi_B_inv inverts chi_B; chi_B_inv(chi_E(x1^2)) lies in ls");
    }

    // 11. xi relation.
    line(11, xi_relation_check(4).passed(), "{xi_3, xi_9} - 3{xi_5, xi_7} = 0 through depth 4");

    // 12. Proposition 5.4.
    {
        Prop54Result r = prop54_check(D);
        line(12, r.report.passed(),
             std::string("psi_B ad-series (factorial convention) matches chi_B(x1^2) "
                         "through depth 5; B and B# factorize over sh; plain "
                         "convention at depth d+4 ") +
                 (r.plain_convention_matches_at_top ? "matches" : "does not match"));
    }

    // 13. sigma decompositions.
    {
        bool ok = sigma_decomposition_check(3, 2).passed() &&
                  sigma_decomposition_check(5, 4).passed() &&
                  sigma_decomposition_check(9, 4).passed();
        if (long_mode) ok = ok && sigma_decomposition_check(7, 6).passed();
        line(13, ok,
             std::string("sigma_3 exact; sigma_5, sigma_9 truncations polynomial") +
                 (long_mode ? "; sigma_7 polynomial through depth 6" : ""));
    }

    // 14. Kernel spot checks (full versions live in the unit suite).
    {
        std::mt19937_64 rng(161803);
        bool ok = true;
        for (int k = 0; k < 20 && ok; ++k) {
            Polynomial pa, pb;
            for (int t = 0; t < 3; ++t) {
                pa += Polynomial::monomial(random_rational(rng, 9), 1 + static_cast<int>(rng() % 3),
                                           static_cast<uint32_t>(rng() % 3));
                pb += Polynomial::monomial(random_rational(rng, 9), 1 + static_cast<int>(rng() % 3),
                                           static_cast<uint32_t>(rng() % 3));
            }
            if (pb.is_zero()) continue;
            RationalFunction a{pa}, b{pb};
            RationalFunction lhs = (a + b) * (a - b), rhs = a * a - b * b;
            ok = lhs == rhs;
            if (ok) {
                std::vector<Rational> pt{random_rational(rng, 97), random_rational(rng, 97),
                                         random_rational(rng, 97)};
                try {
                    ok = lhs.evaluate(pt) == rhs.evaluate(pt);
                } catch (const PoleError&) {
                }
            }
            if (ok) {
                std::string s = (a / b).to_string();
                ok = parse_ratfun(s).to_string() == s;
            }
        }
        Word u{1, 2}, v{3};
        ok = ok && shuffle(u, v).size() == 3 && stuffle(Word{1}, Word{1}).is_zero();
        line(14, ok, "kernel ring laws, canonical idempotence, evaluation agreement");
    }

    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
