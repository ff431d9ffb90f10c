#ifndef MOULDE_CHECKS_HPP
#define MOULDE_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

#include "moulde/mould.hpp"

namespace moulde {

// One verified instance of a law; r/i index the (depth, split) family where
// applicable, otherwise carry whatever the law documents.
struct Instance {
    int r = 0;
    int i = 0;
    bool ok = true;
    std::string witness;  // canonical text of the residual, failures only
};

struct VerificationReport {
    std::string law;
    std::vector<Instance> instances;

    bool passed() const {
        for (const auto& inst : instances)
            if (!inst.ok) return false;
        return true;
    }
    void record(int r, int i, const RationalFunction& residual);
    void record(int r, int i, bool ok, std::string witness = "");
    std::string to_json() const;
};

// Linearized double shuffle: f^(0) = 0, even depth-1 component, and both
// f#(u sh v) = 0 and f(u sh v) = 0 on all splits of x_1...x_r, 2 <= r <= D.
// equations_only restricts to the split equations, skipping the depth-0 and
// parity membership conditions (psi_0 satisfies the equations but is odd in
// depth 1).
VerificationReport check_ls(const Mould& f, int jobs = 1, bool equations_only = false);

// Double shuffle modulo products: shuffle on the sharp side, stuffle plain.
VerificationReport check_dm(const Mould& f, int jobs = 1, bool equations_only = false);

// f + varphi(f) = 0 componentwise.
VerificationReport check_in_V(const Mould& f);

// Every nonzero depth-r component has total degree k - r.
VerificationReport check_weight(const Mould& f, int k);

// f(x_1...x_r) + (-1)^r f(x_r...x_1) = 0 for 2 <= r <= D.
VerificationReport lemma_reversal_check(const Mould& f);

// Runs fn(j) for j in [0, n) on up to `jobs` threads.
void parallel_for(int n, int jobs, const std::function<void(int)>& fn);

}  // namespace moulde

#endif
