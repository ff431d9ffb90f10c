#include "moulde/checks.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace moulde {

void VerificationReport::record(int r, int i, const RationalFunction& residual) {
    Instance inst;
    inst.r = r;
    inst.i = i;
    inst.ok = residual.is_zero();
    if (!inst.ok) inst.witness = residual.to_string();
    instances.push_back(std::move(inst));
}

void VerificationReport::record(int r, int i, bool ok, std::string witness) {
    instances.push_back(Instance{r, i, ok, ok ? "" : std::move(witness)});
}

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["law"] = law;
    j["passed"] = passed();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& inst : instances) {
        nlohmann::json e;
        e["r"] = inst.r;
        e["i"] = inst.i;
        e["ok"] = inst.ok;
        if (!inst.ok) e["witness"] = inst.witness;
        arr.push_back(e);
    }
    j["instances"] = arr;
    return j.dump(2);
}

void parallel_for(int n, int jobs, const std::function<void(int)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (int j = 0; j < n; ++j) fn(j);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int j = next.fetch_add(1); j < n; j = next.fetch_add(1)) fn(j);
    };
    std::vector<std::thread> pool;
    int count = std::min(jobs, n);
    pool.reserve(static_cast<size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

namespace {

Word run_word(int from, int to) {
    Word w;
    for (int n = from; n <= to; ++n) w.push_back(n);
    return w;
}

// Shared shape of check_ls / check_dm: condition (i)-(ii), then per (r, i)
// split the sharp-side shuffle residual and the plain-side product residual.
VerificationReport check_double_shuffle(const Mould& f, bool plain_is_stuffle, int jobs,
                                        const std::string& law, bool equations_only) {
    VerificationReport report;
    report.law = law;
    if (!equations_only) {
        report.record(0, 0, f.depth0() == 0, "depth-0 component is " + to_string(f.depth0()));
        const RationalFunction& d1 = f.at(1);
        RationalFunction mirrored = d1.substitute({{1, -Polynomial::variable(1)}});
        report.record(1, 0, mirrored - d1);
    }

    Mould fs = sharp(f);
    struct Split {
        int r, i;
    };
    std::vector<Split> splits;
    for (int r = 2; r <= f.max_depth(); ++r)
        for (int i = 1; i < r; ++i) splits.push_back({r, i});

    std::vector<Instance> sharp_side(splits.size()), plain_side(splits.size());
    parallel_for(static_cast<int>(splits.size()), jobs, [&](int j) {
        auto [r, i] = splits[static_cast<size_t>(j)];
        Word u = run_word(1, i), v = run_word(i + 1, r);
        WordSum sh = shuffle(u, v);
        RationalFunction res_sharp = evaluate(fs, sh);
        RationalFunction res_plain = evaluate(f, plain_is_stuffle ? stuffle(u, v) : sh);
        sharp_side[static_cast<size_t>(j)] =
            Instance{r, i, res_sharp.is_zero(), res_sharp.is_zero() ? "" : res_sharp.to_string()};
        plain_side[static_cast<size_t>(j)] =
            Instance{r, i, res_plain.is_zero(), res_plain.is_zero() ? "" : res_plain.to_string()};
    });
    for (size_t j = 0; j < splits.size(); ++j) {
        report.instances.push_back(sharp_side[j]);
        report.instances.push_back(plain_side[j]);
    }
    return report;
}

}  // namespace

VerificationReport check_ls(const Mould& f, int jobs, bool equations_only) {
    return check_double_shuffle(f, /*plain_is_stuffle=*/false, jobs, "ls", equations_only);
}

VerificationReport check_dm(const Mould& f, int jobs, bool equations_only) {
    return check_double_shuffle(f, /*plain_is_stuffle=*/true, jobs, "dm", equations_only);
}

VerificationReport check_in_V(const Mould& f) {
    VerificationReport report;
    report.law = "V";
    Mould sum = f + varphi(f);
    report.record(0, 0, sum.depth0() == 0, to_string(sum.depth0()));
    for (int r = 1; r <= sum.max_depth(); ++r) report.record(r, 0, sum.at(r));
    return report;
}

VerificationReport check_weight(const Mould& f, int k) {
    VerificationReport report;
    report.law = "weight";
    for (int r = 1; r <= f.max_depth(); ++r) {
        if (f.at(r).is_zero()) continue;  // degree of 0 matches anything
        int64_t deg = f.at(r).total_degree();
        report.record(r, 0, deg == k - r,
                      "degree " + std::to_string(deg) + ", expected " + std::to_string(k - r));
    }
    return report;
}

VerificationReport lemma_reversal_check(const Mould& f) {
    VerificationReport report;
    report.law = "reversal";
    for (int r = 2; r <= f.max_depth(); ++r) {
        RationalFunction direct = evaluate(f, run_word(1, r));
        RationalFunction reversed = evaluate(f, reverse(run_word(1, r)));
        RationalFunction residual = r % 2 == 0 ? direct + reversed : direct - reversed;
        report.record(r, 0, residual);
    }
    return report;
}

}  // namespace moulde
