#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

#include "moulde/bracket_expr.hpp"
#include "moulde/verify.hpp"

using namespace moulde;

namespace {

int default_jobs() {
    if (const char* env = std::getenv("MOULDE_JOBS")) {
        int j = std::atoi(env);
        if (j >= 1) return j;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << text << "\n";
}

// Seeded evaluation cross-check of an "equal moulds" claim: each depth of the
// difference is evaluated at random points and must vanish.
void paranoid_pass(VerificationReport& report, const Mould& diff, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int r = 1; r <= diff.max_depth(); ++r)
        for (int t = 0; t < 5; ++t) {
            std::vector<Rational> point;
            for (int v = 0; v < r; ++v) point.push_back(random_rational(rng, 97));
            try {
                report.record(r, 1000 + t, diff.at(r).evaluate(point) == 0,
                              "probabilistic evaluation nonzero at depth " + std::to_string(r));
            } catch (const PoleError&) {
                --t;  // resample away from the pole locus
            }
        }
}

Mould named_target(const std::string& target, int D) {
    if (target.empty()) throw CLI::ValidationError("--target", "a named mould is required");
    return make_named(target, D);
}

int finish(const VerificationReport& report, const std::string& output) {
    write_output(report.to_json(), output);
    return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mould calculus workbench"};
    app.require_subcommand(1);

    int max_depth = 5;
    std::string bracket_name = "ihara";
    std::string output;
    uint64_t seed = 1;
    int jobs = default_jobs();
    bool long_mode = false;
    bool paranoid = false;
    app.add_option("--max-depth", max_depth, "truncation depth")->capture_default_str();
    app.add_option("--bracket", bracket_name, "ari|ihara")
        ->check(CLI::IsMember({"ari", "ihara"}))
        ->capture_default_str();
    app.add_option("--output", output, "write result to file instead of stdout");
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--jobs", jobs, "worker threads (default: MOULDE_JOBS or hardware)");
    app.add_flag("--long", long_mode, "enable depth >= 6 verifications");
    app.add_flag("--paranoid", paranoid, "add seeded probabilistic equality cross-checks");

    auto* compute = app.add_subcommand("compute", "build a named mould and print its JSON");
    std::string compute_name;
    compute->add_option("name", compute_name, "registry name, e.g. pal, phi0, eta:3")
        ->required();

    auto* verify = app.add_subcommand("verify", "check a law and print a JSON report");
    std::string law, target;
    int which = 3;
    int weight = 0;
    bool have_weight = false;
    verify->add_option("law", law, "law to check")
        ->required()
        ->check(CLI::IsMember({"dm", "ls", "V", "weight", "witt", "pal-symmetral",
                               "phi0-shuffle", "theorem-main", "remark-diff", "prop54",
                               "xi-relation", "sigma-decomposition"}));
    verify->add_option("--target", target, "named mould the law applies to");
    verify->add_option("--which", which, "sigma index for sigma-decomposition")
        ->check(CLI::IsMember({3, 5, 7, 9}));
    verify->add_option("--weight", weight, "weight k for the weight law")
        ->each([&](const std::string&) { have_weight = true; });

    auto* bracket_cmd = app.add_subcommand("bracket", "evaluate a nested bracket expression");
    std::string expr;
    bracket_cmd->add_option("expr", expr, "e.g. \"{eta:3, eta:3, eta:-1}\"")->required();

    auto* compare = app.add_subcommand("compare", "chi_E vs chi_B on a depth-d seed");
    compare->add_option("--target", target, "named mould, e.g. mono:2");

    auto* decompose = app.add_subcommand("decompose", "sigma_{2k+1} bracket decomposition");
    decompose->add_option("--which", which, "3, 5, 7 or 9")
        ->check(CLI::IsMember({3, 5, 7, 9}));

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a named mould on a word sum");
    std::string word_text;
    eval_cmd->add_option("--target", target, "named mould");
    eval_cmd->add_option("word", word_text, "word sum, e.g. \"x1 x2 * x1\"")->required();

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Action action = bracket_name == "ari" ? Action::ari : Action::ihara;

        if (compute->parsed()) {
            write_output(mould_to_json(make_named(compute_name, max_depth)), output);
            return 0;
        }
        if (bracket_cmd->parsed()) {
            Mould m = evaluate_bracket_expr(parse_bracket_expr(expr), action, max_depth);
            write_output(mould_to_json(m), output);
            return 0;
        }
        if (eval_cmd->parsed()) {
            Mould m = named_target(target, max_depth);
            write_output(evaluate(m, parse_wordsum(word_text)).to_string(), output);
            return 0;
        }
        if (compare->parsed() || (verify->parsed() && (law == "theorem-main" || law == "remark-diff"))) {
            Mould f = named_target(target.empty() ? "mono:2" : target, max_depth);
            LiftComparison cmp = compare_lifts(f, max_depth);
            VerificationReport report = cmp.report;
            if (verify->parsed()) {
                report.law = law;
                int d = f.min_depth();
                std::vector<Instance> kept;
                for (const auto& inst : report.instances)
                    if ((law == "theorem-main") == (inst.r <= d + 3)) kept.push_back(inst);
                report.instances = kept;
            }
            if (paranoid && (!verify->parsed() || law == "theorem-main")) {
                Mould low = cmp.difference.truncated(
                    std::min(cmp.difference.max_depth(), f.min_depth() + 3));
                paranoid_pass(report, low, seed);
            }
            return finish(report, output);
        }
        if (decompose->parsed() || (verify->parsed() && law == "sigma-decomposition")) {
            if (which == 7 && !long_mode)
                throw CLI::ValidationError("--which",
                                           "the depth-6 sigma_7 job requires --long");
            int need = which == 7 ? 6 : (which == 3 ? 2 : 4);
            return finish(sigma_decomposition_check(which, std::max(max_depth, need)), output);
        }

        // remaining verify laws
        VerificationReport report;
        if (law == "dm" || law == "ls") {
            Mould f = named_target(target, max_depth);
            report = law == "dm" ? check_dm(f, jobs) : check_ls(f, jobs);
        } else if (law == "V") {
            report = check_in_V(named_target(target, max_depth));
        } else if (law == "weight") {
            Mould f = named_target(target, max_depth);
            if (!have_weight) {
                if (!f.weight_tag())
                    throw CLI::ValidationError("--weight",
                                               "target carries no weight tag; pass --weight");
                weight = *f.weight_tag();
            }
            report = check_weight(f, weight);
        } else if (law == "witt") {
            report = witt_check(max_depth);
        } else if (law == "pal-symmetral") {
            report = pal_symmetral_check(max_depth);
        } else if (law == "phi0-shuffle") {
            report = phi0_shuffle_check(max_depth);
        } else if (law == "prop54") {
            Prop54Result r = prop54_check(max_depth);
            report = r.report;
            std::cerr << "prop54: plain (no-factorial) convention at depth d+4 "
                      << (r.plain_convention_matches_at_top ? "matches" : "does not match")
                      << " chi_B\n";
        } else if (law == "xi-relation") {
            Mould x3 = xi(3, max_depth), x5 = xi(5, max_depth), x7 = xi(7, max_depth),
                  x9 = xi(9, max_depth);
            report = xi_relation_check(std::min(max_depth, 4));
            if (paranoid) {
                Mould m = ihara_bracket(x3, x9) - ihara_bracket(x5, x7) * Rational(3);
                paranoid_pass(report, m.truncated(std::min(max_depth, 4)), seed);
            }
        } else {
            throw CLI::ValidationError("law", "unknown law");
        }
        return finish(report, output);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
