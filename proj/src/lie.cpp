#include "moulde/lie.hpp"

namespace moulde {

namespace {

void require_lie(const Mould& f, const char* who) {
    if (f.depth0() != 0)
        throw std::invalid_argument(std::string(who) + " requires a depth-0 component of 0");
}

void require_group(const Mould& F, const char* who) {
    if (F.depth0() != 1)
        throw std::invalid_argument(std::string(who) + " requires a depth-0 component of 1");
}

RationalFunction with_arguments(const RationalFunction& component,
                                const std::vector<Polynomial>& args) {
    std::map<int, Polynomial> sub;
    for (size_t t = 0; t < args.size(); ++t) sub[static_cast<int>(t) + 1] = args[t];
    return component.substitute(sub);
}

Polynomial var(int j) { return Polynomial::variable(j); }

Polynomial var_sum(int from, int to) {
    Polynomial p;
    for (int j = from; j <= to; ++j) p += var(j);
    return p;
}

// f-block (x_{i+1},...,x_{i+r}) shifted into place.
RationalFunction shifted_block(const RationalFunction& f_comp, int r, int i) {
    std::vector<Polynomial> args;
    args.reserve(static_cast<size_t>(r));
    for (int j = 1; j <= r; ++j) args.push_back(var(i + j));
    return with_arguments(f_comp, args);
}

RationalFunction preari_component(const RationalFunction& fr, int r, const RationalFunction& gs,
                                  int s) {
    RationalFunction total;
    for (int i = 0; i <= s; ++i) {
        RationalFunction fpart = shifted_block(fr, r, i);
        std::vector<Polynomial> gargs;
        gargs.reserve(static_cast<size_t>(s));
        if (i == s) {
            // pure concatenation boundary term
            for (int j = 1; j <= s; ++j) gargs.push_back(var(j));
        } else {
            for (int j = 1; j <= i; ++j) gargs.push_back(var(j));
            gargs.push_back(var_sum(i + 1, i + r + 1));
            for (int j = i + r + 2; j <= r + s; ++j) gargs.push_back(var(j));
        }
        total += fpart * with_arguments(gs, gargs);
    }
    for (int i = 1; i <= s; ++i) {
        RationalFunction fpart = shifted_block(fr, r, i);
        std::vector<Polynomial> gargs;
        gargs.reserve(static_cast<size_t>(s));
        for (int j = 1; j <= i - 1; ++j) gargs.push_back(var(j));
        gargs.push_back(var_sum(i, i + r));
        for (int j = i + r + 1; j <= r + s; ++j) gargs.push_back(var(j));
        total -= fpart * with_arguments(gs, gargs);
    }
    return total;
}

RationalFunction ihara_component(const RationalFunction& fr, int r, const RationalFunction& gs,
                                 int s) {
    RationalFunction total;
    for (int i = 0; i <= s; ++i) {
        std::vector<Polynomial> fargs;
        fargs.reserve(static_cast<size_t>(r));
        for (int j = 1; j <= r; ++j) {
            Polynomial p = var(i + j);
            if (i >= 1) p -= var(i);  // x_0 = 0
            fargs.push_back(p);
        }
        std::vector<Polynomial> gargs;
        gargs.reserve(static_cast<size_t>(s));
        for (int j = 1; j <= i; ++j) gargs.push_back(var(j));
        for (int j = i + r + 1; j <= r + s; ++j) gargs.push_back(var(j));
        total += with_arguments(fr, fargs) * with_arguments(gs, gargs);
    }
    bool negate = r % 2 == 1;
    for (int i = 1; i <= s; ++i) {
        std::vector<Polynomial> fargs;
        fargs.reserve(static_cast<size_t>(r));
        for (int j = 1; j <= r; ++j) fargs.push_back(var(i + r) - var(i + r - j));
        std::vector<Polynomial> gargs;
        gargs.reserve(static_cast<size_t>(s));
        for (int j = 1; j <= i - 1; ++j) gargs.push_back(var(j));
        for (int j = i + r; j <= r + s; ++j) gargs.push_back(var(j));
        RationalFunction term = with_arguments(fr, fargs) * with_arguments(gs, gargs);
        total += negate ? -term : term;
    }
    return total;
}

template <typename Component>
Mould bilinear_action(const Mould& f, const Mould& g, Component&& component, const char* who) {
    require_lie(f, who);
    require_lie(g, who);
    int D = std::min(f.max_depth(), g.max_depth());
    Mould result(D);
    if (f.weight_tag() && g.weight_tag()) result.set_weight_tag(*f.weight_tag() + *g.weight_tag());
    for (int d = 2; d <= D; ++d) {
        RationalFunction comp;
        for (int r = 1; r <= d - 1; ++r) {
            int s = d - r;
            if (f.at(r).is_zero() || g.at(s).is_zero()) continue;
            comp += component(f.at(r), r, g.at(s), s);
        }
        result.set(d, std::move(comp));
    }
    return result;
}

}  // namespace

Mould preari(const Mould& f, const Mould& g) {
    return bilinear_action(f, g, preari_component, "preari");
}

Mould ihara_preaction(const Mould& f, const Mould& g) {
    return bilinear_action(f, g, ihara_component, "linearized Ihara action");
}

Mould ari_bracket(const Mould& f, const Mould& g) { return preari(f, g) - preari(g, f); }

Mould ihara_bracket(const Mould& f, const Mould& g) {
    return ihara_preaction(f, g) - ihara_preaction(g, f);
}

Mould apply_action(Action a, const Mould& f, const Mould& g) {
    return a == Action::ari ? preari(f, g) : ihara_preaction(f, g);
}

Mould apply_bracket(Action a, const Mould& f, const Mould& g) {
    return a == Action::ari ? ari_bracket(f, g) : ihara_bracket(f, g);
}

Mould exp_pre(const Mould& f, Action action) {
    require_lie(f, "exp");
    int D = f.max_depth();
    Mould result = Mould::unit(D) + f;
    Mould power = f;  // f^n, in Q^(n)
    Rational factorial(1);
    for (int n = 2; n <= D; ++n) {
        power = apply_action(action, f, power);
        factorial *= n;
        if (power.is_zero()) break;
        result += power * (1 / factorial);
    }
    if (f.weight_tag() && *f.weight_tag() == 0) result.set_weight_tag(0);
    return result;
}

Mould log_pre(const Mould& F, Action action) {
    require_group(F, "log");
    int D = F.max_depth();
    Mould g = Mould::zero(D);
    for (int d = 1; d <= D; ++d) {
        // exp(g)^(d) only involves g below depth d while g^(d) is still 0
        Mould e = exp_pre(g, action);
        g.set(d, F.at(d) - e.at(d));
    }
    if (F.weight_tag() && *F.weight_tag() == 0) g.set_weight_tag(0);
    return g;
}

Mould ad_pow(const Mould& g, const Mould& f, int n, Action bracket) {
    Mould acc = f;
    for (int k = 0; k < n; ++k) acc = apply_bracket(bracket, acc, g);
    return acc;
}

Mould ad_series(const Mould& g, const Mould& f, Action bracket, bool factorial) {
    require_lie(g, "ad series");
    require_lie(f, "ad series");
    int D = std::min(f.max_depth(), g.max_depth());
    Mould result = f.truncated(D);
    Mould term = f.truncated(D);
    Rational fact(1);
    for (int n = 1; n <= D; ++n) {
        term = apply_bracket(bracket, term, g);
        if (term.is_zero()) break;
        if (factorial) {
            fact *= n;
            result += term * (1 / fact);
        } else {
            result += term;
        }
    }
    return result;
}

Mould adjoint(const Mould& G, const Mould& f, Action bracket) {
    require_group(G, "adjoint");
    Mould g = log_pre(G, bracket == Action::ari ? Action::ari : Action::ihara);
    return ad_series(g, f, bracket, /*factorial=*/true);
}

}  // namespace moulde
