#include "moulde/mould.hpp"

#include <nlohmann/json.hpp>

namespace moulde {

Mould::Mould(int max_depth, Rational depth0) : depth0_(std::move(depth0)) {
    if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");
    comp_.resize(static_cast<size_t>(max_depth));
}

Mould Mould::concentrated(int depth, RationalFunction component, int max_depth) {
    Mould f(max_depth);
    if (depth >= 1 && depth <= max_depth) f.set(depth, std::move(component));
    return f;
}

const RationalFunction& Mould::at(int r) const {
    if (r < 1 || r > max_depth()) throw std::out_of_range("mould depth out of range");
    return comp_[static_cast<size_t>(r) - 1];
}

void Mould::set(int r, RationalFunction f) {
    if (r < 1 || r > max_depth()) throw std::out_of_range("mould depth out of range");
    if (f.num_variables() > r)
        throw std::invalid_argument("depth-" + std::to_string(r) +
                                    " component uses a variable beyond x" + std::to_string(r));
    comp_[static_cast<size_t>(r) - 1] = std::move(f);
}

bool Mould::is_zero() const {
    if (depth0_ != 0) return false;
    for (const auto& c : comp_)
        if (!c.is_zero()) return false;
    return true;
}

int Mould::min_depth() const {
    if (depth0_ != 0) return 0;
    for (int r = 1; r <= max_depth(); ++r)
        if (!at(r).is_zero()) return r;
    return -1;
}

Mould Mould::truncated(int new_max_depth) const {
    Mould f(new_max_depth, depth0_);
    f.weight_ = weight_;
    for (int r = 1; r <= std::min(new_max_depth, max_depth()); ++r) f.set(r, at(r));
    return f;
}

Mould Mould::operator-() const {
    Mould f(max_depth(), -depth0_);
    f.weight_ = weight_;
    for (int r = 1; r <= max_depth(); ++r) f.set(r, -at(r));
    return f;
}

Mould operator+(const Mould& a, const Mould& b) {
    int d = std::min(a.max_depth(), b.max_depth());
    Mould f(d, a.depth0_ + b.depth0_);
    if (a.weight_ && b.weight_ && *a.weight_ == *b.weight_) f.weight_ = a.weight_;
    for (int r = 1; r <= d; ++r) f.set(r, a.at(r) + b.at(r));
    return f;
}

Mould operator-(const Mould& a, const Mould& b) { return a + (-b); }

Mould& Mould::operator*=(const Rational& c) {
    depth0_ *= c;
    RationalFunction s{c};
    for (auto& comp : comp_) comp *= s;
    return *this;
}

bool equal_through_depth(const Mould& a, const Mould& b, int depth) {
    if (a.depth0_ != b.depth0_) return false;
    if (depth > a.max_depth() || depth > b.max_depth())
        throw std::invalid_argument("comparison depth exceeds truncation");
    for (int r = 1; r <= depth; ++r)
        if (!(a.at(r) == b.at(r))) return false;
    return true;
}

RationalFunction evaluate(const Mould& f, const Word& w) {
    if (w.empty()) return RationalFunction{f.depth0()};
    int r = static_cast<int>(w.size());
    if (r > f.max_depth())
        throw std::out_of_range("word longer than the mould truncation depth");
    std::map<int, Polynomial> sub;
    for (int j = 0; j < r; ++j) sub[j + 1] = Polynomial::variable(w[static_cast<size_t>(j)]);
    return f.at(r).substitute(sub);
}

RationalFunction evaluate(const Mould& f, const WordSum& s) {
    RationalFunction sum;
    for (const auto& [w, c] : s.terms()) sum += c * evaluate(f, w);
    return sum;
}

namespace {

template <typename SubstFor>
Mould apply_pointwise(const Mould& f, SubstFor&& subst_for) {
    Mould g(f.max_depth(), f.depth0());
    g.set_weight_tag(f.weight_tag());
    for (int r = 1; r <= f.max_depth(); ++r) {
        if (f.at(r).is_zero()) continue;
        g.set(r, f.at(r).substitute(subst_for(r)));
    }
    return g;
}

}  // namespace

Mould sharp(const Mould& f) {
    return apply_pointwise(f, [](int r) {
        std::map<int, Polynomial> sub;
        Polynomial prefix;
        for (int i = 1; i <= r; ++i) {
            prefix += Polynomial::variable(i);
            sub[i] = prefix;
        }
        return sub;
    });
}

Mould flat(const Mould& f) {
    return apply_pointwise(f, [](int r) {
        std::map<int, Polynomial> sub;
        for (int i = 1; i <= r; ++i) {
            Polynomial p = Polynomial::variable(i);
            if (i > 1) p -= Polynomial::variable(i - 1);
            sub[i] = p;
        }
        return sub;
    });
}

Mould anti(const Mould& f) {
    return apply_pointwise(f, [](int r) {
        std::map<int, Polynomial> sub;
        for (int i = 1; i <= r; ++i) sub[i] = Polynomial::variable(r + 1 - i);
        return sub;
    });
}

Mould varphi(const Mould& f) {
    Mould g = anti(f);
    for (int r = 1; r <= g.max_depth(); ++r) {
        if (r % 2 == 1) g.set(r, -g.at(r));
    }
    return g;
}

Mould swap_flat(const Mould& f) {
    // f(x_r, x_{r-1}-x_r, ..., x_1-x_2): slot i receives x_{r+1-i} - x_{r+2-i}
    return apply_pointwise(f, [](int r) {
        std::map<int, Polynomial> sub;
        for (int i = 1; i <= r; ++i) {
            Polynomial p = Polynomial::variable(r + 1 - i);
            if (i > 1) p -= Polynomial::variable(r + 2 - i);
            sub[i] = p;
        }
        return sub;
    });
}

std::string mould_to_json(const Mould& f) {
    nlohmann::json j;
    j["name"] = f.name;
    if (f.weight_tag())
        j["weight"] = *f.weight_tag();
    else
        j["weight"] = nullptr;
    j["max_depth"] = f.max_depth();
    j["depth0"] = to_string(f.depth0());
    nlohmann::json comps = nlohmann::json::object();
    for (int r = 1; r <= f.max_depth(); ++r) {
        if (f.at(r).is_zero()) continue;
        comps[std::to_string(r)] = f.at(r).to_string();
    }
    j["components"] = comps;
    return j.dump(2);
}

Mould mould_from_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    Mould f(j.at("max_depth").get<int>());
    if (j.contains("depth0")) f.set_depth0(parse_rational(j.at("depth0").get<std::string>()));
    if (j.contains("weight") && !j.at("weight").is_null())
        f.set_weight_tag(j.at("weight").get<int>());
    if (j.contains("name") && j.at("name").is_string()) f.name = j.at("name").get<std::string>();
    if (j.contains("components"))
        for (const auto& [key, val] : j.at("components").items())
            f.set(std::stoi(key), parse_ratfun(val.get<std::string>()));
    return f;
}

}  // namespace moulde
