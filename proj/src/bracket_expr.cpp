#include "moulde/bracket_expr.hpp"

#include <cctype>

#include "moulde/named.hpp"

namespace moulde {

namespace {

struct ExprParser {
    const std::string& text;
    size_t pos = 0;

    explicit ExprParser(const std::string& t) : text(t) {}

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument(what + " at offset " + std::to_string(pos));
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    BracketExpr parse() {
        skip_ws();
        if (peek() == '{') {
            ++pos;
            BracketExpr node;
            node.children.push_back(std::make_shared<BracketExpr>(parse()));
            while (peek() == ',') {
                ++pos;
                node.children.push_back(std::make_shared<BracketExpr>(parse()));
            }
            if (peek() != '}') fail("expected '}'");
            ++pos;
            if (node.children.size() < 2) fail("bracket needs at least two entries");
            return node;
        }
        std::string name;
        skip_ws();
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == ':' || c == '-' || c == '_' ||
                c == '^' || c == '.') {
                name += c;
                ++pos;
            } else {
                break;
            }
        }
        if (name.empty()) fail("expected mould name");
        BracketExpr leaf;
        leaf.leaf = name;
        return leaf;
    }
};

}  // namespace

BracketExpr parse_bracket_expr(const std::string& text) {
    ExprParser p(text);
    BracketExpr e = p.parse();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return e;
}

Mould evaluate_bracket_expr(const BracketExpr& e, Action bracket, int max_depth) {
    if (e.is_leaf()) return make_named(e.leaf, max_depth);
    // {f_1,...,f_n} = {f_1, {f_2,...,f_n}}
    Mould acc = evaluate_bracket_expr(*e.children.back(), bracket, max_depth);
    for (size_t j = e.children.size() - 1; j-- > 0;)
        acc = apply_bracket(bracket, evaluate_bracket_expr(*e.children[j], bracket, max_depth),
                            acc);
    return acc;
}

}  // namespace moulde
