#ifndef MOULDE_BRACKET_EXPR_HPP
#define MOULDE_BRACKET_EXPR_HPP

#include <memory>

#include "moulde/lie.hpp"

namespace moulde {

// Right-nested bracket expression over named moulds:
// {f_1,...,f_n} = {f_1,{f_2,...,f_n}}.
struct BracketExpr {
    std::string leaf;                                 // set iff children empty
    std::vector<std::shared_ptr<BracketExpr>> children;  // n >= 2 for nodes

    bool is_leaf() const { return children.empty(); }
};

// Grammar: expr := name | '{' expr (',' expr)+ '}'
BracketExpr parse_bracket_expr(const std::string& text);

Mould evaluate_bracket_expr(const BracketExpr& e, Action bracket, int max_depth);

}  // namespace moulde

#endif
