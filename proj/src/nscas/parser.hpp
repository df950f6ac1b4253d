#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "nscas/rewrite.hpp"

namespace nscas {

// AST for the expression language. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := primary ['^' nat]
//   primary:= integer | ident | gen | '(' expr ')'
//   gen    := ('L'|'G') '[' signed-int ['/' int] ']'
// Rationals like 1/2 come out of the division operator.
struct ExprAst {
    enum class Kind { sum, product, power, negate, integer, ident, gen };
    Kind kind;
    // sum: children with signs; product: children with divide flags
    std::vector<ExprAst> children;
    std::vector<int> tags;  // sum: +1/-1; product: 0 = multiply, 1 = divide
    int exponent = 0;       // power
    Rational value;         // integer
    std::string name;       // ident
    Generator generator{HalfInt::whole(0)};  // gen
};

ExprAst parse_expr(const std::string& text);

// Single generator token, e.g. "L[-2]" or "G[3/2]".
Generator parse_generator(const std::string& text);

// Identifier environment used during elaboration; names shadow the fixed
// indeterminate alphabet.
using ScalarEnv = std::map<std::string, Scalar>;

// Elaborates to an element of U(NS). Unknown identifiers resolve to
// indeterminates when possible, else SyntaxError.
Element elaborate(const ExprAst& ast, const ScalarEnv& env = {});

// Elaborates and requires a pure scalar (no generators).
Scalar elaborate_scalar(const ExprAst& ast, const ScalarEnv& env = {});
Scalar parse_scalar(const std::string& text, const ScalarEnv& env = {});
Element parse_element(const std::string& text, const ScalarEnv& env = {});

// --- rule files -----------------------------------------------------------
//
//   # comment
//   weight mu - 1/2
//   central chat
//   let tau = (mu+1)*(2*mu-1)/(mu-1)
//   state x = G[3/2] v +
//   state y = G[-1/2] x +
//   rule G[1/2] v -> 0
//   rule G[1/2] y -> tau * x
// A state line declares head * parent as a named base; the trailing +/- is
// its tower direction, defaulting to the sign of the head's index.
struct RuleFile {
    struct BaseDecl {
        std::string name;
        Generator head;
        std::string parent;
        int direction;
    };
    Scalar base_weight{0};
    Scalar central = Scalar::variable(Var::chat);
    ScalarEnv lets;
    std::map<std::string, StateWord> states;
    std::vector<BaseDecl> bases;
    std::vector<Rule> rules;

    StateSpace space() const;
    StateVector state_vector(const std::string& expr_text) const;
};

RuleFile parse_rule_file(const std::string& text);

}  // namespace nscas
