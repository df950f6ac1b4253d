#include "nscas/parser.hpp"

#include <cctype>
#include <sstream>

#include "nscas/errors.hpp"

namespace nscas {

namespace {

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) { throw SyntaxError(msg, pos_); }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected identifier");
        return text_.substr(start, pos_ - start);
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExprAst parse() {
        ExprAst e = expr();
        if (!lex_.eof()) lex_.fail("trailing input");
        return e;
    }

    ExprAst expr() {
        ExprAst sum;
        sum.kind = ExprAst::Kind::sum;
        int sign = 1;
        if (lex_.accept('-')) sign = -1;
        sum.children.push_back(term());
        sum.tags.push_back(sign);
        while (true) {
            if (lex_.accept('+')) {
                sum.children.push_back(term());
                sum.tags.push_back(1);
            } else if (lex_.accept('-')) {
                sum.children.push_back(term());
                sum.tags.push_back(-1);
            } else {
                break;
            }
        }
        if (sum.children.size() == 1 && sum.tags[0] == 1) return sum.children[0];
        return sum;
    }

    ExprAst term() {
        ExprAst prod;
        prod.kind = ExprAst::Kind::product;
        prod.children.push_back(factor());
        prod.tags.push_back(0);
        while (true) {
            if (lex_.accept('*')) {
                prod.children.push_back(factor());
                prod.tags.push_back(0);
            } else if (lex_.accept('/')) {
                prod.children.push_back(factor());
                prod.tags.push_back(1);
            } else {
                break;
            }
        }
        if (prod.children.size() == 1) return prod.children[0];
        return prod;
    }

    ExprAst factor() {
        ExprAst base = primary();
        if (lex_.accept('^')) {
            ExprAst pw;
            pw.kind = ExprAst::Kind::power;
            pw.exponent = static_cast<int>(lex_.integer().get_si());
            pw.children.push_back(std::move(base));
            return pw;
        }
        return base;
    }

    ExprAst primary() {
        char c = lex_.peek();
        if (c == '(') {
            lex_.expect('(');
            ExprAst e = expr();
            lex_.expect(')');
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            ExprAst n;
            n.kind = ExprAst::Kind::integer;
            n.value = Rational(lex_.integer());
            return n;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = lex_.ident();
            if ((name == "L" || name == "G") && lex_.peek() == '[') {
                return gen_token(name);
            }
            ExprAst id;
            id.kind = ExprAst::Kind::ident;
            id.name = std::move(name);
            return id;
        }
        lex_.fail("expected expression");
    }

    ExprAst gen_token(const std::string& kind) {
        lex_.expect('[');
        bool neg = lex_.accept('-');
        mpz_class num = lex_.integer();
        mpz_class den = 1;
        if (lex_.accept('/')) den = lex_.integer();
        lex_.expect(']');
        if (den != 1 && den != 2) lex_.fail("generator index must be n or n/2");
        std::int64_t doubled = (den == 1 ? 2 * num.get_si() : num.get_si());
        if (neg) doubled = -doubled;
        HalfInt idx = HalfInt::halves(doubled);
        if (kind == "L" && !idx.is_integer())
            throw IndexParityError("L index must be an integer: L[" + idx.str() + "]");
        if (kind == "G" && !idx.is_half_odd())
            throw IndexParityError("G index must be half-odd: G[" + idx.str() + "]");
        ExprAst g;
        g.kind = ExprAst::Kind::gen;
        g.generator = Generator(idx);
        return g;
    }

private:
    Lexer lex_;
};

bool pure_scalar(const Element& e) {
    for (const auto& [m, c] : e.terms())
        if (!m.is_unit()) return false;
    return true;
}

Scalar as_scalar(const Element& e) {
    return e.coeff(Monomial{});
}

}  // namespace

ExprAst parse_expr(const std::string& text) { return Parser(text).parse(); }

Generator parse_generator(const std::string& text) {
    ExprAst ast = parse_expr(text);
    if (ast.kind != ExprAst::Kind::gen) throw SyntaxError("expected a single generator token", 0);
    return ast.generator;
}

Element elaborate(const ExprAst& ast, const ScalarEnv& env) {
    switch (ast.kind) {
        case ExprAst::Kind::integer:
            return Element(Scalar(ast.value));
        case ExprAst::Kind::ident: {
            auto it = env.find(ast.name);
            if (it != env.end()) return Element(it->second);
            if (auto v = var_by_name(ast.name)) return Element(Scalar::variable(*v));
            throw SyntaxError("unknown identifier: " + ast.name, 0);
        }
        case ExprAst::Kind::gen:
            return Element(ast.generator);
        case ExprAst::Kind::negate:
            return -elaborate(ast.children[0], env);
        case ExprAst::Kind::power: {
            if (ast.exponent < 0) throw SyntaxError("negative exponent", 0);
            const ExprAst& base = ast.children[0];
            if (base.kind == ExprAst::Kind::gen && base.generator.odd() && ast.exponent > 1)
                throw IndexParityError("odd generator squares are not monomials; rewrite " +
                                       base.generator.str() + "^2 as L[" +
                                       (base.generator.index() + base.generator.index()).str() +
                                       "]");
            Element b = elaborate(base, env);
            Element r(1);
            for (int i = 0; i < ast.exponent; ++i) r = multiply(r, b);
            return r;
        }
        case ExprAst::Kind::sum: {
            Element r;
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                Element c = elaborate(ast.children[i], env);
                r = ast.tags[i] > 0 ? r + c : r - c;
            }
            return r;
        }
        case ExprAst::Kind::product: {
            Element r(1);
            for (std::size_t i = 0; i < ast.children.size(); ++i) {
                Element c = elaborate(ast.children[i], env);
                if (ast.tags[i] == 0) {
                    r = multiply(r, c);
                } else {
                    if (!pure_scalar(c)) throw SyntaxError("division by a non-scalar", 0);
                    Scalar d = as_scalar(c);
                    if (d.is_zero()) throw DivisionByZero();
                    r = (Scalar(1) / d) * r;
                }
            }
            return r;
        }
    }
    throw SyntaxError("malformed expression tree", 0);
}

Scalar elaborate_scalar(const ExprAst& ast, const ScalarEnv& env) {
    Element e = elaborate(ast, env);
    if (!pure_scalar(e)) throw SyntaxError("expected a scalar expression", 0);
    return as_scalar(e);
}

Scalar parse_scalar(const std::string& text, const ScalarEnv& env) {
    return elaborate_scalar(parse_expr(text), env);
}

Element parse_element(const std::string& text, const ScalarEnv& env) {
    return elaborate(parse_expr(text), env);
}

// --- rule files -----------------------------------------------------------

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

}  // namespace

StateSpace RuleFile::space() const {
    StateSpace s(base_weight, central);
    for (const BaseDecl& b : bases) s.declare_base(b.head, states.at(b.parent), b.direction);
    for (const Rule& r : rules) s.add_rule(r);
    return s;
}

StateVector RuleFile::state_vector(const std::string& expr_text) const {
    // Linear combination of state names with scalar coefficients.
    ExprAst ast = parse_expr(expr_text);
    std::vector<std::pair<ExprAst, int>> terms;
    if (ast.kind == ExprAst::Kind::sum) {
        for (std::size_t i = 0; i < ast.children.size(); ++i)
            terms.push_back({ast.children[i], ast.tags[i]});
    } else {
        terms.push_back({ast, 1});
    }
    StateVector out;
    for (const auto& [node, sign] : terms) {
        std::vector<ExprAst> factors;
        std::vector<int> tags;
        if (node.kind == ExprAst::Kind::product) {
            factors = node.children;
            tags = node.tags;
        } else {
            factors = {node};
            tags = {0};
        }
        Scalar coeff(sign);
        const StateWord* word = nullptr;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            const ExprAst& f = factors[i];
            auto is_state = [&](const ExprAst& n) {
                return n.kind == ExprAst::Kind::ident && states.contains(n.name);
            };
            if (tags[i] == 0 && is_state(f)) {
                if (word) throw SyntaxError("state words cannot be multiplied", 0);
                word = &states.at(f.name);
                continue;
            }
            Scalar c = elaborate_scalar(f, lets);
            coeff = tags[i] == 0 ? coeff * c : coeff / c;
        }
        if (word) {
            out.add(*word, coeff);
        } else {
            if (!coeff.is_zero()) throw SyntaxError("expected a state vector or 0", 0);
        }
    }
    return out;
}

RuleFile parse_rule_file(const std::string& text) {
    RuleFile rf;
    rf.states["v"] = StateWord{};
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw SyntaxError("rule file line " + std::to_string(lineno) + ": " + msg, 0);
    };
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = tokens_of(line);
        if (tok.empty()) continue;
        if (tok[0] == "let") {
            // let name = <scalar expr>
            if (tok.size() < 4 || tok[2] != "=") fail("expected: let <name> = <expr>");
            std::string rhs;
            for (std::size_t i = 3; i < tok.size(); ++i) rhs += tok[i];
            rf.lets[tok[1]] = parse_scalar(rhs, rf.lets);
        } else if (tok[0] == "weight" || tok[0] == "central") {
            std::string rhs;
            for (std::size_t i = 1; i < tok.size(); ++i) rhs += tok[i];
            Scalar v = parse_scalar(rhs, rf.lets);
            (tok[0] == "weight" ? rf.base_weight : rf.central) = v;
        } else if (tok[0] == "state") {
            // state name = <gen> <parent state> [+|-]
            if (tok.size() < 5 || tok.size() > 6 || tok[2] != "=")
                fail("expected: state <name> = <gen> <parent> [+|-]");
            Generator head = parse_generator(tok[3]);
            const std::string& parent = tok[4];
            auto bit = rf.states.find(parent);
            if (bit == rf.states.end()) fail("unknown parent state: " + parent);
            int direction = head.index().doubled() > 0 ? 1 : -1;
            if (tok.size() == 6) {
                if (tok[5] == "+")
                    direction = 1;
                else if (tok[5] == "-")
                    direction = -1;
                else
                    fail("direction must be + or -");
            }
            if (rf.states.contains(tok[1])) fail("state already declared: " + tok[1]);
            rf.states[tok[1]] = bit->second.cons(head);
            rf.bases.push_back(RuleFile::BaseDecl{tok[1], head, parent, direction});
        } else if (tok[0] == "rule") {
            // rule <gen> <target state> -> <rhs>
            auto arrow = std::find(tok.begin(), tok.end(), "->");
            if (arrow == tok.end() || arrow - tok.begin() != 3) {
                fail("expected: rule <gen> <state> -> <rhs>");
            }
            Generator head = parse_generator(tok[1]);
            auto sit = rf.states.find(tok[2]);
            if (sit == rf.states.end()) fail("unknown state: " + tok[2]);
            std::string rhs;
            for (auto it = arrow + 1; it != tok.end(); ++it) rhs += *it;
            rf.rules.push_back(Rule{head, sit->second, rf.state_vector(rhs)});
        } else {
            fail("unknown directive: " + tok[0]);
        }
    }
    return rf;
}

}  // namespace nscas
