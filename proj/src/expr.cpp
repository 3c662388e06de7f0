#include "expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "errors.hpp"

namespace varfrac::dsl {

namespace {

NodePtr make_literal(double v) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Literal;
    n->literal = v;
    return n;
}

NodePtr make_variable(int slot, std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Variable;
    n->var_slot = slot;
    n->var_name = std::move(name);
    return n;
}

bool is_lit(const NodePtr& n, double v) {
    return n->kind == Node::Kind::Literal && n->literal == v;
}

NodePtr make_negate(NodePtr a) {
    if (a->kind == Node::Kind::Literal) return make_literal(-a->literal);
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Negate;
    n->lhs = std::move(a);
    return n;
}

NodePtr make_binary(BinOp op, NodePtr a, NodePtr b);

// Zero/one folding keeps derivatives readable and makes "the partial is
// identically zero" detectable, which several residual formulas rely on.
NodePtr make_add(NodePtr a, NodePtr b) {
    if (is_lit(a, 0.0)) return b;
    if (is_lit(b, 0.0)) return a;
    if (a->kind == Node::Kind::Literal && b->kind == Node::Kind::Literal)
        return make_literal(a->literal + b->literal);
    return make_binary(BinOp::Add, std::move(a), std::move(b));
}

NodePtr make_sub(NodePtr a, NodePtr b) {
    if (is_lit(b, 0.0)) return a;
    if (is_lit(a, 0.0)) return make_negate(std::move(b));
    if (a->kind == Node::Kind::Literal && b->kind == Node::Kind::Literal)
        return make_literal(a->literal - b->literal);
    return make_binary(BinOp::Sub, std::move(a), std::move(b));
}

NodePtr make_mul(NodePtr a, NodePtr b) {
    if (is_lit(a, 0.0) || is_lit(b, 0.0)) return make_literal(0.0);
    if (is_lit(a, 1.0)) return b;
    if (is_lit(b, 1.0)) return a;
    if (a->kind == Node::Kind::Literal && b->kind == Node::Kind::Literal)
        return make_literal(a->literal * b->literal);
    return make_binary(BinOp::Mul, std::move(a), std::move(b));
}

NodePtr make_div(NodePtr a, NodePtr b) {
    if (is_lit(a, 0.0)) return make_literal(0.0);
    if (is_lit(b, 1.0)) return a;
    return make_binary(BinOp::Div, std::move(a), std::move(b));
}

NodePtr make_pow(NodePtr a, NodePtr b) {
    if (is_lit(b, 1.0)) return a;
    if (is_lit(b, 0.0)) return make_literal(1.0);
    return make_binary(BinOp::Pow, std::move(a), std::move(b));
}

NodePtr make_binary(BinOp op, NodePtr a, NodePtr b) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Binary;
    n->op = op;
    n->lhs = std::move(a);
    n->rhs = std::move(b);
    return n;
}

NodePtr make_call(Func f, NodePtr a) {
    auto n = std::make_shared<Node>();
    n->kind = Node::Kind::Call;
    n->func = f;
    n->lhs = std::move(a);
    return n;
}

// --- lexer -----------------------------------------------------------------

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    double number = 0.0;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view src) : src_(src) { advance(); }

    const Token& peek() const { return tok_; }

    Token next() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t'
                                      || src_[pos_] == '\r' || src_[pos_] == '\n')) {
            if (src_[pos_] == '\n') { ++line_; col_ = 0; }
            ++pos_;
            ++col_;
        }
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= src_.size()) {
            tok_.kind = Tok::End;
            return;
        }
        const char c = src_[pos_];
        if ((c >= '0' && c <= '9') || c == '.') {
            lex_number();
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size()
                   && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            tok_.kind = Tok::Ident;
            tok_.text.assign(src_.substr(start, pos_ - start));
            return;
        }
        ++pos_;
        ++col_;
        switch (c) {
        case '+': tok_.kind = Tok::Plus; return;
        case '-': tok_.kind = Tok::Minus; return;
        case '*':
            if (pos_ < src_.size() && src_[pos_] == '*') {
                throw ParseError("'**' is not an operator; exponentiation is '^'", line_, tok_.col);
            }
            tok_.kind = Tok::Star;
            return;
        case '/': tok_.kind = Tok::Slash; return;
        case '^': tok_.kind = Tok::Caret; return;
        case '(': tok_.kind = Tok::LParen; return;
        case ')': tok_.kind = Tok::RParen; return;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, tok_.col);
        }
    }

    void lex_number() {
        const std::size_t start = pos_;
        const int start_col = col_;
        bool seen_dot = false;
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c >= '0' && c <= '9') {
                ++pos_; ++col_;
            } else if (c == '.') {
                if (seen_dot) throw ParseError("malformed number: repeated '.'", line_, col_);
                seen_dot = true;
                ++pos_; ++col_;
            } else if (c == 'e' || c == 'E') {
                ++pos_; ++col_;
                if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) { ++pos_; ++col_; }
                if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
                    throw ParseError("malformed number: missing exponent digits", line_, col_);
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) { ++pos_; ++col_; }
                break;
            } else {
                break;
            }
        }
        const std::string text(src_.substr(start, pos_ - start));
        if (text == ".") throw ParseError("malformed number '.'", line_, start_col);
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end != text.c_str() + text.size())
            throw ParseError("malformed number '" + text + "'", line_, start_col);
        tok_.kind = Tok::Number;
        tok_.number = v;
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

// --- parser ----------------------------------------------------------------

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars)
        : lexer_(src), vars_(vars) {}

    NodePtr run() {
        if (lexer_.peek().kind == Tok::End)
            throw ParseError("empty expression", 1, 1);
        NodePtr e = parse_expr();
        const Token& t = lexer_.peek();
        if (t.kind != Tok::End)
            throw ParseError("unexpected trailing input", t.line, t.col);
        return e;
    }

private:
    NodePtr parse_expr() {
        NodePtr lhs = parse_term();
        for (;;) {
            const Tok k = lexer_.peek().kind;
            if (k == Tok::Plus) {
                lexer_.next();
                lhs = make_binary(BinOp::Add, lhs, parse_term());
            } else if (k == Tok::Minus) {
                lexer_.next();
                lhs = make_binary(BinOp::Sub, lhs, parse_term());
            } else {
                return lhs;
            }
        }
    }

    NodePtr parse_term() {
        NodePtr lhs = parse_factor();
        for (;;) {
            const Tok k = lexer_.peek().kind;
            if (k == Tok::Star) {
                lexer_.next();
                lhs = make_binary(BinOp::Mul, lhs, parse_factor());
            } else if (k == Tok::Slash) {
                lexer_.next();
                lhs = make_binary(BinOp::Div, lhs, parse_factor());
            } else {
                return lhs;
            }
        }
    }

    // factor := '-' factor | power ; power := atom ('^' factor)?
    // so -t^2 parses as -(t^2) and t^-2 is accepted.
    NodePtr parse_factor() {
        if (lexer_.peek().kind == Tok::Minus) {
            lexer_.next();
            return make_negate(parse_factor());
        }
        return parse_power();
    }

    NodePtr parse_power() {
        NodePtr base = parse_atom();
        if (lexer_.peek().kind == Tok::Caret) {
            lexer_.next();
            return make_binary(BinOp::Pow, base, parse_factor());
        }
        return base;
    }

    NodePtr parse_atom() {
        Token t = lexer_.next();
        switch (t.kind) {
        case Tok::Number:
            return make_literal(t.number);
        case Tok::LParen: {
            NodePtr e = parse_expr();
            expect(Tok::RParen, "expected ')'");
            return e;
        }
        case Tok::Ident: {
            if (lexer_.peek().kind == Tok::LParen) {
                const Func f = lookup_function(t);
                lexer_.next();
                NodePtr arg = parse_expr();
                expect(Tok::RParen, "expected ')' after function argument");
                return make_call(f, arg);
            }
            for (std::size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == t.text) return make_variable(static_cast<int>(i), t.text);
            }
            throw ParseError("unknown identifier '" + t.text + "'", t.line, t.col);
        }
        case Tok::End:
            throw ParseError("unexpected end of input", t.line, t.col);
        default:
            throw ParseError("unexpected token", t.line, t.col);
        }
    }

    static Func lookup_function(const Token& t) {
        if (t.text == "sin") return Func::Sin;
        if (t.text == "cos") return Func::Cos;
        if (t.text == "exp") return Func::Exp;
        if (t.text == "ln") return Func::Ln;
        if (t.text == "abs") return Func::Abs;
        if (t.text == "sqrt") return Func::Sqrt;
        throw ParseError("unknown function '" + t.text + "'", t.line, t.col);
    }

    void expect(Tok k, const char* msg) {
        const Token& t = lexer_.peek();
        if (t.kind != k) throw ParseError(msg, t.line, t.col);
        lexer_.next();
    }

    Lexer lexer_;
    const std::vector<std::string>& vars_;
};

// --- evaluation ------------------------------------------------------------

bool literal_is_integer(double v) {
    return std::isfinite(v) && v == std::floor(v);
}

double eval_node(const Node& n, std::span<const double> values) {
    switch (n.kind) {
    case Node::Kind::Literal:
        return n.literal;
    case Node::Kind::Variable:
        return values[static_cast<std::size_t>(n.var_slot)];
    case Node::Kind::Negate:
        return -eval_node(*n.lhs, values);
    case Node::Kind::Binary: {
        const double a = eval_node(*n.lhs, values);
        switch (n.op) {
        case BinOp::Add: return a + eval_node(*n.rhs, values);
        case BinOp::Sub: return a - eval_node(*n.rhs, values);
        case BinOp::Mul: return a * eval_node(*n.rhs, values);
        case BinOp::Div: {
            const double b = eval_node(*n.rhs, values);
            if (b == 0.0) throw EvalError("division by zero");
            return a / b;
        }
        case BinOp::Pow: {
            const double b = eval_node(*n.rhs, values);
            if (n.rhs->kind == Node::Kind::Literal) {
                if (a == 0.0 && b < 0.0) throw EvalError("zero raised to a negative power");
                if (a < 0.0 && !literal_is_integer(b))
                    throw EvalError("negative base with non-integer exponent");
                return std::pow(a, b);
            }
            // Non-literal exponent means exp(b*ln(a)); the base must be positive.
            if (!(a > 0.0))
                throw EvalError("non-literal exponent requires a positive base, got base "
                                + std::to_string(a));
            return std::pow(a, b);
        }
        }
        throw EvalError("corrupt binary node");
    }
    case Node::Kind::Call: {
        const double a = eval_node(*n.lhs, values);
        switch (n.func) {
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Exp: return std::exp(a);
        case Func::Ln:
            if (!(a > 0.0)) throw EvalError("ln of a non-positive value " + std::to_string(a));
            return std::log(a);
        case Func::Abs: return std::fabs(a);
        case Func::Sqrt:
            if (a < 0.0) throw EvalError("sqrt of a negative value " + std::to_string(a));
            return std::sqrt(a);
        }
        throw EvalError("corrupt call node");
    }
    }
    throw EvalError("corrupt expression node");
}

// --- differentiation -------------------------------------------------------

NodePtr diff_node(const NodePtr& n, int slot);

NodePtr diff_pow(const NodePtr& n, int slot) {
    const NodePtr& u = n->lhs;
    const NodePtr& v = n->rhs;
    NodePtr du = diff_node(u, slot);
    if (v->kind == Node::Kind::Literal) {
        // d(u^c) = c*u^(c-1)*du
        NodePtr power = make_pow(u, make_literal(v->literal - 1.0));
        return make_mul(make_mul(make_literal(v->literal), power), du);
    }
    // d(u^v) = u^v * (dv*ln u + v*du/u)
    NodePtr dv = diff_node(v, slot);
    NodePtr term1 = make_mul(dv, make_call(Func::Ln, u));
    NodePtr term2 = make_mul(v, make_div(du, u));
    return make_mul(make_pow(u, v), make_add(term1, term2));
}

NodePtr diff_node(const NodePtr& n, int slot) {
    switch (n->kind) {
    case Node::Kind::Literal:
        return make_literal(0.0);
    case Node::Kind::Variable:
        return make_literal(n->var_slot == slot ? 1.0 : 0.0);
    case Node::Kind::Negate:
        return make_negate(diff_node(n->lhs, slot));
    case Node::Kind::Binary:
        switch (n->op) {
        case BinOp::Add: return make_add(diff_node(n->lhs, slot), diff_node(n->rhs, slot));
        case BinOp::Sub: return make_sub(diff_node(n->lhs, slot), diff_node(n->rhs, slot));
        case BinOp::Mul:
            return make_add(make_mul(diff_node(n->lhs, slot), n->rhs),
                            make_mul(n->lhs, diff_node(n->rhs, slot)));
        case BinOp::Div:
            return make_div(make_sub(make_mul(diff_node(n->lhs, slot), n->rhs),
                                     make_mul(n->lhs, diff_node(n->rhs, slot))),
                            make_pow(n->rhs, make_literal(2.0)));
        case BinOp::Pow:
            return diff_pow(n, slot);
        }
        throw EvalError("corrupt binary node");
    case Node::Kind::Call: {
        NodePtr du = diff_node(n->lhs, slot);
        switch (n->func) {
        case Func::Sin: return make_mul(make_call(Func::Cos, n->lhs), du);
        case Func::Cos: return make_negate(make_mul(make_call(Func::Sin, n->lhs), du));
        case Func::Exp: return make_mul(make_call(Func::Exp, n->lhs), du);
        case Func::Ln: return make_div(du, n->lhs);
        case Func::Sqrt:
            return make_div(du, make_mul(make_literal(2.0), make_call(Func::Sqrt, n->lhs)));
        case Func::Abs:
            // sign(u)*du, written u/abs(u)*du; undefined (domain error) at u = 0.
            return make_mul(make_div(n->lhs, make_call(Func::Abs, n->lhs)), du);
        }
        throw EvalError("corrupt call node");
    }
    }
    throw EvalError("corrupt expression node");
}

// --- printing --------------------------------------------------------------

const char* func_name(Func f) {
    switch (f) {
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Abs: return "abs";
    case Func::Sqrt: return "sqrt";
    }
    return "?";
}

void print_node(const Node& n, std::ostream& os) {
    switch (n.kind) {
    case Node::Kind::Literal: {
        if (n.literal < 0) {
            os << "(";
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.literal);
            os << buf << ")";
        } else {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.literal);
            os << buf;
        }
        return;
    }
    case Node::Kind::Variable:
        os << n.var_name;
        return;
    case Node::Kind::Negate:
        os << "(-";
        print_node(*n.lhs, os);
        os << ")";
        return;
    case Node::Kind::Binary: {
        const char* sym = "?";
        switch (n.op) {
        case BinOp::Add: sym = " + "; break;
        case BinOp::Sub: sym = " - "; break;
        case BinOp::Mul: sym = " * "; break;
        case BinOp::Div: sym = " / "; break;
        case BinOp::Pow: sym = " ^ "; break;
        }
        os << "(";
        print_node(*n.lhs, os);
        os << sym;
        print_node(*n.rhs, os);
        os << ")";
        return;
    }
    case Node::Kind::Call:
        os << func_name(n.func) << "(";
        print_node(*n.lhs, os);
        os << ")";
        return;
    }
}

} // namespace

// --- Expr ------------------------------------------------------------------

Expr Expr::parse(std::string_view src, std::vector<std::string> variables) {
    auto vars = std::make_shared<const std::vector<std::string>>(std::move(variables));
    Parser parser(src, *vars);
    return Expr(parser.run(), std::move(vars));
}

Expr Expr::constant(double value, std::vector<std::string> variables) {
    auto vars = std::make_shared<const std::vector<std::string>>(std::move(variables));
    return Expr(make_literal(value), std::move(vars));
}

double Expr::eval(std::span<const double> values) const {
    if (values.size() < vars_->size())
        throw EvalError("expression evaluated with too few variable values");
    const double v = eval_node(*root_, values);
    if (!std::isfinite(v)) throw EvalError("expression evaluated to a non-finite value");
    return v;
}

double Expr::eval(const std::map<std::string, double>& bindings) const {
    std::vector<double> values(vars_->size());
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        auto it = bindings.find((*vars_)[i]);
        if (it == bindings.end()) throw EvalError("missing binding for variable '" + (*vars_)[i] + "'");
        values[i] = it->second;
    }
    return eval(values);
}

Expr Expr::derivative(const std::string& variable) const {
    int slot = -1;
    for (std::size_t i = 0; i < vars_->size(); ++i) {
        if ((*vars_)[i] == variable) { slot = static_cast<int>(i); break; }
    }
    if (slot < 0) throw EvalError("cannot differentiate with respect to undeclared variable '" + variable + "'");
    return Expr(diff_node(root_, slot), vars_);
}

std::string Expr::str() const {
    std::ostringstream os;
    print_node(*root_, os);
    return os.str();
}

} // namespace varfrac::dsl
