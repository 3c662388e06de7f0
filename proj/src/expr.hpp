#ifndef VARFRAC_EXPR_HPP
#define VARFRAC_EXPR_HPP

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace varfrac::dsl {

enum class BinOp { Add, Sub, Mul, Div, Pow };
enum class Func { Sin, Cos, Exp, Ln, Abs, Sqrt };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Node {
    enum class Kind { Literal, Variable, Negate, Binary, Call } kind;
    double literal = 0.0;
    int var_slot = -1;
    std::string var_name;
    BinOp op = BinOp::Add;
    Func func = Func::Sin;
    NodePtr lhs, rhs; // unary/call use lhs only
};

/// Immutable expression over a fixed, declared variable set.
///
/// Grammar: + - * / ^ with standard precedence (^ binds tightest, then unary
/// minus, then * /, then + -), left-associative except ^ (right-associative),
/// parentheses, and the functions sin, cos, exp, ln, abs, sqrt. Identifiers
/// must come from the declared set.
class Expr {
public:
    /// Parses source text; throws ParseError with line/column on bad input,
    /// including undeclared identifiers.
    static Expr parse(std::string_view src, std::vector<std::string> variables);

    /// Wraps a constant as an expression with the given variable set.
    static Expr constant(double value, std::vector<std::string> variables);

    /// Evaluates with values[i] bound to variables()[i]. IEEE doubles
    /// throughout; ln/sqrt of negatives, division by zero and non-finite
    /// results raise EvalError instead of propagating NaN/Inf.
    double eval(std::span<const double> values) const;

    /// Convenience evaluation by name; every declared variable must be bound.
    double eval(const std::map<std::string, double>& bindings) const;

    /// Exact symbolic partial derivative with respect to a declared variable.
    /// No simplification beyond dropping literal-zero terms. The derivative
    /// of abs is left as u/abs(u), which raises a domain error at u = 0.
    Expr derivative(const std::string& variable) const;

    /// Round-trippable textual form (fully parenthesized).
    std::string str() const;

    const std::vector<std::string>& variables() const { return *vars_; }

    bool is_literal() const { return root_->kind == Node::Kind::Literal; }
    bool is_literal_zero() const { return is_literal() && root_->literal == 0.0; }
    double literal_value() const { return root_->literal; }

    const NodePtr& root() const { return root_; }

private:
    Expr(NodePtr root, std::shared_ptr<const std::vector<std::string>> vars)
        : root_(std::move(root)), vars_(std::move(vars)) {}

    NodePtr root_;
    std::shared_ptr<const std::vector<std::string>> vars_;
};

} // namespace varfrac::dsl

#endif
