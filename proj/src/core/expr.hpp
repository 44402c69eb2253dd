#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "jet.hpp"
#include "rule.hpp"

namespace quadcert {

struct ParseError : std::runtime_error {
    std::size_t offset;
    ParseError(const std::string& msg, std::size_t off)
        : std::runtime_error(msg + " (at byte " + std::to_string(off) + ")"),
          offset(off) {}
};

enum class UnaryOp { Neg, Exp, Ln, Sin, Cos, Sqrt, Abs };
enum class BinaryOp { Add, Sub, Mul, Div };

/// Expression AST node. Power nodes carry a constant exponent.
struct ExprNode {
    enum class Kind { Constant, Variable, Unary, Binary, Power };

    Kind kind;
    double number = 0.0;     // Constant value or Power exponent
    UnaryOp uop{};
    BinaryOp bop{};
    std::shared_ptr<const ExprNode> left;   // unary/power child, binary lhs
    std::shared_ptr<const ExprNode> right;  // binary rhs
};

using ExprPtr = std::shared_ptr<const ExprNode>;

/// Parses the expression grammar:
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := atom ('^' number)?
///   atom   := number | 'x' | ident '(' expr ')' | '(' expr ')' | '-' atom
/// Whitespace insensitive, left associative.
ExprPtr parse(const std::string& text);

/// Canonical text form; render(parse(s)) reparses to an identical tree.
std::string render(const ExprPtr& expr);

Jet2 eval_jet2(const ExprPtr& expr, double x);

/// Function handle bundle consumed by the oracle and the integrator.
struct IntegrandSpec {
    std::function<double(double)> f;
    std::function<double(double)> d2;
    // Exact interval mean (1/(b-a)) * integral of f, when known in closed form.
    std::function<double(double, double)> exact_mean;
    std::string label;

    bool has_exact() const { return static_cast<bool>(exact_mean); }
};

/// User-facing function: a parsed expression or a builtin with closed-form
/// second derivative and exact integral attached.
struct FunctionSpec {
    IntegrandSpec integrand;
    ExprPtr expr; // null for builtins
    std::optional<bool> declared_convex_abs_d2;
};

FunctionSpec make_expression_function(const std::string& text);

/// Builtin catalog. Accepted names: "power(n)", "reciprocal", "exp", "ln",
/// "monomial-sum(c0,c1,...)" (coefficients of x^0, x^1, ...).
FunctionSpec make_builtin(const std::string& name);

/// Samples g at n+1 equispaced points and tests midpoint convexity on each
/// consecutive triple. A true result is evidence of convexity, not proof.
bool convexity_probe(const std::function<double(double)>& g,
                     const Interval& iv, int n = 256);

} // namespace quadcert
