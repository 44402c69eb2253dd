#include "expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace quadcert {

namespace {

ExprPtr make_constant(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Constant;
    n->number = v;
    return n;
}

ExprPtr make_variable() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Variable;
    return n;
}

ExprPtr make_unary(UnaryOp op, ExprPtr child) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Unary;
    n->uop = op;
    n->left = std::move(child);
    return n;
}

ExprPtr make_binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Binary;
    n->bop = op;
    n->left = std::move(lhs);
    n->right = std::move(rhs);
    return n;
}

ExprPtr make_power(ExprPtr base, double exponent) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Power;
    n->number = exponent;
    n->left = std::move(base);
    return n;
}

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprPtr run() {
        if (text_.empty()) throw ParseError("empty expression", 0);
        ExprPtr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return e;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
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

    ExprPtr parse_expr() {
        ExprPtr lhs = parse_term();
        for (;;) {
            if (accept('+'))
                lhs = make_binary(BinaryOp::Add, lhs, parse_term());
            else if (accept('-'))
                lhs = make_binary(BinaryOp::Sub, lhs, parse_term());
            else
                return lhs;
        }
    }

    ExprPtr parse_term() {
        ExprPtr lhs = parse_factor();
        for (;;) {
            if (accept('*'))
                lhs = make_binary(BinaryOp::Mul, lhs, parse_factor());
            else if (accept('/'))
                lhs = make_binary(BinaryOp::Div, lhs, parse_factor());
            else
                return lhs;
        }
    }

    // '^' binds tighter than unary minus, so -x^2 is -(x^2).
    ExprPtr parse_factor() {
        if (accept('-')) return make_unary(UnaryOp::Neg, parse_factor());
        ExprPtr a = parse_atom();
        if (accept('^')) return make_power(a, parse_exponent());
        return a;
    }

    double parse_exponent() {
        const char c = peek();
        if (c == 'x' || c == '(' || std::isalpha(static_cast<unsigned char>(c)))
            throw ParseError("non-constant exponent", pos_);
        bool neg = accept('-');
        double v = parse_number();
        return neg ? -v : v;
    }

    double parse_number() {
        skip_ws();
        const char* begin = text_.c_str() + pos_;
        char* end = nullptr;
        double v = std::strtod(begin, &end);
        if (end == begin) throw ParseError("expected a number", pos_);
        pos_ += static_cast<std::size_t>(end - begin);
        return v;
    }

    ExprPtr parse_atom() {
        const char c = peek();
        if (c == '\0') throw ParseError("unexpected end of input", pos_);
        if (c == '(') {
            ++pos_;
            ExprPtr e = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return e;
        }
        if (c == '-') {
            ++pos_;
            return make_unary(UnaryOp::Neg, parse_atom());
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
            return make_constant(parse_number());
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            std::string ident;
            while (pos_ < text_.size() &&
                   std::isalpha(static_cast<unsigned char>(text_[pos_])))
                ident += text_[pos_++];
            if (ident == "x") return make_variable();
            UnaryOp op;
            if (ident == "exp") op = UnaryOp::Exp;
            else if (ident == "ln") op = UnaryOp::Ln;
            else if (ident == "sin") op = UnaryOp::Sin;
            else if (ident == "cos") op = UnaryOp::Cos;
            else if (ident == "sqrt") op = UnaryOp::Sqrt;
            else if (ident == "abs") op = UnaryOp::Abs;
            else throw ParseError("unknown identifier '" + ident + "'", start);
            if (!accept('(')) throw ParseError("expected '(' after '" + ident + "'", pos_);
            ExprPtr arg = parse_expr();
            if (!accept(')')) throw ParseError("expected ')'", pos_);
            return make_unary(op, arg);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }
};

std::string number_to_string(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, p);
}

const char* unary_name(UnaryOp op) {
    switch (op) {
        case UnaryOp::Neg: return "-";
        case UnaryOp::Exp: return "exp";
        case UnaryOp::Ln: return "ln";
        case UnaryOp::Sin: return "sin";
        case UnaryOp::Cos: return "cos";
        case UnaryOp::Sqrt: return "sqrt";
        case UnaryOp::Abs: return "abs";
    }
    return "?";
}

} // namespace

ExprPtr parse(const std::string& text) { return Parser(text).run(); }

std::string render(const ExprPtr& expr) {
    switch (expr->kind) {
        case ExprNode::Kind::Constant:
            return number_to_string(expr->number);
        case ExprNode::Kind::Variable:
            return "x";
        case ExprNode::Kind::Power:
            return "(" + render(expr->left) + "^" + number_to_string(expr->number) + ")";
        case ExprNode::Kind::Unary:
            if (expr->uop == UnaryOp::Neg) return "-(" + render(expr->left) + ")";
            return std::string(unary_name(expr->uop)) + "(" + render(expr->left) + ")";
        case ExprNode::Kind::Binary: {
            char op = '+';
            switch (expr->bop) {
                case BinaryOp::Add: op = '+'; break;
                case BinaryOp::Sub: op = '-'; break;
                case BinaryOp::Mul: op = '*'; break;
                case BinaryOp::Div: op = '/'; break;
            }
            return "(" + render(expr->left) + op + render(expr->right) + ")";
        }
    }
    return "?";
}

Jet2 eval_jet2(const ExprPtr& expr, double x) {
    switch (expr->kind) {
        case ExprNode::Kind::Constant:
            return Jet2::constant(expr->number);
        case ExprNode::Kind::Variable:
            return Jet2::variable(x);
        case ExprNode::Kind::Power:
            return pow(eval_jet2(expr->left, x), expr->number, x);
        case ExprNode::Kind::Unary: {
            const Jet2 a = eval_jet2(expr->left, x);
            switch (expr->uop) {
                case UnaryOp::Neg: return -a;
                case UnaryOp::Exp: return exp(a);
                case UnaryOp::Ln: return log(a, x);
                case UnaryOp::Sin: return sin(a);
                case UnaryOp::Cos: return cos(a);
                case UnaryOp::Sqrt: return sqrt(a, x);
                case UnaryOp::Abs: return abs(a, x);
            }
            break;
        }
        case ExprNode::Kind::Binary: {
            const Jet2 a = eval_jet2(expr->left, x);
            const Jet2 b = eval_jet2(expr->right, x);
            switch (expr->bop) {
                case BinaryOp::Add: return a + b;
                case BinaryOp::Sub: return a - b;
                case BinaryOp::Mul: return a * b;
                case BinaryOp::Div:
                    if (b.v == 0.0) throw EvalError("division by zero", x);
                    return a / b;
            }
            break;
        }
    }
    throw std::logic_error("corrupt expression node");
}

FunctionSpec make_expression_function(const std::string& text) {
    FunctionSpec spec;
    spec.expr = parse(text);
    ExprPtr expr = spec.expr;
    spec.integrand.f = [expr](double x) { return eval_jet2(expr, x).v; };
    spec.integrand.d2 = [expr](double x) { return eval_jet2(expr, x).d2; };
    spec.integrand.label = text;
    return spec;
}

namespace {

double power_mean(double n, double a, double b) {
    // (b^{n+1} - a^{n+1}) / ((n+1)(b-a)); the interval mean of x^n.
    return (std::pow(b, n + 1.0) - std::pow(a, n + 1.0)) / ((n + 1.0) * (b - a));
}

FunctionSpec builtin_power(int n) {
    FunctionSpec spec;
    spec.integrand.f = [n](double x) { return std::pow(x, double(n)); };
    spec.integrand.d2 = [n](double x) {
        if (n < 2) return 0.0;
        return n * (n - 1.0) * std::pow(x, double(n - 2));
    };
    spec.integrand.exact_mean = [n](double a, double b) {
        return power_mean(double(n), a, b);
    };
    spec.integrand.label = "power(" + std::to_string(n) + ")";
    spec.declared_convex_abs_d2 = true; // |n(n-1) x^{n-2}| convex for x >= 0
    return spec;
}

FunctionSpec builtin_reciprocal() {
    FunctionSpec spec;
    spec.integrand.f = [](double x) {
        if (x == 0.0) throw EvalError("division by zero", x);
        return 1.0 / x;
    };
    spec.integrand.d2 = [](double x) {
        if (x == 0.0) throw EvalError("division by zero", x);
        return 2.0 / (x * x * x);
    };
    spec.integrand.exact_mean = [](double a, double b) {
        if (!(a > 0.0)) throw std::domain_error("reciprocal requires a > 0");
        return (std::log(b) - std::log(a)) / (b - a);
    };
    spec.integrand.label = "reciprocal";
    spec.declared_convex_abs_d2 = true;
    return spec;
}

FunctionSpec builtin_exp() {
    FunctionSpec spec;
    spec.integrand.f = [](double x) { return std::exp(x); };
    spec.integrand.d2 = [](double x) { return std::exp(x); };
    spec.integrand.exact_mean = [](double a, double b) {
        return (std::exp(b) - std::exp(a)) / (b - a);
    };
    spec.integrand.label = "exp";
    spec.declared_convex_abs_d2 = true;
    return spec;
}

FunctionSpec builtin_ln() {
    FunctionSpec spec;
    spec.integrand.f = [](double x) {
        if (!(x > 0.0)) throw EvalError("ln of nonpositive value", x);
        return std::log(x);
    };
    spec.integrand.d2 = [](double x) {
        if (!(x > 0.0)) throw EvalError("ln of nonpositive value", x);
        return -1.0 / (x * x);
    };
    // Interval mean of ln is ln of the identric mean.
    spec.integrand.exact_mean = [](double a, double b) {
        if (!(a > 0.0)) throw std::domain_error("ln requires a > 0");
        return (b * std::log(b) - a * std::log(a)) / (b - a) - 1.0;
    };
    spec.integrand.label = "ln";
    spec.declared_convex_abs_d2 = true;
    return spec;
}

FunctionSpec builtin_monomial_sum(const std::vector<double>& coeffs) {
    FunctionSpec spec;
    spec.integrand.f = [coeffs](double x) {
        double acc = 0.0;
        for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
        return acc;
    };
    spec.integrand.d2 = [coeffs](double x) {
        double acc = 0.0;
        for (std::size_t k = 2; k < coeffs.size(); ++k)
            acc += double(k) * double(k - 1) * coeffs[k] * std::pow(x, double(k - 2));
        return acc;
    };
    spec.integrand.exact_mean = [coeffs](double a, double b) {
        double acc = 0.0;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
            acc += coeffs[k] * power_mean(double(k), a, b);
        return acc;
    };
    spec.integrand.label = "monomial-sum";
    return spec;
}

} // namespace

FunctionSpec make_builtin(const std::string& name) {
    if (name == "reciprocal") return builtin_reciprocal();
    if (name == "exp") return builtin_exp();
    if (name == "ln") return builtin_ln();
    if (name.rfind("power(", 0) == 0 && name.back() == ')') {
        const std::string arg = name.substr(6, name.size() - 7);
        std::size_t used = 0;
        const int n = std::stoi(arg, &used);
        if (used != arg.size() || n < 0)
            throw std::invalid_argument("power(n) requires a nonnegative integer n");
        return builtin_power(n);
    }
    if (name.rfind("monomial-sum(", 0) == 0 && name.back() == ')') {
        std::vector<double> coeffs;
        std::string arg = name.substr(13, name.size() - 14);
        std::size_t start = 0;
        while (start <= arg.size()) {
            const std::size_t comma = arg.find(',', start);
            const std::string piece =
                arg.substr(start, comma == std::string::npos ? std::string::npos
                                                             : comma - start);
            if (piece.empty())
                throw std::invalid_argument("monomial-sum: empty coefficient");
            coeffs.push_back(std::stod(piece));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (coeffs.empty())
            throw std::invalid_argument("monomial-sum needs coefficients");
        return builtin_monomial_sum(coeffs);
    }
    throw std::invalid_argument("unknown builtin '" + name + "'");
}

bool convexity_probe(const std::function<double(double)>& g,
                     const Interval& iv, int n) {
    if (n < 3) throw std::domain_error("convexity probe needs n >= 3");
    std::vector<double> samples(static_cast<std::size_t>(n) + 1);
    double scale = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double x = iv.a + (iv.b - iv.a) * double(i) / double(n);
        samples[static_cast<std::size_t>(i)] = g(x);
        scale = std::max(scale, std::abs(samples[static_cast<std::size_t>(i)]));
    }
    const double tol = 1e-12 * std::max(1.0, scale);
    for (int i = 0; i + 2 <= n; ++i) {
        const double mid = samples[static_cast<std::size_t>(i) + 1];
        const double chord = 0.5 * (samples[static_cast<std::size_t>(i)] +
                                    samples[static_cast<std::size_t>(i) + 2]);
        if (mid > chord + tol) return false;
    }
    return true;
}

} // namespace quadcert
