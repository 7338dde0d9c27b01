#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypercalc/error.hpp"
#include "hypercalc/functions.hpp"

namespace hypercalc {

/// Immutable expression tree over the variables x and n and the infinitesimal d.
///
///     expr    = term { ("+" | "-") term }
///     term    = unary { ("*" | "/") unary }
///     unary   = "-" unary | power
///     power   = primary [ "^" unary ]
///     primary = number | "x" | "n" | "d" | fn "(" expr ")" | "(" expr ")"
///
/// Number literals are unsigned; decimals such as 0.25 are read exactly.
class FuncExpr {
public:
    enum class Kind { Number, Var, Rho, Neg, Add, Sub, Mul, Div, Pow, Call };

    static FuncExpr number(Rational q);
    static FuncExpr var(std::string name);
    static FuncExpr rho();
    static FuncExpr neg(FuncExpr a);
    static FuncExpr binary(Kind kind, FuncExpr a, FuncExpr b);
    static FuncExpr call(Fn fn, FuncExpr arg);

    Kind kind() const { return node_->kind; }
    const Rational& value() const { return node_->number; }
    const std::string& name() const { return node_->name; }
    Fn fn() const { return node_->fn; }
    const FuncExpr& lhs() const { return node_->children.at(0); }
    const FuncExpr& rhs() const { return node_->children.at(1); }
    const FuncExpr& arg() const { return node_->children.at(0); }

    bool uses(std::string_view var) const;
    std::size_t size() const;

    /// Minimal-parenthesis text; parse(str()) reproduces the tree.
    std::string str() const;

    friend bool operator==(const FuncExpr& a, const FuncExpr& b);

private:
    struct Node {
        Kind kind;
        Rational number;
        std::string name;
        Fn fn = Fn::Exp;
        std::vector<FuncExpr> children;
    };
    explicit FuncExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses an expression in the variables `vars` (default x and n).
FuncExpr parse_function(std::string_view src, const std::vector<std::string>& vars = {"x", "n"});

/// The exponent as a rational if it contains no variables and folds exactly.
std::optional<Rational> constant_value(const FuncExpr& e);

using Env = std::map<std::string, Value, std::less<>>;

/// Evaluation failure annotated with the path of the failing node, e.g.
/// "/lhs/arg".
class EvalError : public Error {
public:
    EvalError(ErrorKind kind, const std::string& detail, std::string path, const std::string& subexpr)
        : Error(kind, detail + " in '" + subexpr + "' at " + (path.empty() ? "/" : path)), path_(std::move(path)) {}
    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

Value eval(const FuncExpr& f, const Env& env, const Context& ctx);

}  // namespace hypercalc
