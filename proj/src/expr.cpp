#include "hypercalc/expr.hpp"

#include <algorithm>
#include <cctype>

namespace hypercalc {

FuncExpr FuncExpr::number(Rational q) {
    return FuncExpr(std::make_shared<const Node>(Node{Kind::Number, std::move(q), {}, Fn::Exp, {}}));
}

FuncExpr FuncExpr::var(std::string name) {
    return FuncExpr(std::make_shared<const Node>(Node{Kind::Var, {}, std::move(name), Fn::Exp, {}}));
}

FuncExpr FuncExpr::rho() { return FuncExpr(std::make_shared<const Node>(Node{Kind::Rho, {}, "d", Fn::Exp, {}})); }

FuncExpr FuncExpr::neg(FuncExpr a) {
    return FuncExpr(std::make_shared<const Node>(Node{Kind::Neg, {}, {}, Fn::Exp, {std::move(a)}}));
}

FuncExpr FuncExpr::binary(Kind kind, FuncExpr a, FuncExpr b) {
    return FuncExpr(std::make_shared<const Node>(Node{kind, {}, {}, Fn::Exp, {std::move(a), std::move(b)}}));
}

FuncExpr FuncExpr::call(Fn fn, FuncExpr arg) {
    return FuncExpr(std::make_shared<const Node>(Node{Kind::Call, {}, std::string(to_string(fn)), fn, {std::move(arg)}}));
}

bool FuncExpr::uses(std::string_view var) const {
    if (kind() == Kind::Var) return name() == var;
    return std::any_of(node_->children.begin(), node_->children.end(), [&](const FuncExpr& c) { return c.uses(var); });
}

std::size_t FuncExpr::size() const {
    std::size_t n = 1;
    for (const auto& c : node_->children) n += c.size();
    return n;
}

bool operator==(const FuncExpr& a, const FuncExpr& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.node_->children.size() != b.node_->children.size()) return false;
    switch (a.kind()) {
        case FuncExpr::Kind::Number:
            if (a.value() != b.value()) return false;
            break;
        case FuncExpr::Kind::Var:
            if (a.name() != b.name()) return false;
            break;
        case FuncExpr::Kind::Call:
            if (a.fn() != b.fn()) return false;
            break;
        default: break;
    }
    for (std::size_t i = 0; i < a.node_->children.size(); ++i) {
        if (!(a.node_->children[i] == b.node_->children[i])) return false;
    }
    return true;
}

// ---------------------------------------------------------------- printing

namespace {

int precedence(FuncExpr::Kind k) {
    switch (k) {
        case FuncExpr::Kind::Add:
        case FuncExpr::Kind::Sub: return 1;
        case FuncExpr::Kind::Mul:
        case FuncExpr::Kind::Div: return 2;
        case FuncExpr::Kind::Neg: return 3;
        case FuncExpr::Kind::Pow: return 4;
        default: return 5;
    }
}

std::string number_text(const Rational& q) {
    if (is_integer(q)) return q.str();
    // Terminating decimals print as decimals so they read back as one literal.
    Integer den = boost::multiprecision::denominator(q);
    Integer num = boost::multiprecision::numerator(q);
    unsigned twos = 0, fives = 0;
    while (den % 2 == 0) {
        den /= 2;
        ++twos;
    }
    while (den % 5 == 0) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return "(" + q.str() + ")";
    unsigned places = std::max(twos, fives);
    Integer scale = 1;
    for (unsigned i = 0; i < places; ++i) scale *= 10;
    Integer scaled = num * scale / boost::multiprecision::denominator(q);
    bool negative = scaled < 0;
    std::string digits = (negative ? Integer(-scaled) : scaled).str();
    if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
    digits.insert(digits.size() - places, ".");
    return (negative ? "-" : "") + digits;
}

void print(const FuncExpr& e, std::string& out, int min_prec) {
    int p = precedence(e.kind());
    bool parens = p < min_prec;
    if (parens) out += '(';
    switch (e.kind()) {
        case FuncExpr::Kind::Number: out += number_text(e.value()); break;
        case FuncExpr::Kind::Var: out += e.name(); break;
        case FuncExpr::Kind::Rho: out += 'd'; break;
        case FuncExpr::Kind::Neg:
            out += '-';
            print(e.arg(), out, 3);
            break;
        case FuncExpr::Kind::Add:
        case FuncExpr::Kind::Sub:
        case FuncExpr::Kind::Mul:
        case FuncExpr::Kind::Div: {
            static constexpr char ops[] = {'+', '-', '*', '/'};
            print(e.lhs(), out, p);
            out += ops[static_cast<int>(e.kind()) - static_cast<int>(FuncExpr::Kind::Add)];
            print(e.rhs(), out, p + 1);
            break;
        }
        case FuncExpr::Kind::Pow:
            print(e.lhs(), out, 5);
            out += '^';
            print(e.rhs(), out, 3);
            break;
        case FuncExpr::Kind::Call:
            out += e.name();
            out += '(';
            print(e.arg(), out, 0);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

}  // namespace

std::string FuncExpr::str() const {
    std::string out;
    print(*this, out, 0);
    return out;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
    Parser(std::string_view src, const std::vector<std::string>& vars) : src_(src), vars_(vars) {}

    FuncExpr parse() {
        skip();
        if (at_end()) throw SyntaxError(pos_, "empty expression");
        FuncExpr e = expr();
        skip();
        if (!at_end()) throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return e;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip();
        if (!at_end() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FuncExpr expr() {
        FuncExpr e = term();
        for (;;) {
            if (accept('+')) {
                e = FuncExpr::binary(FuncExpr::Kind::Add, e, term());
            } else if (accept('-')) {
                e = FuncExpr::binary(FuncExpr::Kind::Sub, e, term());
            } else {
                return e;
            }
        }
    }

    FuncExpr term() {
        FuncExpr e = unary();
        for (;;) {
            if (accept('*')) {
                e = FuncExpr::binary(FuncExpr::Kind::Mul, e, unary());
            } else if (accept('/')) {
                e = FuncExpr::binary(FuncExpr::Kind::Div, e, unary());
            } else {
                return e;
            }
        }
    }

    FuncExpr unary() {
        if (accept('-')) return FuncExpr::neg(unary());
        return power();
    }

    FuncExpr power() {
        FuncExpr base = primary();
        if (accept('^')) return FuncExpr::binary(FuncExpr::Kind::Pow, base, unary());
        return base;
    }

    FuncExpr primary() {
        skip();
        if (at_end()) throw SyntaxError(pos_, "unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            FuncExpr e = expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (!at_end() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
            try {
                return FuncExpr::number(parse_rational(src_.substr(start, pos_ - start)));
            } catch (const Error&) {
                throw SyntaxError(start, "malformed number '" + std::string(src_.substr(start, pos_ - start)) + "'");
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            if (auto fn = function_named(name)) {
                if (!accept('(')) throw SyntaxError(pos_, "expected '(' after " + name);
                FuncExpr arg = expr();
                if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
                return FuncExpr::call(*fn, arg);
            }
            if (name == "d") return FuncExpr::rho();
            if (std::find(vars_.begin(), vars_.end(), name) != vars_.end()) return FuncExpr::var(name);
            throw Error(ErrorKind::UnknownIdentifier, "unknown identifier '" + name + "' at offset " + std::to_string(start));
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

FuncExpr parse_function(std::string_view src, const std::vector<std::string>& vars) { return Parser(src, vars).parse(); }

std::optional<Rational> constant_value(const FuncExpr& e) {
    using K = FuncExpr::Kind;
    switch (e.kind()) {
        case K::Number: return e.value();
        case K::Neg: {
            auto a = constant_value(e.arg());
            if (a) return Rational(-*a);
            return std::nullopt;
        }
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: {
            auto a = constant_value(e.lhs());
            auto b = constant_value(e.rhs());
            if (!a || !b) return std::nullopt;
            if (e.kind() == K::Add) return Rational(*a + *b);
            if (e.kind() == K::Sub) return Rational(*a - *b);
            if (e.kind() == K::Mul) return Rational(*a * *b);
            if (*b == 0) return std::nullopt;
            return Rational(*a / *b);
        }
        case K::Pow: {
            auto a = constant_value(e.lhs());
            auto b = constant_value(e.rhs());
            if (!a || !b || !is_integer(*b) || (*a == 0 && *b < 0)) return std::nullopt;
            if (boost::multiprecision::abs(*b) > 4096) return std::nullopt;
            return pow(*a, boost::multiprecision::numerator(*b).convert_to<long>());
        }
        default: return std::nullopt;
    }
}

namespace {

Value eval_at(const FuncExpr& f, const Env& env, const Context& ctx, const std::string& path) {
    using K = FuncExpr::Kind;
    auto guarded = [&](auto&& op) -> Value {
        try {
            return op();
        } catch (const EvalError&) {
            throw;
        } catch (const Error& e) {
            throw EvalError(e.kind(), e.detail(), path, f.str());
        }
    };
    switch (f.kind()) {
        case K::Number: return Series::constant(Coefficient(f.value()));
        case K::Rho: return Series::rho();
        case K::Var: {
            auto it = env.find(f.name());
            if (it == env.end()) throw EvalError(ErrorKind::UnknownIdentifier, "variable " + f.name() + " is not bound", path, f.str());
            return it->second;
        }
        case K::Neg: {
            Value a = eval_at(f.arg(), env, ctx, path + "/arg");
            return -a;
        }
        case K::Add:
        case K::Sub:
        case K::Mul:
        case K::Div: {
            Value a = eval_at(f.lhs(), env, ctx, path + "/lhs");
            Value b = eval_at(f.rhs(), env, ctx, path + "/rhs");
            static constexpr ArithOp ops[] = {ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div};
            ArithOp op = ops[static_cast<int>(f.kind()) - static_cast<int>(K::Add)];
            return guarded([&] { return arith(op, a, b, ctx); });
        }
        case K::Pow: {
            Value base = eval_at(f.lhs(), env, ctx, path + "/lhs");
            if (auto q = constant_value(f.rhs())) return guarded([&] { return pow_rational(base, *q, ctx); });
            Value exponent = eval_at(f.rhs(), env, ctx, path + "/rhs");
            return guarded([&] { return pow_general(base, exponent, ctx); });
        }
        case K::Call: {
            Value a = eval_at(f.arg(), env, ctx, path + "/arg");
            return guarded([&] { return apply(f.fn(), a, ctx); });
        }
    }
    return {};
}

}  // namespace

Value eval(const FuncExpr& f, const Env& env, const Context& ctx) { return eval_at(f, env, ctx, ""); }

}  // namespace hypercalc
