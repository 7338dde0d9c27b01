#include "hypercalc/transfer.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>

#include "hypercalc/error.hpp"

namespace hypercalc::logic {

namespace {

struct Token {
    enum class Kind { Ident, Number, Symbol, End };
    Kind kind;
    std::string text;
    std::size_t offset;
};

const std::vector<std::pair<std::string_view, std::string_view>>& unicode_aliases() {
    static const std::vector<std::pair<std::string_view, std::string_view>> table = {
        {"∀", " forall "}, {"∃", " exists "}, {"∈", " in "},  {"¬", " not "},
        {"∧", " and "},    {"∨", " or "},     {"→", " -> "},  {"⇒", " -> "},
        {"↔", " <-> "},    {"⇔", " <-> "},    {"≤", " <= "},  {"≥", " >= "},
        {"≠", " != "},     {"⟨", " < "},      {"⟩", " > "},   {"ℝ", "R"},
        {"ℂ", "C"},        {"ℕ", "N"},        {"ℤ", "Z"},     {"ℚ", "Q"},
    };
    return table;
}

std::vector<Token> lex(std::string_view raw) {
    std::string src(raw);
    for (const auto& [from, to] : unicode_aliases()) {
        for (std::size_t at = src.find(from); at != std::string::npos; at = src.find(from, at + to.size())) {
            src.replace(at, from.size(), to);
        }
    }
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        unsigned char c = src[i];
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isalpha(c) || c == '_') {
            while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) ++i;
            // C[x]: an indeterminate suffix glued to an uppercase constant.
            if (std::isupper(c) && i < src.size() && src[i] == '[') {
                std::size_t j = i + 1;
                while (j < src.size() && std::isalnum(static_cast<unsigned char>(src[j]))) ++j;
                if (j > i + 1 && j < src.size() && src[j] == ']') i = j + 1;
            }
            out.push_back({Token::Kind::Ident, src.substr(start, i - start), start});
            continue;
        }
        if (std::isdigit(c)) {
            while (i < src.size() && (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.')) ++i;
            out.push_back({Token::Kind::Number, src.substr(start, i - start), start});
            continue;
        }
        for (std::string_view sym : {"<->", "->", "<=", ">=", "!="}) {
            if (src.compare(i, sym.size(), sym) == 0) {
                out.push_back({Token::Kind::Symbol, std::string(sym), start});
                i += sym.size();
                break;
            }
        }
        if (i != start) continue;
        if (std::string_view("()[],=<>+-*/").find(static_cast<char>(c)) == std::string_view::npos) {
            throw SyntaxError(start, std::string("unexpected character '") + static_cast<char>(c) + "'");
        }
        out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), start});
        ++i;
    }
    out.push_back({Token::Kind::End, "", src.size()});
    return out;
}

bool is_keyword(const std::string& s) {
    return s == "forall" || s == "exists" || s == "in" || s == "and" || s == "or" || s == "not";
}

/// One of t..z or X..Z, optionally followed by digits or _digits.
bool looks_like_variable(const std::string& s) {
    if (s.empty() || !((s[0] >= 't' && s[0] <= 'z') || (s[0] >= 'X' && s[0] <= 'Z'))) return false;
    std::size_t i = 1;
    if (i < s.size() && s[i] == '_') ++i;
    if (i == s.size()) return s.size() == 1;
    return std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

const std::set<std::string, std::less<>> relations = {"=", "!=", "<", ">", "<=", ">=", "in"};

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(lex(src)) {}

    Formula parse() {
        Formula f = formula();
        if (peek().kind != Token::Kind::End) throw SyntaxError(peek().offset, "unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    bool at(std::string_view text) const {
        const Token& t = peek();
        return t.kind != Token::Kind::End && t.kind != Token::Kind::Number && t.text == text;
    }
    bool accept(std::string_view text) {
        if (!at(text)) return false;
        ++pos_;
        return true;
    }
    void expect(std::string_view text) {
        if (!accept(text)) throw SyntaxError(peek().offset, "expected '" + std::string(text) + "'");
    }

    Formula formula() {
        Formula lhs = implies();
        if (accept("<->")) return {Formula::Kind::Iff, {}, {}, {}, {std::move(lhs), implies()}};
        return lhs;
    }

    Formula implies() {
        Formula lhs = disjunction();
        if (accept("->")) return {Formula::Kind::Implies, {}, {}, {}, {std::move(lhs), implies()}};
        return lhs;
    }

    Formula disjunction() {
        Formula lhs = conjunction();
        while (accept("or")) lhs = {Formula::Kind::Or, {}, {}, {}, {std::move(lhs), conjunction()}};
        return lhs;
    }

    Formula conjunction() {
        Formula lhs = unary();
        while (accept("and")) lhs = {Formula::Kind::And, {}, {}, {}, {std::move(lhs), unary()}};
        return lhs;
    }

    Formula unary() {
        if (accept("not")) return {Formula::Kind::Not, {}, {}, {}, {unary()}};
        if (at("[")) {
            ++pos_;
            Formula f = formula();
            expect("]");
            return f;
        }
        if (at("(") && (peek(1).text == "forall" || peek(1).text == "exists")) return quantified();
        if (at("(")) {
            // A parenthesized formula, unless it turns out to be a term.
            const std::size_t save = pos_;
            const std::size_t depth = scope_.size();
            try {
                ++pos_;
                Formula f = formula();
                expect(")");
                const std::string& next = peek().text;
                bool continues_term = peek().kind == Token::Kind::Symbol &&
                                      (relations.contains(next) || next == "+" || next == "-" || next == "*" || next == "/");
                if (!continues_term && next != "in") return f;
            } catch (const SyntaxError&) {
            }
            pos_ = save;
            scope_.resize(depth);
        }
        return atom();
    }

    Formula quantified() {
        expect("(");
        Formula f;
        f.kind = peek().text == "forall" ? Formula::Kind::Forall : Formula::Kind::Exists;
        ++pos_;
        do {
            const Token& v = peek();
            if (v.kind != Token::Kind::Ident || is_keyword(v.text)) throw SyntaxError(v.offset, "expected a variable");
            f.vars.push_back(v.text);
            ++pos_;
        } while (accept(","));
        if (!accept("in")) {
            fail(ErrorKind::UnboundedQuantifier,
                 "quantifier over " + f.vars.front() + " at offset " + std::to_string(peek().offset) + " has no bound");
        }
        f.terms.push_back(term());
        expect(")");
        for (const auto& v : f.vars) {
            if (mentions(f.terms.front(), v)) {
                fail(ErrorKind::UnboundedQuantifier, "variable " + v + " occurs in its own bound " + str(f.terms.front()));
            }
        }
        const std::size_t depth = scope_.size();
        scope_.insert(scope_.end(), f.vars.begin(), f.vars.end());
        f.subs.push_back(unary());
        scope_.resize(depth);
        return f;
    }

    Formula atom() {
        Term lhs = term();
        const Token& t = peek();
        if (t.kind == Token::Kind::Symbol || t.kind == Token::Kind::Ident) {
            if (relations.contains(t.text)) {
                std::string op = t.text;
                ++pos_;
                return {Formula::Kind::Rel, op, {}, {std::move(lhs), term()}, {}};
            }
        }
        if (lhs.kind != Term::Kind::Apply) throw SyntaxError(t.offset, "expected a relation after " + str(lhs));
        return {Formula::Kind::Pred, {}, {}, {std::move(lhs)}, {}};
    }

    Term term() {
        Term lhs = product();
        while (at("+") || at("-")) {
            std::string op = peek().text;
            ++pos_;
            lhs = Term{Term::Kind::Binary, op, false, {std::move(lhs), product()}};
        }
        return lhs;
    }

    Term product() {
        Term lhs = factor();
        while (at("*") || at("/")) {
            std::string op = peek().text;
            ++pos_;
            lhs = Term{Term::Kind::Binary, op, false, {std::move(lhs), factor()}};
        }
        return lhs;
    }

    Term factor() {
        if (accept("-")) return Term{Term::Kind::Neg, "-", false, {factor()}};
        return primary();
    }

    Term primary() {
        const Token t = peek();
        if (t.kind == Token::Kind::Number) {
            ++pos_;
            return Term{Term::Kind::Number, t.text, false, {}};
        }
        if (accept("(")) {
            Term inner = term();
            expect(")");
            return inner;
        }
        if (accept("<")) {
            Term a = term();
            expect(",");
            Term b = term();
            expect(">");
            return Term{Term::Kind::Pair, {}, false, {std::move(a), std::move(b)}};
        }
        bool starred = false;
        if (at("*")) {
            starred = true;
            ++pos_;
        }
        const Token n = peek();
        if (n.kind != Token::Kind::Ident || is_keyword(n.text)) throw SyntaxError(n.offset, "expected a term");
        ++pos_;
        Term head = name(n.text);
        if (starred) {
            if (head.kind != Term::Kind::Const) throw SyntaxError(n.offset, "only constants can be starred");
            head.starred = true;
        }
        if (!accept("(")) return head;
        Term app{Term::Kind::Apply, {}, false, {std::move(head)}};
        do {
            app.args.push_back(term());
        } while (accept(","));
        expect(")");
        return app;
    }

    Term name(const std::string& s) const {
        bool bound = std::find(scope_.begin(), scope_.end(), s) != scope_.end();
        if (bound || looks_like_variable(s)) return Term{Term::Kind::Var, s, false, {}};
        return Term{Term::Kind::Const, s, false, {}};
    }

    static bool mentions(const Term& t, const std::string& v) {
        if (t.kind == Term::Kind::Var && t.name == v) return true;
        return std::any_of(t.args.begin(), t.args.end(), [&](const Term& a) { return mentions(a, v); });
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::vector<std::string> scope_;
};

void collect_free(const Term& t, const std::vector<std::string>& bound, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::Var && std::find(bound.begin(), bound.end(), t.name) == bound.end() &&
        std::find(out.begin(), out.end(), t.name) == out.end()) {
        out.push_back(t.name);
    }
    for (const auto& a : t.args) collect_free(a, bound, out);
}

void collect_free(const Formula& f, std::vector<std::string> bound, std::vector<std::string>& out) {
    for (const auto& t : f.terms) collect_free(t, bound, out);
    bound.insert(bound.end(), f.vars.begin(), f.vars.end());
    for (const auto& s : f.subs) collect_free(s, bound, out);
}

int term_prec(const Term& t) {
    if (t.kind == Term::Kind::Binary) return t.name == "+" || t.name == "-" ? 1 : 2;
    if (t.kind == Term::Kind::Neg) return 3;
    return 4;
}

std::string str_term(const Term& t, int need) {
    std::string s;
    switch (t.kind) {
        case Term::Kind::Var:
        case Term::Kind::Number: s = t.name; break;
        case Term::Kind::Const: s = (t.starred ? "*" : "") + t.name; break;
        case Term::Kind::Pair: s = "<" + str_term(t.args[0], 0) + "," + str_term(t.args[1], 0) + ">"; break;
        case Term::Kind::Apply:
            s = str_term(t.args[0], 4) + "(";
            for (std::size_t i = 1; i < t.args.size(); ++i) s += (i > 1 ? "," : "") + str_term(t.args[i], 0);
            s += ")";
            break;
        case Term::Kind::Binary: {
            int p = term_prec(t);
            s = str_term(t.args[0], p) + t.name + str_term(t.args[1], p + 1);
            break;
        }
        case Term::Kind::Neg: s = "-" + str_term(t.args[0], 3); break;
    }
    return term_prec(t) < need ? "(" + s + ")" : s;
}

int formula_prec(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Iff: return 1;
        case Formula::Kind::Implies: return 2;
        case Formula::Kind::Or: return 3;
        case Formula::Kind::And: return 4;
        default: return 5;
    }
}

bool is_quantifier(const Formula& f) { return f.kind == Formula::Kind::Exists || f.kind == Formula::Kind::Forall; }

std::string str_formula(const Formula& f, int need) {
    std::string s;
    switch (f.kind) {
        case Formula::Kind::Rel:
            s = str_term(f.terms[0], 0) + (f.op == "in" ? " in " : f.op) + str_term(f.terms[1], 0);
            break;
        case Formula::Kind::Pred: s = str_term(f.terms[0], 0); break;
        case Formula::Kind::Not: s = "not " + str_formula(f.subs[0], 5); break;
        case Formula::Kind::And: s = str_formula(f.subs[0], 4) + " and " + str_formula(f.subs[1], 5); break;
        case Formula::Kind::Or: s = str_formula(f.subs[0], 3) + " or " + str_formula(f.subs[1], 4); break;
        case Formula::Kind::Implies: s = str_formula(f.subs[0], 3) + " -> " + str_formula(f.subs[1], 2); break;
        case Formula::Kind::Iff: s = str_formula(f.subs[0], 2) + " <-> " + str_formula(f.subs[1], 2); break;
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            s = f.kind == Formula::Kind::Forall ? "(forall " : "(exists ";
            for (std::size_t i = 0; i < f.vars.size(); ++i) s += (i ? "," : "") + f.vars[i];
            s += " in " + str_term(f.terms[0], 0) + ")";
            const Formula& body = f.subs[0];
            s += is_quantifier(body) ? str_formula(body, 0) : "[" + str_formula(body, 0) + "]";
            break;
        }
    }
    return formula_prec(f) < need ? "[" + s + "]" : s;
}

Term star_term(const Term& t) {
    Term out = t;
    if (t.kind == Term::Kind::Const) {
        if (t.starred) fail(ErrorKind::AlreadyStarred, "constant *" + t.name + " is already starred");
        out.starred = true;
    }
    for (auto& a : out.args) a = star_term(a);
    return out;
}

Formula negate(Formula f) { return {Formula::Kind::Not, {}, {}, {}, {std::move(f)}}; }
Formula conj(Formula a, Formula b) { return {Formula::Kind::And, {}, {}, {}, {std::move(a), std::move(b)}}; }

bool is_power_set(const Term& t) {
    if (t.kind == Term::Kind::Apply && t.args[0].kind == Term::Kind::Const) {
        const std::string& h = t.args[0].name;
        if (h == "P" || h == "Pow" || h == "powerset" || h == "PowerSet") return true;
    }
    return std::any_of(t.args.begin(), t.args.end(), is_power_set);
}

void lint(const Formula& f, std::vector<std::string>& out) {
    if (is_quantifier(f) && is_power_set(f.terms[0])) {
        std::string vars;
        for (std::size_t i = 0; i < f.vars.size(); ++i) vars += (i ? "," : "") + f.vars[i];
        out.push_back("power-set bound: '" + vars + " in " + str(f.terms[0]) +
                      "' quantifies over all subsets; *P(S) is a proper part of P(*S), so the starred statement "
                      "need not hold as written");
    }
    for (const auto& s : f.subs) lint(s, out);
}

// Finite-model evaluation.

using json = nlohmann::json;

struct MValue {
    enum class Kind { Element, Set, Function };
    Kind kind = Kind::Element;
    json data;                                  // element, or the set's members
    std::vector<std::pair<json, json>> graph;  // function
};

MValue decode(const json& j) {
    if (j.is_object()) {
        if (j.contains("set")) return {MValue::Kind::Set, j.at("set"), {}};
        if (j.contains("relation")) return {MValue::Kind::Set, j.at("relation"), {}};
        if (j.contains("value")) return decode(j.at("value"));
        if (j.contains("function")) {
            MValue m{MValue::Kind::Function, {}, {}};
            const json& g = j.at("function");
            if (g.is_object()) {
                for (const auto& [k, v] : g.items()) {
                    json key = json::parse(k, nullptr, false);
                    m.graph.emplace_back(key.is_discarded() ? json(k) : key, v);
                }
            } else {
                for (const auto& pair : g) {
                    if (!pair.is_array() || pair.size() != 2) fail(ErrorKind::InvalidArgument, "function entries must be [argument, value]");
                    m.graph.emplace_back(pair[0], pair[1]);
                }
            }
            return m;
        }
        fail(ErrorKind::InvalidArgument, "unrecognized model entry " + j.dump());
    }
    if (j.is_array()) return {MValue::Kind::Set, j, {}};
    return {MValue::Kind::Element, j, {}};
}

json encode(const MValue& v) {
    if (v.kind == MValue::Kind::Function) {
        json g = json::array();
        for (const auto& [a, b] : v.graph) g.push_back(json::array({a, b}));
        return json{{"function", g}};
    }
    return v.data;
}

bool same(const json& a, const json& b) { return a == b; }

class Evaluator {
public:
    explicit Evaluator(const json& model) : model_(model) {
        if (!model.is_object()) fail(ErrorKind::InvalidArgument, "a model must be a JSON object");
    }

    bool holds(const Formula& f) {
        switch (f.kind) {
            case Formula::Kind::Rel: return relation(f.op, value(f.terms[0]), value(f.terms[1]));
            case Formula::Kind::Pred: return predicate(f.terms[0]);
            case Formula::Kind::Not: return !holds(f.subs[0]);
            case Formula::Kind::And: return holds(f.subs[0]) && holds(f.subs[1]);
            case Formula::Kind::Or: return holds(f.subs[0]) || holds(f.subs[1]);
            case Formula::Kind::Implies: return !holds(f.subs[0]) || holds(f.subs[1]);
            case Formula::Kind::Iff: return holds(f.subs[0]) == holds(f.subs[1]);
            case Formula::Kind::Exists:
            case Formula::Kind::Forall: {
                MValue bound = value(f.terms[0]);
                if (bound.kind != MValue::Kind::Set) {
                    fail(ErrorKind::NonSetBound, "bound " + str(f.terms[0]) + " does not denote a finite set");
                }
                return quantify(f, bound.data, 0);
            }
        }
        return false;
    }

private:
    bool quantify(const Formula& f, const json& members, std::size_t var) {
        if (var == f.vars.size()) return holds(f.subs[0]);
        const bool universal = f.kind == Formula::Kind::Forall;
        const std::string& name = f.vars[var];
        auto saved = env_.find(name) == env_.end() ? std::nullopt : std::optional<MValue>(env_[name]);
        bool result = universal;
        for (const auto& m : members) {
            env_[name] = decode(m);
            if (quantify(f, members, var + 1) != universal) {
                result = !universal;
                break;
            }
        }
        if (saved) env_[name] = *saved;
        else env_.erase(name);
        return result;
    }

    const json* lookup(const std::string& key) const {
        auto it = model_.find(key);
        return it == model_.end() ? nullptr : &*it;
    }

    MValue constant(const Term& t) const {
        const json* j = t.starred ? lookup("*" + t.name) : nullptr;
        if (!j) j = lookup(t.name);
        if (!j) fail(ErrorKind::UninterpretedConstant, "constant " + str(t) + " has no interpretation");
        return decode(*j);
    }

    static json number(const json& v, const std::string& op) {
        if (!v.is_number()) fail(ErrorKind::InvalidArgument, "operator " + op + " needs numbers, got " + v.dump());
        return v;
    }

    static json arithmetic(const std::string& op, const json& a, const json& b) {
        number(a, op);
        number(b, op);
        if (a.is_number_integer() && b.is_number_integer() && op != "/") {
            long long x = a.get<long long>(), y = b.get<long long>();
            return op == "+" ? x + y : op == "-" ? x - y : x * y;
        }
        double x = a.get<double>(), y = b.get<double>();
        if (op == "/" && y == 0) fail(ErrorKind::DivisionByZero, "division by zero in the model");
        return op == "+" ? x + y : op == "-" ? x - y : op == "*" ? x * y : x / y;
    }

    MValue apply(const MValue& fn, const json& arg, const std::string& what) const {
        if (fn.kind == MValue::Kind::Function) {
            for (const auto& [a, b] : fn.graph) {
                if (same(a, arg)) return decode(b);
            }
            fail(ErrorKind::DomainError, arg.dump() + " is outside the domain of " + what);
        }
        if (fn.kind == MValue::Kind::Set) {
            // A relation applied as a function: the unique b with <arg, b> in it.
            std::optional<json> hit;
            for (const auto& p : fn.data) {
                if (p.is_array() && p.size() == 2 && same(p[0], arg)) {
                    if (hit) return {MValue::Kind::Set, json::array(), {}};
                    hit = p[1];
                }
            }
            if (!hit) return {MValue::Kind::Set, json::array(), {}};
            return decode(*hit);
        }
        fail(ErrorKind::InvalidArgument, what + " is not a function");
    }

    MValue value(const Term& t) {
        switch (t.kind) {
            case Term::Kind::Var: {
                auto it = env_.find(t.name);
                if (it == env_.end()) fail(ErrorKind::FreeVariable, "variable " + t.name + " is unbound");
                return it->second;
            }
            case Term::Kind::Const: return constant(t);
            case Term::Kind::Number: return decode(json::parse(t.name));
            case Term::Kind::Pair: return decode(json::array({encode(value(t.args[0])), encode(value(t.args[1]))}));
            case Term::Kind::Apply: {
                MValue head = value(t.args[0]);
                return apply(head, arguments(t), str(t.args[0]));
            }
            case Term::Kind::Binary: {
                json a = encode(value(t.args[0])), b = encode(value(t.args[1]));
                if (const json* op = lookup(t.name)) return apply(decode(*op), json::array({a, b}), t.name);
                return decode(arithmetic(t.name, a, b));
            }
            case Term::Kind::Neg: {
                json a = encode(value(t.args[0]));
                if (const json* op = lookup("neg")) return apply(decode(*op), a, "neg");
                return decode(arithmetic("-", json(0), a));
            }
        }
        return {};
    }

    json arguments(const Term& app) {
        if (app.args.size() == 2) return encode(value(app.args[1]));
        json tuple = json::array();
        for (std::size_t i = 1; i < app.args.size(); ++i) tuple.push_back(encode(value(app.args[i])));
        return tuple;
    }

    static bool member(const json& x, const MValue& s, const std::string& what) {
        if (s.kind != MValue::Kind::Set) fail(ErrorKind::NonSetBound, what + " is not a set");
        return std::any_of(s.data.begin(), s.data.end(), [&](const json& m) { return same(m, x); });
    }

    bool relation(const std::string& op, const MValue& a, const MValue& b) {
        if (op == "=") return same(encode(a), encode(b));
        if (op == "!=") return !same(encode(a), encode(b));
        if (op == "in") return member(encode(a), b, "right side of 'in'");
        if (const json* r = lookup(op)) return member(json::array({encode(a), encode(b)}), decode(*r), op);
        json x = number(encode(a), op), y = number(encode(b), op);
        if (op == "<") return x < y;
        if (op == ">") return x > y;
        if (op == "<=") return x <= y;
        return x >= y;
    }

    bool predicate(const Term& app) {
        MValue head = value(app.args[0]);
        json arg = arguments(app);
        if (head.kind == MValue::Kind::Set) return member(arg, head, str(app.args[0]));
        MValue r = apply(head, arg, str(app.args[0]));
        if (r.kind != MValue::Kind::Element) fail(ErrorKind::InvalidArgument, str(app) + " is not a truth value");
        if (r.data.is_boolean()) return r.data.get<bool>();
        if (r.data.is_number()) return r.data != json(0);
        fail(ErrorKind::InvalidArgument, str(app) + " is not a truth value");
    }

    const json& model_;
    std::map<std::string, MValue> env_;
};

}  // namespace

Formula parse_predicate(std::string_view src) { return Parser(src).parse(); }

Formula parse_proposition(std::string_view src) {
    Formula f = parse_predicate(src);
    auto free = free_variables(f);
    if (!free.empty()) {
        std::string names;
        for (std::size_t i = 0; i < free.size(); ++i) names += (i ? ", " : "") + free[i];
        fail(ErrorKind::FreeVariable, "free variable" + std::string(free.size() > 1 ? "s " : " ") + names);
    }
    return f;
}

std::vector<std::string> free_variables(const Formula& f) {
    std::vector<std::string> out;
    collect_free(f, {}, out);
    return out;
}

std::string str(const Term& t) { return str_term(t, 0); }
std::string str(const Formula& f) { return str_formula(f, 0); }

Formula star_transform(const Formula& f) {
    Formula out = f;
    for (auto& t : out.terms) t = star_term(t);
    for (auto& s : out.subs) s = star_transform(s);
    return out;
}

Formula to_core(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::Rel:
        case Formula::Kind::Pred: return f;
        case Formula::Kind::Not: return negate(to_core(f.subs[0]));
        case Formula::Kind::And: return conj(to_core(f.subs[0]), to_core(f.subs[1]));
        case Formula::Kind::Or: return negate(conj(negate(to_core(f.subs[0])), negate(to_core(f.subs[1]))));
        case Formula::Kind::Implies: return negate(conj(to_core(f.subs[0]), negate(to_core(f.subs[1]))));
        case Formula::Kind::Iff: {
            Formula a = to_core(f.subs[0]), b = to_core(f.subs[1]);
            return conj(negate(conj(a, negate(b))), negate(conj(b, negate(a))));
        }
        case Formula::Kind::Exists:
        case Formula::Kind::Forall: {
            const bool universal = f.kind == Formula::Kind::Forall;
            Formula body = to_core(f.subs[0]);
            for (auto v = f.vars.rbegin(); v != f.vars.rend(); ++v) {
                Formula q{Formula::Kind::Exists, {}, {*v}, {f.terms[0]}, {universal ? negate(std::move(body)) : std::move(body)}};
                body = universal ? negate(std::move(q)) : std::move(q);
            }
            return body;
        }
    }
    return f;
}

std::size_t node_count(const Formula& f) {
    std::function<std::size_t(const Term&)> count_term = [&](const Term& t) {
        std::size_t n = 1;
        for (const auto& a : t.args) n += count_term(a);
        return n;
    };
    std::size_t n = 1 + f.vars.size();
    for (const auto& t : f.terms) n += count_term(t);
    for (const auto& s : f.subs) n += node_count(s);
    return n;
}

std::vector<std::string> lint_transfer(const Formula& f) {
    std::vector<std::string> out;
    lint(f, out);
    return out;
}

std::vector<std::string> lint_transfer(std::string_view src) { return lint_transfer(parse_predicate(src)); }

bool eval_in_model(const Formula& f, const nlohmann::json& model) {
    auto free = free_variables(f);
    if (!free.empty()) fail(ErrorKind::FreeVariable, "free variable " + free.front());
    return Evaluator(model).holds(f);
}

}  // namespace hypercalc::logic
