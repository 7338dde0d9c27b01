#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hypercalc::logic {

/// Term of the bounded language: variable, constant (possibly starred),
/// numeral, pair <a,b>, application h(a,...) or arithmetic on terms.
struct Term {
    enum class Kind { Var, Const, Number, Pair, Apply, Binary, Neg };
    Kind kind = Kind::Var;
    std::string name;  // variable, constant, numeral text or operator
    bool starred = false;
    std::vector<Term> args;  // Apply: head then arguments

    friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
    enum class Kind { Rel, Pred, Not, And, Or, Implies, Iff, Exists, Forall };
    Kind kind = Kind::Rel;
    std::string op;                 // relation symbol for Rel
    std::vector<std::string> vars;  // quantified variables
    std::vector<Term> terms;        // Rel: lhs, rhs; Pred: the application; quantifiers: the bound
    std::vector<Formula> subs;

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// ASCII grammar (Unicode quantifier and connective symbols are accepted too):
///
///     formula = iff
///     iff     = implies [ "<->" implies ]
///     implies = or [ "->" implies ]
///     or      = and { "or" and }
///     and     = unary { "and" unary }
///     unary   = "not" unary | quant unary | "[" formula "]" | "(" formula ")" | atom
///     quant   = "(" ("forall" | "exists") var { "," var } "in" term ")"
///     atom    = term rel term | application
///     rel     = "=" | "!=" | "<" | ">" | "<=" | ">=" | "in"
///     term    = product { ("+" | "-") product }
///     product = factor { ("*" | "/") factor }
///     factor  = "-" factor | primary
///     primary = number | name [ "(" term { "," term } ")" ] | "*" name
///             | "<" term "," term ">" | "(" term ")"
///
/// Names bound by a quantifier are variables. Unbound names are constants,
/// except t..z and X..Z (optionally followed by digits), which are always
/// variables. An uppercase constant may carry an indeterminate suffix, as in
/// C[x].
Formula parse_predicate(std::string_view src);
/// As parse_predicate, but FreeVariable unless the formula is closed.
Formula parse_proposition(std::string_view src);

std::vector<std::string> free_variables(const Formula& f);

std::string str(const Term& t);
std::string str(const Formula& f);

/// Stars every constant symbol; AlreadyStarred if one already is.
Formula star_transform(const Formula& f);

/// Rewrites into the minimal connectives: relation atoms, not, and, and
/// single-variable exists.
Formula to_core(const Formula& f);

std::size_t node_count(const Formula& f);

/// Warnings for bounds that quantify over all subsets of a set, which do not
/// transfer as written.
std::vector<std::string> lint_transfer(const Formula& f);
std::vector<std::string> lint_transfer(std::string_view src);

/// Evaluates a closed formula in a finite model. Each constant maps to
/// {"set": [...]}, {"relation": [[a,b],...]}, {"function": [[arg,value],...]}
/// or {"value": v}; a bare array is a set and a bare scalar a value. A starred
/// constant *C is looked up as "*C" first and then as "C". Arithmetic and
/// order on numbers are built in unless the model interprets the symbol.
bool eval_in_model(const Formula& f, const nlohmann::json& model);

}  // namespace hypercalc::logic
