#include "hypercalc/cli.hpp"

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypercalc/calculus.hpp"
#include "hypercalc/filters.hpp"
#include "hypercalc/transfer.hpp"
#include "json.hpp"

namespace hypercalc {

namespace {

using json = nlohmann::json;
using namespace logic;

/// What a command produced: exit code, text for humans, fields for --json.
struct Outcome {
    int code = 0;
    std::string text;
    json fields = json::object();
};

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero:
        case ErrorKind::InsufficientPrecision:
        case ErrorKind::NegativeBase:
        case ErrorKind::IrrationalCoefficient:
        case ErrorKind::DomainError:
        case ErrorKind::UnsupportedEscape:
        case ErrorKind::Undefined:
        case ErrorKind::Undecidable: return 3;
        default: return 2;
    }
}

struct Options {
    std::string backend = "auto";
    std::string order = "16";
    unsigned digits = 50;
    std::string probes;
    bool json = false;
};

Context make_context(const Options& o, Backend b) {
    Context ctx;
    ctx.order = parse_rational(o.order);
    ctx.digits = o.digits;
    ctx.backend = b;
    ctx.validate();
    return ctx;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::InvalidArgument, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Series series_of(const std::string& src, const Context& ctx) {
    Value v = eval(parse_function(src, {}), {}, ctx);
    if (!v.is_series()) fail(ErrorKind::InvalidArgument, "probe " + src + " is not a power of d series");
    return v.series();
}

ProbeCatalog load_catalog(const Options& o, const Context& ctx) {
    if (o.probes.empty()) return ProbeCatalog::standard();
    json j = json::parse(read_file(o.probes));
    ProbeCatalog c;
    for (const auto& s : j.at("infinitesimals")) c.infinitesimals.push_back(series_of(s.get<std::string>(), ctx));
    for (const auto& s : j.at("infinite")) c.infinite.push_back(series_of(s.get<std::string>(), ctx));
    c.validate();
    return c;
}

json bindings_json(const std::vector<Binding>& w) {
    json a = json::array();
    for (const auto& b : w) a.push_back({{"name", b.name}, {"value", b.value.str()}});
    return a;
}

std::string bindings_text(const std::vector<Binding>& w) {
    std::string s;
    for (const auto& b : w) s += "  " + b.name + " = " + b.value.str() + "\n";
    return s;
}

Outcome verdict_outcome(const Verdict& v) {
    Outcome o;
    std::string kind(to_string(v.kind));
    o.code = v.kind == Verdict::Kind::Holds ? 0 : v.kind == Verdict::Kind::Refuted ? 1 : 3;
    o.text = kind + ": " + v.reason + "\n" + bindings_text(v.witness);
    o.fields = {{"kind", kind}, {"reason", v.reason}, {"probes", v.probes}};
    if (!v.witness.empty()) o.fields["witness"] = bindings_json(v.witness);
    return o;
}

Outcome limit_outcome(const LimitResult& r) {
    Outcome o;
    switch (r.kind) {
        case LimitResult::Kind::Value:
            o.text = r.value.str() + "\n";
            o.fields = {{"kind", "Value"}, {"value", r.value.str()}};
            break;
        case LimitResult::Kind::NoLimit:
            o.code = 1;
            o.text = "NoLimit: " + r.reason + "\n" + bindings_text(r.witness);
            o.fields = {{"kind", "NoLimit"}, {"reason", r.reason}, {"witness", bindings_json(r.witness)}};
            break;
        case LimitResult::Kind::Inconclusive:
            o.code = 3;
            o.text = "Inconclusive: " + r.reason + "\n";
            o.fields = {{"kind", "Inconclusive"}, {"reason", r.reason}};
            break;
    }
    o.fields["probes"] = r.observations.size();
    return o;
}

Outcome derivative_outcome(const DerivativeResult& r) {
    Outcome o;
    switch (r.kind) {
        case DerivativeResult::Kind::Value:
            o.text = r.value.str() + "\n";
            o.fields = {{"kind", "Value"}, {"value", r.value.str()}};
            break;
        case DerivativeResult::Kind::NoDerivative:
            o.code = 1;
            o.text = "NoDerivative: " + r.reason + "\n" + bindings_text(r.witness);
            o.fields = {{"kind", "NoDerivative"}, {"reason", r.reason}, {"witness", bindings_json(r.witness)}};
            break;
        case DerivativeResult::Kind::Inconclusive:
            o.code = 3;
            o.text = "Inconclusive: " + r.reason + "\n";
            o.fields = {{"kind", "Inconclusive"}, {"reason", r.reason}};
            break;
    }
    return o;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

IntervalSet domain_of(const std::string& src, std::ostream& err) {
    std::vector<std::string> warnings;
    IntervalSet s = parse_set(src, &warnings);
    for (const auto& w : warnings) err << "warning: " << w << "\n";
    return s;
}

LimitTarget target_of(const std::string& to, const std::string& side) {
    Side s = side == "left" ? Side::Left : side == "right" ? Side::Right : Side::Both;
    if (to == "inf" || to == "+inf") return LimitTarget::plus_infinity();
    if (to == "-inf") return LimitTarget::minus_infinity();
    return LimitTarget::at(parse_rational(to), s);
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hypercalc: non-standard analysis on truncated Puiseux series in the infinitesimal d", "hypercalc"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--backend", opt.backend, "exact, decimal, or auto (exact with decimal retry)")
        ->check(CLI::IsMember({"exact", "decimal", "auto"}));
    app.add_option("--order", opt.order, "order bound for truncated expansions")->envname("HYPERCALC_ORDER");
    app.add_option("--digits", opt.digits, "significant digits of the decimal backend");
    app.add_option("--probes", opt.probes, "JSON probe catalog {infinitesimals: [...], infinite: [...]}");
    app.add_flag("--json", opt.json, "emit JSON (schema 1)");

    // Each subcommand sets `run` to the computation for a given context.
    std::function<Outcome(const Context&)> run;
    std::string command;

    auto sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = app.add_subcommand(name, help);
        s->fallthrough();
        return s;
    };

    std::string expr, lhs, rhs, at = "0", to, side = "both", domain = "R", limit_src, mode = "pointwise", set_src, op,
                                  with, family, parts, prop, model_path;
    std::vector<std::string> lets;
    unsigned k = 1, universe = 0, point = 0;
    bool ultra_only = false;

    auto* c_eval = sub("eval", "evaluate an expression in d");
    c_eval->add_option("--expr", expr)->required();
    c_eval->add_option("--let", lets, "bind a variable, e.g. x=1+d");
    auto env_of = [&](const Context& ctx) {
        Env env;
        for (const auto& l : lets) {
            auto eq = l.find('=');
            if (eq == std::string::npos) fail(ErrorKind::SyntaxError, "--let expects name=expression");
            env[l.substr(0, eq)] = eval(parse_function(l.substr(eq + 1), {}), {}, ctx);
        }
        return env;
    };
    c_eval->callback([&] {
        command = "eval";
        run = [&](const Context& ctx) {
            Value v = eval(parse_function(expr), env_of(ctx), ctx);
            return Outcome{0, v.str() + "\n", {{"value", v.str()}}};
        };
    });

    auto* c_st = sub("st", "standard part");
    c_st->add_option("--expr", expr)->required();
    c_st->add_option("--let", lets);
    c_st->callback([&] {
        command = "st";
        run = [&](const Context& ctx) {
            ExtReal s = standard_part(eval(parse_function(expr), env_of(ctx), ctx));
            return Outcome{0, s.str() + "\n", {{"value", s.str()}}};
        };
    });

    auto* c_classify = sub("classify", "infinitesimal / appreciable / infinite with sign");
    c_classify->add_option("--expr", expr)->required();
    c_classify->add_option("--let", lets);
    c_classify->callback([&] {
        command = "classify";
        run = [&](const Context& ctx) {
            Value v = eval(parse_function(expr), env_of(ctx), ctx);
            NumberClass c = classify(v);
            std::string magnitude(to_string(analyze(v).magnitude));
            return Outcome{0, c.str() + "\n", {{"value", c.str()}, {"magnitude", magnitude}}};
        };
    });

    auto* c_compare = sub("compare", "order two expressions");
    c_compare->add_option("--lhs", lhs)->required();
    c_compare->add_option("--rhs", rhs)->required();
    c_compare->add_option("--let", lets);
    c_compare->callback([&] {
        command = "compare";
        run = [&](const Context& ctx) {
            Env env = env_of(ctx);
            Ordering r = compare(eval(parse_function(lhs), env, ctx), eval(parse_function(rhs), env, ctx));
            std::string s(to_string(r));
            return Outcome{0, s + "\n", {{"value", s}}};
        };
    });

    auto* c_derive = sub("derive", "k-th derivative of f(x) at a rational point");
    c_derive->add_option("--expr", expr)->required();
    c_derive->add_option("--at", at)->required();
    c_derive->add_option("--k", k, "derivative order")->check(CLI::PositiveNumber);
    c_derive->callback([&] {
        command = "derive";
        run = [&](const Context& ctx) {
            return derivative_outcome(derivative(parse_function(expr), parse_rational(at), k, ctx, load_catalog(opt, ctx)));
        };
    });

    auto* c_limit = sub("limit", "limit of f(x) at a point or at +-inf");
    c_limit->add_option("--expr", expr)->required();
    c_limit->add_option("--to", to)->required();
    c_limit->add_option("--side", side)->check(CLI::IsMember({"both", "left", "right"}));
    c_limit->add_option("--domain", domain);
    c_limit->callback([&] {
        command = "limit";
        run = [&](const Context& ctx) {
            return limit_outcome(limit(parse_function(expr), target_of(to, side), ctx, domain_of(domain, err), load_catalog(opt, ctx)));
        };
    });

    auto* c_seq = sub("seqlimit", "limit of a_n as n grows without bound");
    c_seq->add_option("--expr", expr)->required();
    c_seq->callback([&] {
        command = "seqlimit";
        run = [&](const Context& ctx) { return limit_outcome(seq_limit(parse_function(expr), ctx, load_catalog(opt, ctx))); };
    });

    auto* c_cont = sub("cont", "continuity of f(x) at a point");
    c_cont->add_option("--expr", expr)->required();
    c_cont->add_option("--at", at)->required();
    c_cont->add_option("--domain", domain);
    c_cont->callback([&] {
        command = "cont";
        run = [&](const Context& ctx) {
            return verdict_outcome(continuity_at(parse_function(expr), parse_rational(at), ctx, domain_of(domain, err), load_catalog(opt, ctx)));
        };
    });

    auto* c_ucont = sub("ucont", "uniform continuity probe");
    c_ucont->add_option("--expr", expr)->required();
    c_ucont->add_option("--domain", domain);
    c_ucont->callback([&] {
        command = "ucont";
        run = [&](const Context& ctx) {
            return verdict_outcome(uniform_continuity_probe(parse_function(expr), domain_of(domain, err), ctx, load_catalog(opt, ctx)));
        };
    });

    auto* c_conv = sub("converge", "pointwise or uniform convergence of f_n(x)");
    c_conv->add_option("--expr", expr, "family in n and x")->required();
    c_conv->add_option("--limit", limit_src, "limit function in x")->required();
    c_conv->add_option("--domain", domain);
    c_conv->add_option("--mode", mode)->check(CLI::IsMember({"pointwise", "uniform"}));
    c_conv->callback([&] {
        command = "converge";
        run = [&](const Context& ctx) {
            auto m = mode == "uniform" ? ConvergenceMode::Uniform : ConvergenceMode::Pointwise;
            return verdict_outcome(convergence_probe(parse_function(expr), domain_of(domain, err), parse_function(limit_src), m, ctx,
                                                     load_catalog(opt, ctx)));
        };
    });

    auto* c_set = sub("set", "topological report on a finite union of intervals");
    c_set->add_option("--set", set_src)->required();
    c_set->add_option("--op", op)->check(CLI::IsMember({"union", "intersect", "subtract", "complement"}));
    c_set->add_option("--with", with);
    c_set->callback([&] {
        command = "set";
        run = [&](const Context&) {
            IntervalSet s = domain_of(set_src, err);
            if (!op.empty()) {
                if (op != "complement" && with.empty()) fail(ErrorKind::InvalidArgument, "--op " + op + " needs --with");
                if (op == "union") s = unite(s, domain_of(with, err));
                else if (op == "intersect") s = intersect(s, domain_of(with, err));
                else if (op == "subtract") s = subtract(s, domain_of(with, err));
                else s = complement(s);
            }
            SetReport r = set_report(s);
            Outcome o;
            o.text = "set: " + s.str() + "\nopen: " + yes_no(r.open) + "\nclosed: " + yes_no(r.closed) +
                     "\nbounded: " + yes_no(r.bounded) + "\ncompact: " + yes_no(r.compact) +
                     "\ncompact by monads: " + yes_no(r.compact_by_monads) + "\nclosure: " + r.closure.str() +
                     "\ninterior: " + r.interior.str() + "\n";
            o.fields = {{"set", s.str()},         {"open", r.open},
                        {"closed", r.closed},     {"bounded", r.bounded},
                        {"compact", r.compact},   {"compact_by_monads", r.compact_by_monads},
                        {"closure", r.closure.str()}, {"interior", r.interior.str()}};
            return o;
        };
    });

    auto* c_filters = sub("filters", "filters and ultrafilters on {1..n}");
    c_filters->require_subcommand(1);
    auto filter_sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = c_filters->add_subcommand(name, help);
        s->fallthrough();
        s->add_option("--universe", universe)->required()->check(CLI::Range(1u, SetFamily::max_universe));
        return s;
    };
    auto* f_check = filter_sub("check", "filter axioms and the ultrafilter test");
    f_check->add_option("--family", family)->required();
    f_check->callback([&] {
        command = "filters check";
        run = [&](const Context&) {
            SetFamily f = parse_family(universe, family);
            FilterCheck c = is_filter(f);
            Outcome o;
            o.fields = {{"family", f.str()}, {"filter", c.ok()}};
            if (!c.ok()) {
                o.code = 1;
                o.text = "filter: no (" + std::string(to_string(c.violated)) + ": " + c.detail + ")\n";
                o.fields["violated"] = std::string(to_string(c.violated));
                o.fields["detail"] = c.detail;
                return o;
            }
            bool u = is_ultrafilter(f);
            auto p = principal_point(f);
            o.text = "filter: yes\nultrafilter: " + yes_no(u) + "\nprincipal: " + (p ? "at " + std::to_string(*p) : "no") + "\n";
            o.fields["ultrafilter"] = u;
            o.fields["principal"] = p ? json(*p) : json(nullptr);
            return o;
        };
    });
    auto* f_enum = filter_sub("enumerate", "every filter (or ultrafilter) on a universe of size <= 4");
    f_enum->add_flag("--ultra", ultra_only, "ultrafilters only");
    f_enum->callback([&] {
        command = "filters enumerate";
        run = [&](const Context&) {
            auto all = ultra_only ? enumerate_ultrafilters(universe) : enumerate_filters(universe);
            Outcome o;
            json list = json::array();
            for (const auto& f : all) {
                o.text += f.str() + "\n";
                list.push_back(f.str());
            }
            o.text += std::to_string(all.size()) + (ultra_only ? " ultrafilters\n" : " filters\n");
            o.fields = {{"count", all.size()}, {"families", list}};
            return o;
        };
    });
    auto* f_part = filter_sub("partition", "which part of a partition lies in an ultrafilter");
    f_part->add_option("--family", family)->required();
    f_part->add_option("--parts", parts)->required();
    f_part->callback([&] {
        command = "filters partition";
        run = [&](const Context&) {
            auto masks = parse_masks(universe, parts);
            std::size_t i = partition_check(parse_family(universe, family), masks);
            std::string part = mask_str(masks[i], universe);
            return Outcome{0, std::to_string(i + 1) + " " + part + "\n", {{"index", i + 1}, {"part", part}}};
        };
    });
    auto* f_principal = filter_sub("principal", "the principal ultrafilter at a point");
    f_principal->add_option("--point", point)->required();
    f_principal->callback([&] {
        command = "filters principal";
        run = [&](const Context&) {
            SetFamily f = principal(universe, point);
            return Outcome{0, f.str() + "\n", {{"family", f.str()}}};
        };
    });

    auto* c_transfer = sub("transfer", "bounded propositions and their starred forms");
    c_transfer->require_subcommand(1);
    auto prop_sub = [&](const std::string& name, const std::string& help) {
        CLI::App* s = c_transfer->add_subcommand(name, help);
        s->fallthrough();
        s->add_option("--prop", prop)->required();
        return s;
    };
    prop_sub("star", "star every constant")->callback([&] {
        command = "transfer star";
        run = [&](const Context&) {
            std::string s = str(star_transform(parse_proposition(prop)));
            return Outcome{0, s + "\n", {{"value", s}}};
        };
    });
    prop_sub("lint", "flag statements that do not transfer as written")->callback([&] {
        command = "transfer lint";
        run = [&](const Context&) {
            auto warnings = lint_transfer(std::string_view(prop));
            Outcome o;
            o.code = warnings.empty() ? 0 : 1;
            for (const auto& w : warnings) o.text += "warning: " + w + "\n";
            if (warnings.empty()) o.text = "no warnings\n";
            o.fields = {{"warnings", warnings}};
            return o;
        };
    });
    prop_sub("parse", "canonical and core forms")->callback([&] {
        command = "transfer parse";
        run = [&](const Context&) {
            Formula f = parse_predicate(prop);
            auto free = free_variables(f);
            std::string canonical = str(f), core = str(to_core(f));
            std::string fv;
            for (std::size_t i = 0; i < free.size(); ++i) fv += (i ? "," : "") + free[i];
            return Outcome{0, canonical + "\ncore: " + core + "\nfree: " + (fv.empty() ? "none" : fv) + "\n",
                           {{"value", canonical}, {"core", core}, {"free", free}}};
        };
    });
    auto* t_eval = prop_sub("eval", "evaluate in a finite JSON model");
    t_eval->add_option("--model", model_path)->required();
    t_eval->callback([&] {
        command = "transfer eval";
        run = [&](const Context&) {
            bool v = eval_in_model(parse_proposition(prop), json::parse(read_file(model_path)));
            return Outcome{v ? 0 : 1, v ? "true\n" : "false\n", {{"value", v}}};
        };
    });

    std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(reversed.begin(), reversed.end());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    auto emit_error = [&](const std::string& kind, const std::string& message, int code) {
        if (opt.json) {
            json j = {{"schema", 1}, {"command", command}, {"error", {{"kind", kind}, {"message", message}}}};
            out << j.dump() << "\n";
        } else {
            err << "error: " << message << "\n";
        }
        return code;
    };

    try {
        const bool retry = opt.backend == "auto";
        Backend first = opt.backend == "decimal" ? Backend::Decimal : Backend::Exact;
        Outcome o;
        Backend used = first;
        try {
            o = run(make_context(opt, first));
        } catch (const Error& e) {
            if (!retry || e.kind() != ErrorKind::IrrationalCoefficient) throw;
            used = Backend::Decimal;
            o = run(make_context(opt, used));
        }
        if (opt.json) {
            json j = {{"schema", 1}, {"command", command}, {"backend", used == Backend::Exact ? "exact" : "decimal"}};
            j.update(o.fields);
            out << j.dump() << "\n";
        } else {
            out << o.text;
        }
        return o.code;
    } catch (const Error& e) {
        return emit_error(std::string(to_string(e.kind())), e.what(), exit_code(e.kind()));
    } catch (const json::exception& e) {
        return emit_error("InvalidArgument", std::string("malformed JSON: ") + e.what(), 2);
    }
}

}  // namespace hypercalc
