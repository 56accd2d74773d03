// Command-line front end: parse, reduce, evaluate, inspect transitions, play
// the bisimulation game, translate to CPS, search for equational proofs and
// fuzz the semantics, from one binary.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lams/axioms.hpp"
#include "lams/bisim.hpp"
#include "lams/cps.hpp"
#include "lams/lts.hpp"
#include "lams/reduction.hpp"
#include "lams/syntax.hpp"
#include "lams/testgen.hpp"

using nlohmann::json;
using namespace lams;

namespace {

constexpr int kExitOk = 0;        // success / positive verdict
constexpr int kExitNegative = 1;  // distinguished / not equivalent / fuzz failures
constexpr int kExitUsage = 2;     // usage or input error
constexpr int kExitUnknown = 3;   // unknown / timeout

struct Options {
    bool json = false;
    std::size_t fuel = 0;  // 0 = per-command default
    std::uint64_t seed = 0;

    std::size_t fuel_or(std::size_t dflt) const { return fuel ? fuel : dflt; }
};

json label_json(const lts::Label& l) {
    if (std::holds_alternative<lts::TauLabel>(l)) return {{"kind", "tau"}};
    if (const auto* v = std::get_if<lts::ValueProbe>(&l))
        return {{"kind", "value"}, {"value", print(v->value)}};
    return {{"kind", "context"}, {"context", print(std::get<lts::ContextProbe>(l).context)}};
}

int run_parse(const Options& opt, const std::string& src) {
    TermPtr t = parse_with_abbrevs(src);
    if (opt.json)
        std::cout << json{{"term", print(t)}, {"closed", is_closed(t)}}.dump() << "\n";
    else
        std::cout << print(t) << "\n";
    return kExitOk;
}

int run_reduce(const Options& opt, const std::string& src, bool show_trace) {
    TermPtr t = parse_with_abbrevs(src);
    reduction::Trace tr = reduction::trace(t, opt.fuel_or(1000));
    if (opt.json) {
        std::cout << reduction::trace_json(tr) << "\n";
    } else {
        if (show_trace)
            for (const auto& e : tr.steps)
                std::cout << reduction::rule_name(e.rule) << "\t" << print(e.term) << "\n";
        std::cout << reduction::kind_name(tr.outcome.kind) << " after " << tr.outcome.steps
                  << " steps: " << print(tr.outcome.term) << "\n";
    }
    return tr.outcome.kind == reduction::Observable::Kind::Timeout ? kExitUnknown : kExitOk;
}

int run_eval(const Options& opt, const std::string& src) {
    TermPtr t = parse_with_abbrevs(src);
    reduction::Observable o = reduction::evaluate(t, opt.fuel_or(1000));
    if (opt.json)
        std::cout << json{{"result", reduction::kind_name(o.kind)},
                          {"term", print(o.term)},
                          {"steps", o.steps}}
                         .dump()
                  << "\n";
    else
        std::cout << reduction::kind_name(o.kind) << " after " << o.steps
                  << " steps: " << print(o.term) << "\n";
    return o.kind == reduction::Observable::Kind::Timeout ? kExitUnknown : kExitOk;
}

int run_lts(const Options& opt, const std::string& src) {
    TermPtr t = parse_with_abbrevs(src);
    auto d = lts::tau_step_derivation(t);
    const char* accepts = is_value(t) ? "value-probes"
                          : std::holds_alternative<reduction::IsStuck>(reduction::decompose(t))
                              ? "context-probes"
                              : "none";
    if (opt.json) {
        json j;
        j["tau"] = d ? json(print(d->target)) : json(nullptr);
        j["rules"] = json::array();
        if (d)
            for (lts::RuleTag r : d->rules) j["rules"].push_back(lts::rule_name(r));
        j["accepts"] = accepts;
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    if (d) {
        std::cout << "tau -> " << print(d->target) << "   [";
        for (std::size_t i = 0; i < d->rules.size(); ++i)
            std::cout << (i ? " " : "") << lts::rule_name(d->rules[i]);
        std::cout << "]\n";
    } else {
        std::cout << "no tau step\n";
    }
    std::cout << "accepts: " << accepts << "\n";
    return kExitOk;
}

bisim::ProbePool load_pool(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open pool file: " + path);
    json j = json::parse(in);
    bisim::ProbePool pool = bisim::default_pool();
    if (j.contains("values")) {
        pool.values.clear();
        for (const auto& s : j.at("values")) {
            TermPtr v = parse_with_abbrevs(s.get<std::string>());
            require_closed(v, "pool value");
            if (!is_value(v))
                throw std::runtime_error("pool entry is not a value: " + s.get<std::string>());
            pool.values.push_back(v);
        }
    }
    if (j.contains("contexts")) {
        pool.contexts.clear();
        for (const auto& s : j.at("contexts")) {
            PureContext c = parse_pure_context_with_abbrevs(s.get<std::string>());
            if (!is_closed(c))
                throw std::runtime_error("pool context is not closed: " + s.get<std::string>());
            pool.contexts.push_back(c);
        }
    }
    return pool;
}

int run_bisim(const Options& opt, const std::string& s0, const std::string& s1, int depth,
              const std::string& pool_file) {
    bisim::ProbePool pool = pool_file.empty() ? bisim::default_pool() : load_pool(pool_file);
    pool.depth = depth;
    pool.fuel = opt.fuel_or(pool.fuel);
    bisim::Verdict v = bisim::check(parse_with_abbrevs(s0), parse_with_abbrevs(s1), pool);
    if (opt.json) {
        json j;
        if (const auto* d = std::get_if<bisim::Distinguished>(&v)) {
            j["verdict"] = "distinguished";
            j["reason"] = d->reason;
            j["trace"] = json::array();
            for (const lts::Label& l : d->trace) j["trace"].push_back(label_json(l));
        } else {
            const auto& b = std::get<bisim::BisimilarUpTo>(v);
            j["verdict"] = "bisimilar-up-to";
            j["depth"] = b.depth;
            j["pool"] = b.pool_fingerprint;
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << bisim::verdict_text(v) << "\n";
    }
    return bisim::is_distinguished(v) ? kExitNegative : kExitOk;
}

int run_cps(const Options& opt, const std::string& src) {
    TermPtr t = cps::translate(parse_with_abbrevs(src));
    if (opt.json)
        std::cout << json{{"term", print(t)}}.dump() << "\n";
    else
        std::cout << print(t) << "\n";
    return kExitOk;
}

int run_cps_equiv(const Options& opt, const std::string& s0, const std::string& s1) {
    cps::EquivVerdict v =
        cps::equivalent(parse_with_abbrevs(s0), parse_with_abbrevs(s1), opt.fuel_or(5000));
    if (opt.json) {
        json j{{"verdict", cps::verdict_name(v)}};
        if (const auto* e = std::get_if<cps::Equivalent>(&v)) {
            j["normal_form"] = print(e->normal_form);
        } else if (const auto* n = std::get_if<cps::NotEquivalent>(&v)) {
            j["left_nf"] = print(n->left_nf);
            j["right_nf"] = print(n->right_nf);
        } else {
            const auto& u = std::get<cps::Unknown>(v);
            j["left_timed_out"] = u.left_timed_out;
            j["right_timed_out"] = u.right_timed_out;
        }
        std::cout << j.dump() << "\n";
    } else if (const auto* e = std::get_if<cps::Equivalent>(&v)) {
        std::cout << "equivalent; normal form: " << print(e->normal_form) << "\n";
    } else if (const auto* n = std::get_if<cps::NotEquivalent>(&v)) {
        std::cout << "not equivalent\n  left:  " << print(n->left_nf)
                  << "\n  right: " << print(n->right_nf) << "\n";
    } else {
        std::cout << "unknown (normalization ran out of fuel)\n";
    }
    if (std::holds_alternative<cps::NotEquivalent>(v)) return kExitNegative;
    if (std::holds_alternative<cps::Unknown>(v)) return kExitUnknown;
    return kExitOk;
}

int run_prove(const Options& opt, const std::string& s0, const std::string& s1,
              std::size_t budget) {
    TermPtr t0 = parse_with_abbrevs(s0), t1 = parse_with_abbrevs(s1);
    auto tr = axioms::prove_equal(t0, t1, budget);
    if (opt.json) {
        json j;
        j["status"] = tr ? "proved" : "unknown";
        j["steps"] = json::array();
        if (tr)
            for (const auto& s : tr->steps)
                j["steps"].push_back({{"path", s.path},
                                      {"axiom", axioms::axiom_name(s.axiom)},
                                      {"dir", axioms::direction_name(s.dir)},
                                      {"term", print(s.result)}});
        std::cout << j.dump() << "\n";
    } else if (tr) {
        if (tr->steps.empty())
            std::cout << "equal by reflexivity\n";
        else
            std::cout << axioms::trace_text(*tr);
    } else {
        std::cout << "unknown\n";
    }
    return tr ? kExitOk : kExitUnknown;
}

int run_fuzz(const Options& opt, std::size_t n, const std::string& check, std::size_t max_size) {
    testgen::GenConfig cfg;
    cfg.seed = opt.seed;
    cfg.max_size = max_size;
    std::size_t fuel = opt.fuel_or(200);
    testgen::Report total;
    auto merge = [&total](const testgen::Report& r) {
        total.checked += r.checked;
        total.failures.insert(total.failures.end(), r.failures.begin(), r.failures.end());
        for (const auto& [k, v] : r.rule_coverage) total.rule_coverage[k] += v;
    };
    if (check == "lts" || check == "all") merge(testgen::diff_lts_reduction(n, cfg, fuel));
    if (check == "stuck" || check == "all") merge(testgen::diff_stuck_law(n, cfg, fuel));
    if (check == "cps-sound" || check == "all")
        merge(testgen::diff_cps_soundness(std::min<std::size_t>(n, 200), cfg, 5000));
    std::cout << testgen::report_json(total) << "\n";
    return total.clean() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for the call-by-value lambda calculus with shift and reset"};
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "machine-readable output");
    app.add_option("--fuel", opt.fuel, "step budget (per-command default when omitted)");
    app.add_option("--seed", opt.seed, "random seed");

    std::string term0, term1, pool_file, check = "all";
    bool show_trace = false;
    int depth = 4;
    std::size_t budget = 10000, fuzz_n = 100, max_size = 14;

    CLI::App* c_parse = app.add_subcommand("parse", "parse a term and print it back");
    c_parse->add_option("term", term0)->required();

    CLI::App* c_reduce = app.add_subcommand("reduce", "reduce a term step by step");
    c_reduce->add_option("term", term0)->required();
    c_reduce->add_flag("--trace", show_trace, "print every step with its rule");

    CLI::App* c_eval = app.add_subcommand("eval", "evaluate a term to value or stuck term");
    c_eval->add_option("term", term0)->required();

    CLI::App* c_lts = app.add_subcommand("lts", "show the transitions a term can take");
    c_lts->add_option("term", term0)->required();

    CLI::App* c_bisim = app.add_subcommand("bisim", "play the bounded bisimulation game");
    c_bisim->add_option("term0", term0)->required();
    c_bisim->add_option("term1", term1)->required();
    c_bisim->add_option("--depth", depth, "game depth bound");
    c_bisim->add_option("--pool", pool_file, "JSON probe pool {\"values\":[],\"contexts\":[]}");

    CLI::App* c_cps = app.add_subcommand("cps", "translate into continuation-passing style");
    c_cps->add_option("term", term0)->required();

    CLI::App* c_cpse = app.add_subcommand("cps-equiv", "compare CPS translations up to beta-eta");
    c_cpse->add_option("term0", term0)->required();
    c_cpse->add_option("term1", term1)->required();

    CLI::App* c_prove = app.add_subcommand("prove", "search for an equational derivation");
    c_prove->add_option("term0", term0)->required();
    c_prove->add_option("term1", term1)->required();
    c_prove->add_option("--budget", budget, "search node budget");

    CLI::App* c_fuzz = app.add_subcommand("fuzz", "differential tests on random terms");
    c_fuzz->add_option("--n", fuzz_n, "number of terms");
    c_fuzz->add_option("--check", check, "lts|stuck|cps-sound|all")
        ->check(CLI::IsMember({"lts", "stuck", "cps-sound", "all"}));
    c_fuzz->add_option("--max-size", max_size, "term size bound");

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (c_parse->parsed()) return run_parse(opt, term0);
        if (c_reduce->parsed()) return run_reduce(opt, term0, show_trace);
        if (c_eval->parsed()) return run_eval(opt, term0);
        if (c_lts->parsed()) return run_lts(opt, term0);
        if (c_bisim->parsed()) return run_bisim(opt, term0, term1, depth, pool_file);
        if (c_cps->parsed()) return run_cps(opt, term0);
        if (c_cpse->parsed()) return run_cps_equiv(opt, term0, term1);
        if (c_prove->parsed()) return run_prove(opt, term0, term1, budget);
        if (c_fuzz->parsed()) return run_fuzz(opt, fuzz_n, check, max_size);
    } catch (const ParseError& e) {
        std::cerr << "syntax error at " << e.what()
                  << "\ngrammar: term := '\\' VAR '.' term | ('S'|'shift') VAR '.' term | app\n"
                     "         app  := atom atom*\n"
                     "         atom := VAR | '(' term ')' | '<' term '>'\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
