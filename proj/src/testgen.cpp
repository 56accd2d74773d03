#include "lams/testgen.hpp"

#include <json.hpp>

#include "lams/cps.hpp"
#include "lams/lts.hpp"
#include "lams/reduction.hpp"

namespace lams::testgen {

TermGen::TermGen(const GenConfig& cfg) : cfg_(cfg), state_(cfg.seed * 0x9e3779b97f4a7c15ull + 1) {
    const auto& w = cfg.weights;
    for (double x : {w.var, w.abs, w.app, w.shift, w.reset})
        if (x < 0) throw std::invalid_argument("TermGen: negative weight");
    if (w.var <= 0 && w.abs <= 0 && w.app <= 0 && w.shift <= 0 && w.reset <= 0)
        throw std::invalid_argument("TermGen: at least one weight must be positive");
}

// splitmix64: small and identical on every platform.
std::uint64_t TermGen::rand64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::size_t TermGen::below(std::size_t n) { return n ? rand64() % n : 0; }

bool TermGen::chance(double p) {
    if (p <= 0) return false;
    if (p >= 1) return true;
    return below(1000000) < static_cast<std::size_t>(p * 1000000);
}

TermPtr TermGen::gen(std::size_t budget, std::vector<std::string>& env) {
    static const char* kFreePool[] = {"a", "b", "c"};
    bool can_var = !env.empty() || !cfg_.closed;
    std::size_t min_sub = can_var ? 1 : 2;

    enum { kVar, kAbs, kApp, kShift, kReset };
    std::uint64_t w[5] = {};
    auto milli = [](double x) { return static_cast<std::uint64_t>(x * 1000); };
    if (can_var && budget >= 1) w[kVar] = milli(cfg_.weights.var);
    if (budget >= 2) w[kAbs] = milli(cfg_.weights.abs);
    if (budget >= 1 + 2 * min_sub) w[kApp] = milli(cfg_.weights.app);
    if (budget >= 2) w[kShift] = milli(cfg_.weights.shift);
    if (budget >= 1 + min_sub) w[kReset] = milli(cfg_.weights.reset);

    std::uint64_t total = w[0] + w[1] + w[2] + w[3] + w[4];
    int choice;
    if (total == 0) {
        // Nothing fits: fall back to a variable, or to the smallest closed
        // term when there is nothing to refer to.
        if (can_var) {
            choice = kVar;
        } else {
            return ident_term();
        }
    } else {
        std::uint64_t r = rand64() % total;
        choice = 0;
        while (r >= w[choice]) r -= w[choice++];
    }

    switch (choice) {
        case kVar: {
            if (!env.empty() && (cfg_.closed || below(4) != 0))
                return mk_free(env[below(env.size())]);
            return mk_free(kFreePool[below(3)]);
        }
        case kAbs:
        case kShift: {
            std::string name = "v" + std::to_string(var_counter_++);
            env.push_back(name);
            TermPtr body = gen(budget - 1, env);
            env.pop_back();
            TermPtr out = choice == kAbs ? mk_abs(name, close_binder(body, name))
                                         : mk_shift(name, close_binder(body, name));
            if (choice == kShift && contains_shift(out) && chance(cfg_.reset_bias) &&
                term_size(out) + 1 <= budget)
                out = mk_reset(out);
            return out;
        }
        case kApp: {
            std::size_t sub = budget - 1;
            std::size_t left = min_sub + below(sub - 2 * min_sub + 1);
            TermPtr f = gen(left, env);
            TermPtr a = gen(sub - left, env);
            TermPtr out = mk_app(f, a);
            if (contains_shift(out) && chance(cfg_.reset_bias) && term_size(out) + 1 <= budget)
                out = mk_reset(out);
            return out;
        }
        default: return mk_reset(gen(budget - 1, env));
    }
}

TermPtr TermGen::next() {
    std::vector<std::string> env;
    return gen(cfg_.max_size, env);
}

PureContext TermGen::next_pure_context(std::size_t max_frames) {
    PureContext c;
    std::size_t n = below(max_frames + 1);
    std::vector<std::string> env;
    for (std::size_t j = 0; j < n; ++j) {
        if (chance(0.5)) {
            TermPtr v = gen(5, env);
            if (!is_value(v)) v = mk_abs("z", v);
            c.frames.push_back(Frame::applied(v));
        } else {
            c.frames.push_back(Frame::pending(gen(4, env)));
        }
    }
    return c;
}

GCtx TermGen::gen_gctx(std::size_t depth, std::vector<std::string>& bound) {
    if (depth == 0) return ghole();
    auto some_term = [&]() -> TermPtr {
        if (!bound.empty() && chance(0.3)) return mk_free(bound[below(bound.size())]);
        std::vector<std::string> env;
        return gen(5, env);
    };
    switch (below(6)) {
        case 0: return ghole();
        case 1: {
            std::string name = "c" + std::to_string(var_counter_++);
            bound.push_back(name);
            GCtx b = gen_gctx(depth - 1, bound);
            bound.pop_back();
            return gabs(name, b);
        }
        case 2: return gapp_l(gen_gctx(depth - 1, bound), some_term());
        case 3: return gapp_r(some_term(), gen_gctx(depth - 1, bound));
        case 4: {
            std::string name = "c" + std::to_string(var_counter_++);
            bound.push_back(name);
            GCtx b = gen_gctx(depth - 1, bound);
            bound.pop_back();
            return gshift(name, b);
        }
        default: return greset(gen_gctx(depth - 1, bound));
    }
}

GCtx TermGen::next_general_context(std::size_t max_depth) {
    std::vector<std::string> bound;
    return gen_gctx(max_depth, bound);
}

TermPtr gen_term(const GenConfig& cfg) { return TermGen(cfg).next(); }

std::string report_json(const Report& r) {
    nlohmann::json j;
    j["checked"] = r.checked;
    j["failures"] = nlohmann::json::array();
    for (const Failure& f : r.failures)
        j["failures"].push_back({{"check", f.check}, {"term", f.term}, {"detail", f.detail}});
    j["rule_coverage"] = r.rule_coverage;
    return j.dump();
}

Report diff_lts_reduction(std::size_t n, const GenConfig& cfg, std::size_t fuel) {
    return diff_lts_reduction(n, cfg, fuel,
                              [](const TermPtr& t) { return lts::tau_step(t); });
}

Report diff_lts_reduction(std::size_t n, const GenConfig& cfg, std::size_t fuel,
                          const TauFn& tau) {
    TermGen gen(cfg);
    Report rep;
    rep.checked = n;
    for (std::size_t i = 0; i < n; ++i) {
        TermPtr t = gen.next();
        TermPtr cur = t;
        bool quiescent = false;
        for (std::size_t s = 0; s <= fuel; ++s) {
            auto rstep = reduction::step_tagged(cur);
            auto lstep = tau(cur);
            if (rstep.has_value() != lstep.has_value()) {
                rep.failures.push_back(
                    {"lts-reduction", print(t),
                     "at step " + std::to_string(s) + " on " + print(cur) + ": " +
                         (rstep ? "reduction steps but the LTS does not"
                                : "the LTS steps but reduction does not")});
                break;
            }
            if (!rstep) {
                quiescent = true;
                break;
            }
            if (!alpha_eq(rstep->first, *lstep)) {
                rep.failures.push_back({"lts-reduction", print(t),
                                        "successors differ at step " + std::to_string(s) + ": " +
                                            print(rstep->first) + " vs " + print(*lstep)});
                break;
            }
            rep.rule_coverage[reduction::rule_name(rstep->second)]++;
            if (auto d = lts::tau_step_derivation(cur))
                for (lts::RuleTag tag : d->rules) rep.rule_coverage[lts::rule_name(tag)]++;
            cur = rstep->first;
        }
        if (!quiescent) continue;
        // Probe the endpoint so the value and capture rules get exercised too.
        if (is_value(cur)) {
            if (lts::probe_value(cur, ident_term())) rep.rule_coverage["LTSval"]++;
        } else if (auto d = lts::capture_derivation(cur, PureContext{})) {
            for (lts::RuleTag tag : d->rules) rep.rule_coverage[lts::rule_name(tag)]++;
        }
    }
    return rep;
}

Report diff_stuck_law(std::size_t n, const GenConfig& cfg, std::size_t fuel) {
    TermGen gen(cfg);
    Report rep;
    rep.checked = n;
    for (std::size_t i = 0; i < n; ++i) {
        TermPtr t = gen.next();
        reduction::Trace tr = reduction::trace(t, fuel);
        for (const reduction::TraceEntry& e : tr.steps)
            rep.rule_coverage[reduction::rule_name(e.rule)]++;
        if (tr.outcome.kind == reduction::Observable::Kind::Value) {
            if (!is_value(tr.outcome.term))
                rep.failures.push_back({"stuck-law", print(t), "value outcome is not a value"});
            continue;
        }
        if (tr.outcome.kind != reduction::Observable::Kind::Stuck) continue;
        reduction::Decomposition d = reduction::decompose(tr.outcome.term);
        const auto* stuck = std::get_if<reduction::IsStuck>(&d);
        if (!stuck) {
            rep.failures.push_back({"stuck-law", print(t),
                                    "stuck outcome " + print(tr.outcome.term) +
                                        " does not decompose as E[S k.t]"});
            continue;
        }
        if (!identical(plug(stuck->context, stuck->shift_term), tr.outcome.term))
            rep.failures.push_back(
                {"stuck-law", print(t), "stuck decomposition does not recompose exactly"});
    }
    return rep;
}

Report diff_cps_soundness(std::size_t n, const GenConfig& cfg, std::size_t fuel) {
    TermGen gen(cfg);
    Report rep;
    std::size_t attempts = 0, collected = 0;
    while (collected < n && attempts < 60 * n) {
        ++attempts;
        TermPtr t = gen.next();
        std::optional<TermPtr> succ = reduction::step(t);
        if (!succ) continue;
        ++collected;
        cps::EquivVerdict v = cps::equivalent(t, *succ, fuel);
        if (std::holds_alternative<cps::NotEquivalent>(v)) {
            rep.failures.push_back({"cps-soundness", print(t),
                                    "t and its successor " + print(*succ) +
                                        " have distinct CPS normal forms"});
        } else if (std::holds_alternative<cps::Unknown>(v)) {
            rep.rule_coverage["cps_unknown"]++;
        } else {
            rep.rule_coverage["cps_equivalent"]++;
        }
    }
    rep.checked = collected;
    return rep;
}

}  // namespace lams::testgen
