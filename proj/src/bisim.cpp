#include "lams/bisim.hpp"

#include <cstdint>
#include <cstdio>
#include <unordered_set>

namespace lams::bisim {

namespace {

std::uint64_t fnv1a(const std::string& s, std::uint64_t h = 1469598103934665603ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

std::string ProbePool::fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    for (const TermPtr& v : values) h = fnv1a(canonical_key(v), h);
    for (const PureContext& c : contexts) h = fnv1a(print(c), h);
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zuv/%zuc/d%d/f%zu/%016llx", values.size(), contexts.size(),
                  depth, fuel, static_cast<unsigned long long>(h));
    return buf;
}

ProbePool default_pool() {
    ProbePool p;
    p.values = {
        ident_term(),
        self_app_term(),
        mk_abs("x", omega_term()),
        mk_abs("x", mk_abs("y", mk_bound(1))),
        mk_abs("x", mk_shift("k", mk_app(mk_bound(0), mk_bound(1)))),
    };
    p.contexts.push_back(PureContext{});
    p.contexts.push_back(PureContext{{Frame::applied(ident_term())}});
    p.contexts.push_back(PureContext{{Frame::pending(ident_term())}});
    p.contexts.push_back(PureContext{{Frame::applied(mk_abs("x", omega_term()))}});
    return p;
}

bool is_distinguished(const Verdict& v) { return std::holds_alternative<Distinguished>(v); }

std::string verdict_text(const Verdict& v) {
    if (const auto* d = std::get_if<Distinguished>(&v)) {
        std::string out = "distinguished (" + d->reason + ")";
        for (const lts::Label& l : d->trace) out += "\n  probe: " + lts::label_text(l);
        return out;
    }
    const auto& b = std::get<BisimilarUpTo>(v);
    return "bisimilar up to depth " + std::to_string(b.depth) + " [" + b.pool_fingerprint + "]";
}

namespace {

using reduction::Observable;

lts::Label discriminator(Observable::Kind a, Observable::Kind b) {
    // A stuck side accepts a context probe that the other side never will; a
    // value side accepts value probes. Either way one concrete action is
    // enabled on exactly one side.
    if (a == Observable::Kind::Stuck || b == Observable::Kind::Stuck)
        return lts::ContextProbe{PureContext{}};
    return lts::ValueProbe{ident_term()};
}

struct Game {
    const ProbePool& pool;
    std::unordered_set<std::string> visited;  // unordered quiescent pairs

    std::optional<Distinguished> play(const TermPtr& t0, const TermPtr& t1, int depth,
                                      std::vector<lts::Label>& path) {
        if (alpha_eq(t0, t1)) return std::nullopt;
        Observable o0 = lts::observables(t0, pool.fuel);
        Observable o1 = lts::observables(t1, pool.fuel);
        if (o0.kind != o1.kind) {
            Distinguished d;
            d.trace = path;
            d.trace.push_back(discriminator(o0.kind, o1.kind));
            d.reason = std::string(reduction::kind_name(o0.kind)) + " vs " +
                       reduction::kind_name(o1.kind);
            return d;
        }
        if (o0.kind == Observable::Kind::Timeout) return std::nullopt;
        if (alpha_eq(o0.term, o1.term)) return std::nullopt;
        if (depth == 0) return std::nullopt;
        std::string k0 = canonical_key(o0.term), k1 = canonical_key(o1.term);
        std::string key = k0 < k1 ? k0 + "|" + k1 : k1 + "|" + k0;
        if (!visited.insert(key).second) return std::nullopt;  // coinductive hit
        if (o0.kind == Observable::Kind::Value) {
            for (const TermPtr& v : pool.values) {
                auto n0 = lts::probe_value(o0.term, v);
                auto n1 = lts::probe_value(o1.term, v);
                path.push_back(lts::ValueProbe{v});
                auto r = play(*n0, *n1, depth - 1, path);
                path.pop_back();
                if (r) return r;
            }
        } else {
            for (const PureContext& e : pool.contexts) {
                auto n0 = lts::probe_context(o0.term, e);
                auto n1 = lts::probe_context(o1.term, e);
                path.push_back(lts::ContextProbe{e});
                auto r = play(*n0, *n1, depth - 1, path);
                path.pop_back();
                if (r) return r;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

bool replay_distinguishing_trace(const TermPtr& t0, const TermPtr& t1,
                                 const std::vector<lts::Label>& trace, std::size_t fuel) {
    if (trace.empty()) return false;
    TermPtr cur0 = t0, cur1 = t1;
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
        Observable o0 = lts::observables(cur0, fuel);
        Observable o1 = lts::observables(cur1, fuel);
        std::optional<TermPtr> n0, n1;
        if (const auto* v = std::get_if<lts::ValueProbe>(&trace[i])) {
            n0 = lts::probe_value(o0.term, v->value);
            n1 = lts::probe_value(o1.term, v->value);
        } else if (const auto* c = std::get_if<lts::ContextProbe>(&trace[i])) {
            n0 = lts::probe_context(o0.term, c->context);
            n1 = lts::probe_context(o1.term, c->context);
        } else {
            return false;  // tau never appears in a distinguishing trace
        }
        if (!n0 || !n1) return false;
        cur0 = *n0;
        cur1 = *n1;
    }
    // The final label witnesses the mismatch: after the leading probes the
    // two sides settle in different observable classes.
    Observable o0 = lts::observables(cur0, fuel);
    Observable o1 = lts::observables(cur1, fuel);
    return o0.kind != o1.kind;
}

namespace {

void validate_pool(const ProbePool& pool) {
    if (pool.depth < 0) throw std::invalid_argument("probe pool: depth must be nonnegative");
    if (pool.fuel < 1) throw std::invalid_argument("probe pool: fuel must be at least 1");
    for (const TermPtr& v : pool.values) {
        require_closed(v, "probe pool value");
        if (!is_value(v)) throw std::invalid_argument("probe pool: non-value probe");
    }
    for (const PureContext& c : pool.contexts)
        if (!is_closed(c)) throw OpenTermError("probe pool: context has free variables");
}

}  // namespace

Verdict check(const TermPtr& t0, const TermPtr& t1, const ProbePool& pool) {
    require_closed(t0, "bisim::check");
    require_closed(t1, "bisim::check");
    validate_pool(pool);
    Game game{pool, {}};
    std::vector<lts::Label> path;
    std::optional<Distinguished> d = game.play(t0, t1, pool.depth, path);
    if (!d) return BisimilarUpTo{pool.depth, pool.fingerprint()};
    if (!replay_distinguishing_trace(t0, t1, d->trace, pool.fuel))
        throw std::logic_error("bisim::check: distinguishing trace failed to replay");
    return *d;
}

Verdict check_axiom_instance(axioms::AxiomTag tag, const axioms::AxiomInstance& inst,
                             const ProbePool& pool) {
    auto [lhs, rhs] = axioms::build_axiom_sides(tag, inst);
    return check(lhs, rhs, pool);
}

std::vector<std::pair<GCtx, Verdict>> congruence_sample(const TermPtr& t0, const TermPtr& t1,
                                                        const std::vector<GCtx>& contexts,
                                                        const ProbePool& pool) {
    std::vector<std::pair<GCtx, Verdict>> out;
    out.reserve(contexts.size());
    for (const GCtx& c : contexts) {
        TermPtr p0 = plug(c, t0);
        TermPtr p1 = plug(c, t1);
        require_closed(p0, "congruence_sample");
        require_closed(p1, "congruence_sample");
        out.emplace_back(c, check(p0, p1, pool));
    }
    return out;
}

}  // namespace lams::bisim
