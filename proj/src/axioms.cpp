#include "lams/axioms.hpp"

#include <deque>
#include <functional>
#include <unordered_map>
#include <unordered_set>

namespace lams::axioms {

const char* axiom_name(AxiomTag a) {
    switch (a) {
        case AxiomTag::BetaV: return "beta_v";
        case AxiomTag::EtaV: return "eta_v";
        case AxiomTag::BetaOmega: return "beta_omega";
        case AxiomTag::ResetValue: return "reset_value";
        case AxiomTag::ResetShift: return "reset_shift";
        case AxiomTag::ResetLift: return "reset_lift";
        case AxiomTag::ShiftReset: return "shift_reset";
        case AxiomTag::ShiftElim: return "shift_elim";
    }
    return "?";
}

const char* direction_name(Direction d) {
    return d == Direction::LeftToRight ? "L->R" : "R->L";
}

Direction flip(Direction d) {
    return d == Direction::LeftToRight ? Direction::RightToLeft : Direction::LeftToRight;
}

namespace {

constexpr std::size_t kBetaOmegaFrameBound = 8;

struct Match {
    AxiomTag axiom;
    Direction dir;
    TermPtr result;
    std::string binding;
};

bool locally_closed_rec(const TermPtr& t, int depth) {
    if (const auto* v = std::get_if<Bound>(&t->node)) return v->index < depth;
    if (const auto* l = std::get_if<Abs>(&t->node)) return locally_closed_rec(l->body, depth + 1);
    if (const auto* p = std::get_if<App>(&t->node))
        return locally_closed_rec(p->fun, depth) && locally_closed_rec(p->arg, depth);
    if (const auto* s = std::get_if<Shift>(&t->node)) return locally_closed_rec(s->body, depth + 1);
    if (const auto* r = std::get_if<Reset>(&t->node)) return locally_closed_rec(r->body, depth);
    return true;
}

bool locally_closed(const TermPtr& t) { return locally_closed_rec(t, 0); }

std::size_t count_free(const TermPtr& t, const std::string& name) {
    if (const auto* f = std::get_if<Free>(&t->node)) return f->name == name ? 1 : 0;
    if (const auto* l = std::get_if<Abs>(&t->node)) return count_free(l->body, name);
    if (const auto* p = std::get_if<App>(&t->node))
        return count_free(p->fun, name) + count_free(p->arg, name);
    if (const auto* s = std::get_if<Shift>(&t->node)) return count_free(s->body, name);
    if (const auto* r = std::get_if<Reset>(&t->node)) return count_free(r->body, name);
    return 0;
}

// All pure positions of t: pairs (E, s) with t = E[s]. The hole never crosses
// a binder or a delimiter, and descends right of an application only when the
// function is a value.
void pure_positions(const TermPtr& t, std::vector<std::pair<PureContext, TermPtr>>& out) {
    out.push_back({PureContext{}, t});
    if (const auto* p = std::get_if<App>(&t->node)) {
        std::size_t from = out.size();
        pure_positions(p->fun, out);
        for (std::size_t j = from; j < out.size(); ++j)
            out[j].first.frames.push_back(Frame::pending(p->arg));
        if (is_value_like(p->fun)) {
            from = out.size();
            pure_positions(p->arg, out);
            for (std::size_t j = from; j < out.size(); ++j)
                out[j].first.frames.push_back(Frame::applied(p->fun));
        }
    }
}

std::vector<std::pair<PureContext, TermPtr>> pure_positions(const TermPtr& t) {
    std::vector<std::pair<PureContext, TermPtr>> out;
    pure_positions(t, out);
    return out;
}

void collect_value_candidates(const TermPtr& t, std::vector<TermPtr>& out,
                              std::unordered_set<std::string>& seen) {
    if (is_value_like(t) && locally_closed(t) && seen.insert(canonical_key(t)).second)
        out.push_back(t);
    if (const auto* l = std::get_if<Abs>(&t->node)) collect_value_candidates(l->body, out, seen);
    if (const auto* p = std::get_if<App>(&t->node)) {
        collect_value_candidates(p->fun, out, seen);
        collect_value_candidates(p->arg, out, seen);
    }
    if (const auto* s = std::get_if<Shift>(&t->node)) collect_value_candidates(s->body, out, seen);
    if (const auto* r = std::get_if<Reset>(&t->node)) collect_value_candidates(r->body, out, seen);
}

TermPtr replace_all(const TermPtr& t, const TermPtr& v, const TermPtr& repl) {
    if (alpha_eq(t, v)) return repl;
    if (const auto* l = std::get_if<Abs>(&t->node))
        return mk_abs(l->hint, replace_all(l->body, v, repl));
    if (const auto* p = std::get_if<App>(&t->node))
        return mk_app(replace_all(p->fun, v, repl), replace_all(p->arg, v, repl));
    if (const auto* s = std::get_if<Shift>(&t->node))
        return mk_shift(s->hint, replace_all(s->body, v, repl));
    if (const auto* r = std::get_if<Reset>(&t->node)) return mk_reset(replace_all(r->body, v, repl));
    return t;
}

void add_match(std::vector<Match>& out, std::unordered_set<std::string>& seen, AxiomTag a,
               Direction d, TermPtr result, std::string binding) {
    std::string key = std::string(axiom_name(a)) + (d == Direction::LeftToRight ? ">" : "<") +
                      canonical_key(result);
    if (!seen.insert(key).second) return;
    out.push_back(Match{a, d, std::move(result), std::move(binding)});
}

// Single-step rewrites whose redex is the whole of u.
std::vector<Match> top_matches(const TermPtr& u) {
    std::vector<Match> out;
    std::unordered_set<std::string> seen;

    // beta_v L->R
    if (const auto* p = std::get_if<App>(&u->node)) {
        if (const auto* l = std::get_if<Abs>(&p->fun->node); l && is_value_like(p->arg))
            add_match(out, seen, AxiomTag::BetaV, Direction::LeftToRight,
                      open_binder(l->body, p->arg), "v=" + print(p->arg));
    }
    // beta_v R->L: abstract every occurrence of a value subterm
    {
        std::vector<TermPtr> cands;
        std::unordered_set<std::string> cseen;
        collect_value_candidates(u, cands, cseen);
        for (const TermPtr& v : cands) {
            std::string x = gensym("x");
            TermPtr body = replace_all(u, v, mk_free(x));
            add_match(out, seen, AxiomTag::BetaV, Direction::RightToLeft,
                      mk_app(mk_abs("x", close_binder(body, x)), v), "v=" + print(v));
        }
    }
    // eta_v L->R
    if (const auto* l = std::get_if<Abs>(&u->node)) {
        std::string x = gensym("x");
        TermPtr body = open_binder(l->body, mk_free(x));
        if (const auto* p = std::get_if<App>(&body->node)) {
            const auto* arg = std::get_if<Free>(&p->arg->node);
            if (arg && arg->name == x && is_value_like(p->fun) && count_free(p->fun, x) == 0)
                add_match(out, seen, AxiomTag::EtaV, Direction::LeftToRight, p->fun,
                          "v=" + print(p->fun));
        }
    }
    // eta_v R->L
    if (is_value_like(u))
        add_match(out, seen, AxiomTag::EtaV, Direction::RightToLeft,
                  mk_abs("x", mk_app(u, mk_bound(0))), "v=" + print(u));
    // beta_omega L->R
    if (const auto* p = std::get_if<App>(&u->node)) {
        if (const auto* l = std::get_if<Abs>(&p->fun->node)) {
            std::string x = gensym("x");
            TermPtr body = open_binder(l->body, mk_free(x));
            if (count_free(body, x) == 1) {
                for (const auto& [ctx, focus] : pure_positions(body)) {
                    const auto* f = std::get_if<Free>(&focus->node);
                    if (f && f->name == x)
                        add_match(out, seen, AxiomTag::BetaOmega, Direction::LeftToRight,
                                  plug(ctx, p->arg), "E=" + print(ctx));
                }
            }
        }
    }
    // beta_omega R->L: pull a subterm out of a pure context
    for (const auto& [ctx, focus] : pure_positions(u)) {
        if (ctx.empty() || ctx.frames.size() > kBetaOmegaFrameBound) continue;
        std::string x = gensym("x");
        TermPtr body = close_binder(plug(ctx, mk_free(x)), x);
        add_match(out, seen, AxiomTag::BetaOmega, Direction::RightToLeft,
                  mk_app(mk_abs("x", body), focus), "E=" + print(ctx));
    }
    // reset_value both ways
    if (const auto* r = std::get_if<Reset>(&u->node)) {
        if (is_value_like(r->body))
            add_match(out, seen, AxiomTag::ResetValue, Direction::LeftToRight, r->body,
                      "v=" + print(r->body));
    }
    if (is_value_like(u))
        add_match(out, seen, AxiomTag::ResetValue, Direction::RightToLeft, mk_reset(u),
                  "v=" + print(u));
    // reset_shift L->R: contract a capture anywhere in the delimited body
    if (const auto* r = std::get_if<Reset>(&u->node)) {
        for (const auto& [ctx, focus] : pure_positions(r->body)) {
            const auto* sh = std::get_if<Shift>(&focus->node);
            if (!sh) continue;
            add_match(out, seen, AxiomTag::ResetShift, Direction::LeftToRight,
                      mk_reset(open_binder(sh->body, reify_continuation(ctx))),
                      "E=" + print(ctx));
        }
    }
    // reset_shift R->L: re-introduce a capture for any reified continuation
    if (const auto* r = std::get_if<Reset>(&u->node)) {
        std::vector<TermPtr> cands;
        std::unordered_set<std::string> cseen;
        collect_value_candidates(r->body, cands, cseen);
        for (const TermPtr& w : cands) {
            const auto* wl = std::get_if<Abs>(&w->node);
            if (!wl || !std::holds_alternative<Reset>(wl->body->node)) continue;
            std::string x = gensym("x");
            TermPtr inner = open_binder(wl->body, mk_free(x));
            const auto& ib = std::get<Reset>(inner->node).body;
            if (count_free(ib, x) != 1) continue;
            for (const auto& [ctx, focus] : pure_positions(ib)) {
                const auto* f = std::get_if<Free>(&focus->node);
                if (!f || f->name != x) continue;
                std::string k = gensym("k");
                TermPtr body = close_binder(replace_all(r->body, w, mk_free(k)), k);
                add_match(out, seen, AxiomTag::ResetShift, Direction::RightToLeft,
                          mk_reset(plug(ctx, mk_shift("k", body))), "E=" + print(ctx));
            }
        }
    }
    // reset_lift both ways
    if (const auto* r = std::get_if<Reset>(&u->node)) {
        if (const auto* p = std::get_if<App>(&r->body->node)) {
            const auto* l = std::get_if<Abs>(&p->fun->node);
            if (l && std::holds_alternative<Reset>(p->arg->node))
                add_match(out, seen, AxiomTag::ResetLift, Direction::LeftToRight,
                          mk_app(mk_abs(l->hint, mk_reset(l->body)), p->arg), "");
        }
    }
    if (const auto* p = std::get_if<App>(&u->node)) {
        const auto* l = std::get_if<Abs>(&p->fun->node);
        if (l && std::holds_alternative<Reset>(l->body->node) &&
            std::holds_alternative<Reset>(p->arg->node)) {
            const auto& inner = std::get<Reset>(l->body->node).body;
            add_match(out, seen, AxiomTag::ResetLift, Direction::RightToLeft,
                      mk_reset(mk_app(mk_abs(l->hint, inner), p->arg)), "");
        }
    }
    // shift_reset both ways
    if (const auto* s = std::get_if<Shift>(&u->node)) {
        if (const auto* r = std::get_if<Reset>(&s->body->node))
            add_match(out, seen, AxiomTag::ShiftReset, Direction::LeftToRight,
                      mk_shift(s->hint, r->body), "");
        add_match(out, seen, AxiomTag::ShiftReset, Direction::RightToLeft,
                  mk_shift(s->hint, mk_reset(s->body)), "");
    }
    // shift_elim L->R
    if (const auto* s = std::get_if<Shift>(&u->node)) {
        std::string k = gensym("k");
        TermPtr body = open_binder(s->body, mk_free(k));
        if (const auto* p = std::get_if<App>(&body->node)) {
            const auto* head = std::get_if<Free>(&p->fun->node);
            if (head && head->name == k && count_free(p->arg, k) == 0)
                add_match(out, seen, AxiomTag::ShiftElim, Direction::LeftToRight, p->arg,
                          "t=" + print(p->arg));
        }
    }
    // shift_elim R->L
    add_match(out, seen, AxiomTag::ShiftElim, Direction::RightToLeft,
              mk_shift("k", mk_app(mk_bound(0), u)), "t=" + print(u));
    return out;
}

using Rebuild = std::function<TermPtr(const TermPtr&)>;

void walk(const TermPtr& u, std::vector<int>& path, const Rebuild& rebuild,
          std::vector<RewriteStep>& out) {
    for (Match& m : top_matches(u))
        out.push_back(RewriteStep{path, m.axiom, m.dir, rebuild(m.result), std::move(m.binding)});
    if (const auto* p = std::get_if<App>(&u->node)) {
        path.push_back(0);
        walk(p->fun, path, [&](const TermPtr& r) { return rebuild(mk_app(r, p->arg)); }, out);
        path.back() = 1;
        walk(p->arg, path, [&](const TermPtr& r) { return rebuild(mk_app(p->fun, r)); }, out);
        path.pop_back();
    } else if (const auto* l = std::get_if<Abs>(&u->node)) {
        std::string xf = gensym(l->hint);
        TermPtr opened = open_binder(l->body, mk_free(xf));
        path.push_back(0);
        walk(opened, path,
             [&](const TermPtr& r) { return rebuild(mk_abs(l->hint, close_binder(r, xf))); }, out);
        path.pop_back();
    } else if (const auto* s = std::get_if<Shift>(&u->node)) {
        std::string kf = gensym(s->hint);
        TermPtr opened = open_binder(s->body, mk_free(kf));
        path.push_back(0);
        walk(opened, path,
             [&](const TermPtr& r) { return rebuild(mk_shift(s->hint, close_binder(r, kf))); },
             out);
        path.pop_back();
    } else if (const auto* r = std::get_if<Reset>(&u->node)) {
        path.push_back(0);
        walk(r->body, path, [&](const TermPtr& t) { return rebuild(mk_reset(t)); }, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<RewriteStep> axiom_matches(const TermPtr& t) {
    std::vector<RewriteStep> out;
    std::vector<int> path;
    walk(t, path, [](const TermPtr& r) { return r; }, out);
    return out;
}

std::vector<RewriteStep> axiom_matches_at(const TermPtr& t, const std::vector<int>& path) {
    // Descend to the addressed subterm, opening binders on the way, then wrap
    // the local matches back into the whole term.
    std::vector<std::function<TermPtr(const TermPtr&)>> wraps;
    TermPtr cur = t;
    for (int c : path) {
        if (const auto* p = std::get_if<App>(&cur->node)) {
            if (c == 0) {
                TermPtr arg = p->arg;
                wraps.push_back([arg](const TermPtr& r) { return mk_app(r, arg); });
                cur = p->fun;
            } else if (c == 1) {
                TermPtr fun = p->fun;
                wraps.push_back([fun](const TermPtr& r) { return mk_app(fun, r); });
                cur = p->arg;
            } else {
                return {};
            }
        } else if (const auto* l = std::get_if<Abs>(&cur->node)) {
            if (c != 0) return {};
            std::string xf = gensym(l->hint);
            std::string hint = l->hint;
            wraps.push_back(
                [hint, xf](const TermPtr& r) { return mk_abs(hint, close_binder(r, xf)); });
            cur = open_binder(l->body, mk_free(xf));
        } else if (const auto* s = std::get_if<Shift>(&cur->node)) {
            if (c != 0) return {};
            std::string kf = gensym(s->hint);
            std::string hint = s->hint;
            wraps.push_back(
                [hint, kf](const TermPtr& r) { return mk_shift(hint, close_binder(r, kf)); });
            cur = open_binder(s->body, mk_free(kf));
        } else if (const auto* r = std::get_if<Reset>(&cur->node)) {
            if (c != 0) return {};
            wraps.push_back([](const TermPtr& b) { return mk_reset(b); });
            cur = r->body;
        } else {
            return {};
        }
    }
    std::vector<RewriteStep> out;
    for (Match& m : top_matches(cur)) {
        TermPtr full = m.result;
        for (std::size_t j = wraps.size(); j-- > 0;) full = wraps[j](full);
        out.push_back(RewriteStep{path, m.axiom, m.dir, full, std::move(m.binding)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Proof search
// ---------------------------------------------------------------------------

namespace {

struct Node {
    TermPtr term;
    std::string parent;  // empty for the endpoints
    RewriteStep step;    // edge from parent to this node
};

using Map = std::unordered_map<std::string, Node>;

std::vector<RewriteStep> chain_from_root(const Map& m, const std::string& key) {
    std::vector<RewriteStep> steps;
    std::string cur = key;
    while (!m.at(cur).parent.empty()) {
        steps.push_back(m.at(cur).step);
        cur = m.at(cur).parent;
    }
    std::reverse(steps.begin(), steps.end());
    return steps;
}

std::vector<RewriteStep> chain_to_root_inverted(const Map& m, const std::string& key) {
    std::vector<RewriteStep> steps;
    std::string cur = key;
    while (!m.at(cur).parent.empty()) {
        const Node& n = m.at(cur);
        RewriteStep inv = n.step;
        inv.dir = flip(inv.dir);
        inv.result = m.at(n.parent).term;
        steps.push_back(std::move(inv));
        cur = n.parent;
    }
    return steps;
}

}  // namespace

std::optional<ProofTrace> prove_equal(const TermPtr& t0, const TermPtr& t1, std::size_t budget) {
    if (alpha_eq(t0, t1)) return ProofTrace{};
    Map fwd, bwd;
    std::deque<std::string> qf, qb;
    std::string k0 = canonical_key(t0), k1 = canonical_key(t1);
    fwd.emplace(k0, Node{t0, "", {}});
    bwd.emplace(k1, Node{t1, "", {}});
    if (k0 == k1) return ProofTrace{};
    qf.push_back(k0);
    qb.push_back(k1);
    std::size_t expanded = 0;

    auto assemble = [&](const std::string& meet) -> ProofTrace {
        ProofTrace trace;
        trace.steps = chain_from_root(fwd, meet);
        std::vector<RewriteStep> back = chain_to_root_inverted(bwd, meet);
        trace.steps.insert(trace.steps.end(), back.begin(), back.end());
        if (!replay(t0, trace, t1))
            throw std::logic_error("prove_equal: assembled trace does not replay");
        return trace;
    };

    // Level-synchronous expansion of whichever frontier is smaller.
    while (!qf.empty() || !qb.empty()) {
        bool forward = qb.empty() || (!qf.empty() && qf.size() <= qb.size());
        Map& own = forward ? fwd : bwd;
        Map& other = forward ? bwd : fwd;
        std::deque<std::string>& q = forward ? qf : qb;
        std::size_t level = q.size();
        std::optional<std::string> meet;
        for (std::size_t i = 0; i < level; ++i) {
            std::string key = q.front();
            q.pop_front();
            if (expanded++ >= budget) return std::nullopt;
            TermPtr term = own.at(key).term;
            for (RewriteStep& step : axiom_matches(term)) {
                std::string nk = canonical_key(step.result);
                if (own.count(nk)) continue;
                own.emplace(nk, Node{step.result, key, step});
                q.push_back(nk);
                if (other.count(nk) && !meet) meet = nk;
            }
            if (meet) break;
        }
        if (meet) return assemble(*meet);
    }
    return std::nullopt;
}

bool replay(const TermPtr& from, const ProofTrace& trace, const TermPtr& to) {
    TermPtr cur = from;
    for (const RewriteStep& step : trace.steps) {
        bool ok = false;
        if (step.dir == Direction::LeftToRight) {
            for (const RewriteStep& c : axiom_matches_at(cur, step.path)) {
                if (c.axiom == step.axiom && c.dir == Direction::LeftToRight &&
                    alpha_eq(c.result, step.result)) {
                    ok = true;
                    break;
                }
            }
        } else {
            // A right-to-left step is valid exactly when the left-to-right
            // reading rewrites the result back to the current term.
            for (const RewriteStep& c : axiom_matches_at(step.result, step.path)) {
                if (c.axiom == step.axiom && c.dir == Direction::LeftToRight &&
                    alpha_eq(c.result, cur)) {
                    ok = true;
                    break;
                }
            }
        }
        if (!ok) return false;
        cur = step.result;
    }
    return alpha_eq(cur, to);
}

std::string trace_text(const ProofTrace& trace) {
    std::string out;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const RewriteStep& s = trace.steps[i];
        out += std::to_string(i + 1) + ". (";
        for (std::size_t j = 0; j < s.path.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(s.path[j]);
        }
        out += ") ";
        out += axiom_name(s.axiom);
        out += ' ';
        out += direction_name(s.dir);
        out += "  -> ";
        out += print(s.result);
        out += '\n';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Axiom schemas
// ---------------------------------------------------------------------------

namespace {

TermPtr want_term(const AxiomInstance& inst, const std::string& name) {
    auto it = inst.terms.find(name);
    if (it == inst.terms.end())
        throw std::invalid_argument("axiom instance is missing term '" + name + "'");
    return it->second;
}

PureContext want_context(const AxiomInstance& inst, const std::string& name) {
    auto it = inst.contexts.find(name);
    if (it == inst.contexts.end())
        throw std::invalid_argument("axiom instance is missing context '" + name + "'");
    return it->second;
}

std::string binder(const AxiomInstance& inst, const std::string& name,
                   const std::string& fallback) {
    auto it = inst.binders.find(name);
    return it == inst.binders.end() ? fallback : it->second;
}

void want_value(const TermPtr& v, const char* who) {
    if (!is_value_like(v))
        throw SideConditionError(std::string(who) + ": 'v' must be a value, got " + print(v));
}

}  // namespace

std::pair<TermPtr, TermPtr> build_axiom_sides(AxiomTag tag, const AxiomInstance& inst) {
    switch (tag) {
        case AxiomTag::BetaV: {
            TermPtr t = want_term(inst, "t");
            TermPtr v = want_term(inst, "v");
            std::string x = binder(inst, "x", "x");
            want_value(v, "beta_v");
            return {mk_app(mk_abs(x, close_binder(t, x)), v), substitute(t, x, v)};
        }
        case AxiomTag::EtaV: {
            TermPtr v = want_term(inst, "v");
            std::string x = binder(inst, "x", "x");
            want_value(v, "eta_v");
            if (free_vars(v).count(x))
                throw SideConditionError("eta_v: '" + x + "' occurs free in v");
            return {mk_abs(x, mk_app(v, mk_bound(0))), v};
        }
        case AxiomTag::BetaOmega: {
            PureContext e = want_context(inst, "E");
            TermPtr t = want_term(inst, "t");
            std::string x = binder(inst, "x", "x");
            if (free_vars(e).count(x))
                throw SideConditionError("beta_omega: '" + x + "' occurs free in E");
            TermPtr body = close_binder(plug(e, mk_free(x)), x);
            return {mk_app(mk_abs(x, body), t), plug(e, t)};
        }
        case AxiomTag::ResetValue: {
            TermPtr v = want_term(inst, "v");
            want_value(v, "reset_value");
            return {mk_reset(v), v};
        }
        case AxiomTag::ResetShift: {
            PureContext e = want_context(inst, "E");
            TermPtr t = want_term(inst, "t");
            std::string k = binder(inst, "k", "k");
            TermPtr lhs = mk_reset(plug(e, mk_shift(k, close_binder(t, k))));
            TermPtr rhs = mk_reset(substitute(t, k, reify_continuation(e)));
            return {lhs, rhs};
        }
        case AxiomTag::ResetLift: {
            TermPtr t0 = want_term(inst, "t0");
            TermPtr t1 = want_term(inst, "t1");
            std::string x = binder(inst, "x", "x");
            TermPtr lhs = mk_reset(mk_app(mk_abs(x, close_binder(t0, x)), mk_reset(t1)));
            TermPtr rhs = mk_app(mk_abs(x, mk_reset(close_binder(t0, x))), mk_reset(t1));
            return {lhs, rhs};
        }
        case AxiomTag::ShiftReset: {
            TermPtr t = want_term(inst, "t");
            std::string k = binder(inst, "k", "k");
            TermPtr body = close_binder(t, k);
            return {mk_shift(k, mk_reset(body)), mk_shift(k, body)};
        }
        case AxiomTag::ShiftElim: {
            TermPtr t = want_term(inst, "t");
            std::string k = binder(inst, "k", "k");
            if (free_vars(t).count(k))
                throw SideConditionError("shift_elim: '" + k + "' occurs free in t");
            return {mk_shift(k, mk_app(mk_bound(0), t)), t};
        }
    }
    throw std::logic_error("build_axiom_sides: bad tag");
}

CrossCheckReport cross_check(const TermPtr& t0, const TermPtr& t1, std::size_t budget,
                             std::size_t fuel) {
    CrossCheckReport rep{prove_equal(t0, t1, budget), cps::equivalent(t0, t1, fuel), false};
    rep.contradiction =
        rep.proof.has_value() && std::holds_alternative<cps::NotEquivalent>(rep.cps_verdict);
    return rep;
}

}  // namespace lams::axioms
