#include "lams/reduction.hpp"

#include <json.hpp>

namespace lams::reduction {

TermPtr recompose(const Redex& r) {
    if (const auto* b = std::get_if<BetaRedex>(&r)) return mk_app(b->fun, b->arg);
    if (const auto* c = std::get_if<CaptureRedex>(&r)) return plug(c->context, c->shift_term);
    return mk_reset(std::get<ResetValueRedex>(r).value);
}

TermPtr recompose(const Decomposition& d) {
    if (const auto* v = std::get_if<IsValue>(&d)) return v->value;
    if (const auto* s = std::get_if<IsStuck>(&d)) return plug(s->context, s->shift_term);
    const auto& dec = std::get<Decomposed>(d);
    return plug(dec.context, recompose(dec.redex));
}

namespace {

EvalContext to_context(std::vector<EvalFrame> outermost_first) {
    EvalContext c;
    c.frames.assign(outermost_first.rbegin(), outermost_first.rend());
    return c;
}

PureContext to_pure(const std::vector<EvalFrame>& outermost_first, std::size_t from) {
    PureContext e;
    for (std::size_t j = outermost_first.size(); j-- > from;) {
        const EvalFrame& f = outermost_first[j];
        e.frames.push_back(Frame{f.kind == EvalFrame::Kind::AppliedValue
                                     ? Frame::Kind::AppliedValue
                                     : Frame::Kind::PendingArg,
                                 f.term});
    }
    return e;
}

}  // namespace

// Single left-to-right traversal. `frames` accumulates the context
// outermost-first while the focus moves toward the next redex.
Decomposition decompose(const TermPtr& t) {
    require_closed(t, "decompose");
    std::vector<EvalFrame> frames;
    TermPtr cur = t;
    for (;;) {
        if (const auto* p = as_app(cur)) {
            frames.push_back(EvalFrame{EvalFrame::Kind::PendingArg, p->arg});
            cur = p->fun;
            continue;
        }
        if (const auto* r = as_reset(cur)) {
            frames.push_back(EvalFrame{EvalFrame::Kind::Delimiter, nullptr});
            cur = r->body;
            continue;
        }
        if (as_shift(cur)) {
            // Scan inward-out for the dynamically nearest delimiter.
            for (std::size_t j = frames.size(); j-- > 0;) {
                if (frames[j].kind != EvalFrame::Kind::Delimiter) continue;
                CaptureRedex redex{to_pure(frames, j + 1), cur};
                frames.resize(j + 1);  // keep the delimiter as the innermost frame
                return Decomposed{to_context(std::move(frames)), std::move(redex)};
            }
            return IsStuck{to_pure(frames, 0), cur};
        }
        // cur is an abstraction (a closed term has no variable in evaluation
        // position); resolve it against the innermost pending frame.
        for (;;) {
            if (frames.empty()) return IsValue{cur};
            EvalFrame& inner = frames.back();
            if (inner.kind == EvalFrame::Kind::PendingArg) {
                if (is_value(inner.term)) {
                    BetaRedex redex{cur, inner.term};
                    frames.pop_back();
                    return Decomposed{to_context(std::move(frames)), std::move(redex)};
                }
                TermPtr arg = inner.term;
                inner = EvalFrame{EvalFrame::Kind::AppliedValue, cur};
                cur = arg;
                break;
            }
            if (inner.kind == EvalFrame::Kind::AppliedValue) {
                BetaRedex redex{inner.term, cur};
                frames.pop_back();
                return Decomposed{to_context(std::move(frames)), std::move(redex)};
            }
            // Delimiter around a value.
            ResetValueRedex redex{cur};
            frames.pop_back();
            return Decomposed{to_context(std::move(frames)), std::move(redex)};
        }
    }
}

const char* rule_name(Rule r) {
    switch (r) {
        case Rule::Rbeta: return "Rbeta";
        case Rule::Rshift: return "Rshift";
        case Rule::Rreset: return "Rreset";
    }
    return "?";
}

namespace {

std::pair<TermPtr, Rule> contract(const Decomposed& dec) {
    if (const auto* b = std::get_if<BetaRedex>(&dec.redex)) {
        const Abs* fun = as_abs(b->fun);
        return {plug(dec.context, open_binder(fun->body, b->arg)), Rule::Rbeta};
    }
    if (const auto* c = std::get_if<CaptureRedex>(&dec.redex)) {
        // <E[S k.t']> -> <t'[k := \x.<E[x]>]>; the delimiter is the innermost
        // frame of the surrounding context, so it survives the step.
        const Shift* sh = as_shift(c->shift_term);
        TermPtr cont = reify_continuation(c->context);
        return {plug(dec.context, open_binder(sh->body, cont)), Rule::Rshift};
    }
    const auto& rv = std::get<ResetValueRedex>(dec.redex);
    return {plug(dec.context, rv.value), Rule::Rreset};
}

}  // namespace

std::optional<std::pair<TermPtr, Rule>> step_tagged(const TermPtr& t) {
    Decomposition d = decompose(t);
    const auto* dec = std::get_if<Decomposed>(&d);
    if (!dec) return std::nullopt;
    return contract(*dec);
}

std::optional<TermPtr> step(const TermPtr& t) {
    auto r = step_tagged(t);
    if (!r) return std::nullopt;
    return r->first;
}

const char* kind_name(Observable::Kind k) {
    switch (k) {
        case Observable::Kind::Value: return "value";
        case Observable::Kind::Stuck: return "stuck";
        case Observable::Kind::Timeout: return "timeout";
    }
    return "?";
}

Observable evaluate(const TermPtr& t, std::size_t fuel) {
    Trace tr = trace(t, fuel);
    return tr.outcome;
}

Trace trace(const TermPtr& t, std::size_t fuel) {
    require_closed(t, "trace");
    Trace tr;
    TermPtr cur = t;
    for (std::size_t used = 0;; ++used) {
        Decomposition d = decompose(cur);
        if (const auto* v = std::get_if<IsValue>(&d)) {
            tr.outcome = Observable{Observable::Kind::Value, v->value, used};
            return tr;
        }
        if (std::holds_alternative<IsStuck>(d)) {
            tr.outcome = Observable{Observable::Kind::Stuck, cur, used};
            return tr;
        }
        if (used == fuel) {
            tr.outcome = Observable{Observable::Kind::Timeout, cur, used};
            return tr;
        }
        auto [next, rule] = contract(std::get<Decomposed>(d));
        cur = next;
        tr.steps.push_back(TraceEntry{cur, rule});
    }
}

std::string trace_json(const Trace& tr) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TraceEntry& e : tr.steps)
        arr.push_back({{"term", print(e.term)}, {"rule", rule_name(e.rule)}});
    arr.push_back({{"result", kind_name(tr.outcome.kind)},
                   {"term", print(tr.outcome.term)},
                   {"steps", tr.outcome.steps}});
    return arr.dump();
}

}  // namespace lams::reduction
