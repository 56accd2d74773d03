#include "lams/lts.hpp"

namespace lams::lts {

std::string label_text(const Label& l) {
    if (std::holds_alternative<TauLabel>(l)) return "tau";
    if (const auto* v = std::get_if<ValueProbe>(&l)) return "value " + print(v->value);
    return "context " + print(std::get<ContextProbe>(l).context);
}

bool label_alpha_eq(const Label& a, const Label& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<TauLabel>(a)) return true;
    if (const auto* va = std::get_if<ValueProbe>(&a))
        return alpha_eq(va->value, std::get<ValueProbe>(b).value);
    return alpha_eq(std::get<ContextProbe>(a).context, std::get<ContextProbe>(b).context);
}

const char* rule_name(RuleTag r) {
    switch (r) {
        case RuleTag::Beta: return "LTSbeta";
        case RuleTag::Reset: return "LTSreset";
        case RuleTag::CompL: return "LTScompl";
        case RuleTag::CompR: return "LTScompr";
        case RuleTag::CompReset: return "LTScompreset";
        case RuleTag::CaptReset: return "LTScaptreset";
        case RuleTag::Val: return "LTSval";
        case RuleTag::Shift: return "LTSshift";
        case RuleTag::CaptL: return "LTScaptl";
        case RuleTag::CaptR: return "LTScaptr";
    }
    return "?";
}

namespace {

void note(std::vector<RuleTag>* spine, RuleTag r) {
    if (spine) spine->insert(spine->begin(), r);
}

PureContext prepend(Frame f, const PureContext& e) {
    PureContext out;
    out.frames.reserve(e.frames.size() + 1);
    out.frames.push_back(std::move(f));
    out.frames.insert(out.frames.end(), e.frames.begin(), e.frames.end());
    return out;
}

// -E-> transitions, by the capture rules: descend the application spine,
// growing the label on the inside, until a shift is reached.
std::optional<TermPtr> capture(const TermPtr& t, const PureContext& e,
                               std::vector<RuleTag>* spine) {
    if (const auto* sh = as_shift(t)) {
        note(spine, RuleTag::Shift);
        return mk_reset(open_binder(sh->body, reify_continuation(e)));
    }
    if (const auto* p = as_app(t)) {
        if (is_value(p->fun)) {
            auto r = capture(p->arg, prepend(Frame::applied(p->fun), e), spine);
            if (r) note(spine, RuleTag::CaptR);
            return r;
        }
        auto r = capture(p->fun, prepend(Frame::pending(p->arg), e), spine);
        if (r) note(spine, RuleTag::CaptL);
        return r;
    }
    return std::nullopt;
}

std::optional<TermPtr> tau(const TermPtr& t, std::vector<RuleTag>* spine) {
    if (const auto* p = as_app(t)) {
        if (const Abs* fun = as_abs(p->fun)) {
            if (is_value(p->arg)) {
                note(spine, RuleTag::Beta);
                return open_binder(fun->body, p->arg);
            }
            auto r = tau(p->arg, spine);
            if (!r) return std::nullopt;
            note(spine, RuleTag::CompR);
            return mk_app(p->fun, *r);
        }
        auto r = tau(p->fun, spine);
        if (!r) return std::nullopt;
        note(spine, RuleTag::CompL);
        return mk_app(*r, p->arg);
    }
    if (const auto* rs = as_reset(t)) {
        if (is_value(rs->body)) {
            note(spine, RuleTag::Reset);
            return rs->body;
        }
        if (auto r = tau(rs->body, spine)) {
            note(spine, RuleTag::CompReset);
            return mk_reset(*r);
        }
        if (auto r = capture(rs->body, PureContext{}, spine)) {
            note(spine, RuleTag::CaptReset);
            return r;
        }
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<TermPtr> tau_step(const TermPtr& t) {
    require_closed(t, "tau_step");
    return tau(t, nullptr);
}

std::optional<Derivation> tau_step_derivation(const TermPtr& t) {
    require_closed(t, "tau_step_derivation");
    Derivation d;
    auto r = tau(t, &d.rules);
    if (!r) return std::nullopt;
    d.target = *r;
    return d;
}

std::optional<TermPtr> probe_value(const TermPtr& t, const TermPtr& v) {
    require_closed(t, "probe_value");
    require_closed(v, "probe_value");
    if (!is_value(v)) throw std::invalid_argument("probe_value: probe must be a value");
    const Abs* fun = as_abs(t);
    if (!fun) return std::nullopt;
    return open_binder(fun->body, v);
}

std::optional<TermPtr> probe_context(const TermPtr& t, const PureContext& e) {
    require_closed(t, "probe_context");
    if (!is_closed(e)) throw OpenTermError("probe_context: context has free variables");
    reduction::Decomposition d = reduction::decompose(t);
    const auto* stuck = std::get_if<reduction::IsStuck>(&d);
    if (!stuck) return std::nullopt;
    const Shift* sh = as_shift(stuck->shift_term);
    return mk_reset(open_binder(sh->body, reify_continuation(concat(stuck->context, e))));
}

std::optional<Derivation> capture_derivation(const TermPtr& t, const PureContext& e) {
    require_closed(t, "capture_derivation");
    if (!is_closed(e)) throw OpenTermError("capture_derivation: context has free variables");
    Derivation d;
    auto r = capture(t, e, &d.rules);
    if (!r) return std::nullopt;
    d.target = *r;
    return d;
}

reduction::Observable observables(const TermPtr& t, std::size_t fuel) {
    require_closed(t, "observables");
    TermPtr cur = t;
    for (std::size_t used = 0;; ++used) {
        std::optional<TermPtr> next = tau(cur, nullptr);
        if (!next) {
            auto kind = is_value(cur) ? reduction::Observable::Kind::Value
                                      : reduction::Observable::Kind::Stuck;
            return {kind, cur, used};
        }
        if (used == fuel) return {reduction::Observable::Kind::Timeout, cur, used};
        cur = *next;
    }
}

}  // namespace lams::lts
