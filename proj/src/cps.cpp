#include "lams/cps.hpp"

namespace lams::cps {

bool is_pure_lambda(const TermPtr& t) { return !contains_control(t); }

namespace {

// theta_init = \x.\k2. k2 x
TermPtr theta_init() { return mk_abs("x", mk_abs("k2", mk_app(mk_bound(0), mk_bound(1)))); }

TermPtr bind(const std::string& hint, const std::string& name, const TermPtr& body) {
    return mk_abs(hint, close_binder(body, name));
}

TermPtr cps_rec(const TermPtr& t) {
    if (const auto* f = std::get_if<Free>(&t->node)) {
        // \k1.\k2. k1 x k2
        return mk_abs("k1", mk_abs("k2", mk_app(mk_bound(1), mk_free(f->name), mk_bound(0))));
    }
    if (const auto* l = std::get_if<Abs>(&t->node)) {
        // \k1.\k2. k1 (\x. cps t) k2
        std::string xf = gensym(l->hint);
        TermPtr inner = mk_abs(l->hint, close_binder(cps_rec(open_binder(l->body, mk_free(xf))), xf));
        return mk_abs("k1", mk_abs("k2", mk_app(mk_bound(1), inner, mk_bound(0))));
    }
    if (const auto* p = std::get_if<App>(&t->node)) {
        // \k1.\k2. cps t0 (\x0.\k2'. cps t1 (\x1.\k2''. x0 x1 k1 k2'') k2') k2
        TermPtr c0 = cps_rec(p->fun);
        TermPtr c1 = cps_rec(p->arg);
        // binders in scope at the innermost body: k1 k2 x0 k2' x1 k2''
        TermPtr innermost =
            mk_app(mk_app(mk_bound(3), mk_bound(1), mk_bound(5)), mk_bound(0));
        TermPtr recv1 = mk_abs("x1", mk_abs("k2''", innermost));
        TermPtr recv0 = mk_abs("x0", mk_abs("k2'", mk_app(c1, recv1, mk_bound(0))));
        return mk_abs("k1", mk_abs("k2", mk_app(c0, recv0, mk_bound(0))));
    }
    if (const auto* r = std::get_if<Reset>(&t->node)) {
        // \k1.\k2. cps t theta (\x. k1 x k2)
        TermPtr c = cps_rec(r->body);
        TermPtr recv = mk_abs("x", mk_app(mk_bound(2), mk_bound(0), mk_bound(1)));
        return mk_abs("k1", mk_abs("k2", mk_app(c, theta_init(), recv)));
    }
    if (const auto* s = std::get_if<Shift>(&t->node)) {
        // \k1.\k2. (cps t)[k := \x1.\k1'.\k2'. k1 x1 (\x2. k1' x2 k2')] theta k2
        std::string kf = gensym(s->hint);
        TermPtr body = cps_rec(open_binder(s->body, mk_free(kf)));
        std::string k1name = gensym("k1");
        std::string k2name = gensym("k2");
        TermPtr lam_x2 = mk_abs("x2", mk_app(mk_bound(2), mk_bound(0), mk_bound(1)));
        TermPtr reified = mk_abs(
            "x1", mk_abs("k1'", mk_abs("k2'", mk_app(mk_free(k1name), mk_bound(2), lam_x2))));
        TermPtr core = mk_app(substitute(body, kf, reified), theta_init(), mk_free(k2name));
        return bind("k1", k1name, bind("k2", k2name, core));
    }
    throw std::logic_error("cps: unexpected dangling de Bruijn index");
}

}  // namespace

TermPtr translate(const TermPtr& t) {
    TermPtr out = cps_rec(t);
    if (!is_pure_lambda(out))
        throw std::logic_error("cps: translation produced a control construct");
    return out;
}

// ---------------------------------------------------------------------------
// Normalization
// ---------------------------------------------------------------------------

namespace {

constexpr std::size_t kSizeGuard = 200000;  // tree nodes; exploding terms abort as timeout

struct Budget {
    std::size_t fuel;
};

// Tree size with an early exit, so the guard stays cheap even on terms whose
// shared representation hides an exponential tree.
bool size_exceeds(const TermPtr& t, std::size_t cap) {
    std::vector<const Term*> stack{t.get()};
    std::size_t seen = 0;
    while (!stack.empty()) {
        const Term* cur = stack.back();
        stack.pop_back();
        if (++seen > cap) return true;
        if (const auto* l = std::get_if<Abs>(&cur->node)) {
            stack.push_back(l->body.get());
        } else if (const auto* p = std::get_if<App>(&cur->node)) {
            stack.push_back(p->fun.get());
            stack.push_back(p->arg.get());
        } else if (const auto* s = std::get_if<Shift>(&cur->node)) {
            stack.push_back(s->body.get());
        } else if (const auto* r = std::get_if<Reset>(&cur->node)) {
            stack.push_back(r->body.get());
        }
    }
    return false;
}

// Weak head normal form by spine contraction; nullopt when fuel or the size
// guard gives out.
std::optional<TermPtr> whnf(TermPtr cur, Budget& b) {
    std::vector<TermPtr> args;  // pending arguments, first-applied last
    for (;;) {
        if (const auto* p = std::get_if<App>(&cur->node)) {
            args.push_back(p->arg);
            cur = p->fun;
            continue;
        }
        const auto* l = std::get_if<Abs>(&cur->node);
        if (l && !args.empty()) {
            if (b.fuel == 0) return std::nullopt;
            --b.fuel;
            cur = open_binder(l->body, args.back());
            args.pop_back();
            if (size_exceeds(cur, kSizeGuard)) return std::nullopt;
            continue;
        }
        for (std::size_t j = args.size(); j-- > 0;) cur = mk_app(cur, args[j]);
        return cur;
    }
}

std::optional<TermPtr> beta_normalize(const TermPtr& t, Budget& b) {
    std::optional<TermPtr> h = whnf(t, b);
    if (!h) return std::nullopt;
    if (const auto* l = std::get_if<Abs>(&(*h)->node)) {
        std::string xf = gensym(l->hint);
        std::optional<TermPtr> nb = beta_normalize(open_binder(l->body, mk_free(xf)), b);
        if (!nb) return std::nullopt;
        return mk_abs(l->hint, close_binder(*nb, xf));
    }
    if (const auto* p = std::get_if<App>(&(*h)->node)) {
        // Neutral head; normalize the argument and the (neutral) function.
        std::optional<TermPtr> nf = beta_normalize(p->fun, b);
        if (!nf) return std::nullopt;
        std::optional<TermPtr> na = beta_normalize(p->arg, b);
        if (!na) return std::nullopt;
        return mk_app(*nf, *na);
    }
    return *h;
}

TermPtr eta_pass(const TermPtr& t) {
    if (const auto* l = std::get_if<Abs>(&t->node)) {
        std::string xf = gensym(l->hint);
        TermPtr body = eta_pass(open_binder(l->body, mk_free(xf)));
        if (const auto* p = std::get_if<App>(&body->node)) {
            const auto* v = std::get_if<Free>(&p->arg->node);
            if (v && v->name == xf && !free_vars(p->fun).count(xf)) return p->fun;
        }
        return mk_abs(l->hint, close_binder(body, xf));
    }
    if (const auto* p = std::get_if<App>(&t->node))
        return mk_app(eta_pass(p->fun), eta_pass(p->arg));
    return t;
}

bool has_beta_redex(const TermPtr& t) {
    if (const auto* p = std::get_if<App>(&t->node))
        return std::holds_alternative<Abs>(p->fun->node) || has_beta_redex(p->fun) ||
               has_beta_redex(p->arg);
    if (const auto* l = std::get_if<Abs>(&t->node)) return has_beta_redex(l->body);
    return false;
}

bool occurs_index(const TermPtr& t, int depth) {
    if (const auto* v = std::get_if<Bound>(&t->node)) return v->index == depth;
    if (const auto* l = std::get_if<Abs>(&t->node)) return occurs_index(l->body, depth + 1);
    if (const auto* p = std::get_if<App>(&t->node))
        return occurs_index(p->fun, depth) || occurs_index(p->arg, depth);
    return false;
}

bool has_eta_redex(const TermPtr& t) {
    if (const auto* l = std::get_if<Abs>(&t->node)) {
        if (const auto* p = std::get_if<App>(&l->body->node)) {
            const auto* v = std::get_if<Bound>(&p->arg->node);
            if (v && v->index == 0 && !occurs_index(p->fun, 0)) return true;
        }
        return has_eta_redex(l->body);
    }
    if (const auto* p = std::get_if<App>(&t->node))
        return has_eta_redex(p->fun) || has_eta_redex(p->arg);
    return false;
}

}  // namespace

std::optional<TermPtr> normalize_beta_eta(const TermPtr& t, std::size_t fuel) {
    if (!is_pure_lambda(t))
        throw std::invalid_argument("normalize_beta_eta: term contains shift or reset");
    Budget b{fuel};
    std::optional<TermPtr> nf = beta_normalize(t, b);
    if (!nf) return std::nullopt;
    TermPtr cur = *nf;
    for (;;) {
        TermPtr next = eta_pass(cur);
        if (alpha_eq(next, cur)) break;
        cur = next;
    }
    // Eta contraction of a beta-normal term cannot reintroduce a beta redex.
    if (has_beta_redex(cur) || has_eta_redex(cur))
        throw std::logic_error("normalize_beta_eta: result is not a normal form");
    return cur;
}

const char* verdict_name(const EquivVerdict& v) {
    if (std::holds_alternative<Equivalent>(v)) return "equivalent";
    if (std::holds_alternative<NotEquivalent>(v)) return "not-equivalent";
    return "unknown";
}

EquivVerdict equivalent(const TermPtr& t0, const TermPtr& t1, std::size_t fuel) {
    std::optional<TermPtr> nf0 = normalize_beta_eta(translate(t0), fuel);
    std::optional<TermPtr> nf1 = normalize_beta_eta(translate(t1), fuel);
    if (!nf0 || !nf1) return Unknown{!nf0, !nf1};
    if (alpha_eq(*nf0, *nf1)) return Equivalent{*nf0};
    return NotEquivalent{*nf0, *nf1};
}

}  // namespace lams::cps
