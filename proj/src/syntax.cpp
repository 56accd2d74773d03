#include "lams/syntax.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <sstream>

namespace lams {

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

TermPtr mk_bound(int index) { return std::make_shared<Term>(Term{Bound{index}}); }
TermPtr mk_free(std::string name) { return std::make_shared<Term>(Term{Free{std::move(name)}}); }
TermPtr mk_abs(std::string hint, TermPtr body) {
    return std::make_shared<Term>(Term{Abs{std::move(hint), std::move(body)}});
}
TermPtr mk_app(TermPtr fun, TermPtr arg) {
    return std::make_shared<Term>(Term{App{std::move(fun), std::move(arg)}});
}
TermPtr mk_app(TermPtr f, TermPtr a, TermPtr b) {
    return mk_app(mk_app(std::move(f), std::move(a)), std::move(b));
}
TermPtr mk_shift(std::string hint, TermPtr body) {
    return std::make_shared<Term>(Term{Shift{std::move(hint), std::move(body)}});
}
TermPtr mk_reset(TermPtr body) { return std::make_shared<Term>(Term{Reset{std::move(body)}}); }

const Abs* as_abs(const TermPtr& t) { return std::get_if<Abs>(&t->node); }
const App* as_app(const TermPtr& t) { return std::get_if<App>(&t->node); }
const Shift* as_shift(const TermPtr& t) { return std::get_if<Shift>(&t->node); }
const Reset* as_reset(const TermPtr& t) { return std::get_if<Reset>(&t->node); }
const Free* as_free(const TermPtr& t) { return std::get_if<Free>(&t->node); }

bool is_value(const TermPtr& t) { return std::holds_alternative<Abs>(t->node); }

bool is_value_like(const TermPtr& t) {
    return std::holds_alternative<Abs>(t->node) || std::holds_alternative<Free>(t->node);
}

// ---------------------------------------------------------------------------
// Structural traversals
// ---------------------------------------------------------------------------

namespace {

bool term_eq(const TermPtr& a, const TermPtr& b, bool with_hints) {
    if (a == b) return true;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* ba = std::get_if<Bound>(&a->node))
        return ba->index == std::get<Bound>(b->node).index;
    if (const auto* fa = std::get_if<Free>(&a->node))
        return fa->name == std::get<Free>(b->node).name;
    if (const auto* la = std::get_if<Abs>(&a->node)) {
        const auto& lb = std::get<Abs>(b->node);
        if (with_hints && la->hint != lb.hint) return false;
        return term_eq(la->body, lb.body, with_hints);
    }
    if (const auto* pa = std::get_if<App>(&a->node)) {
        const auto& pb = std::get<App>(b->node);
        return term_eq(pa->fun, pb.fun, with_hints) && term_eq(pa->arg, pb.arg, with_hints);
    }
    if (const auto* sa = std::get_if<Shift>(&a->node)) {
        const auto& sb = std::get<Shift>(b->node);
        if (with_hints && sa->hint != sb.hint) return false;
        return term_eq(sa->body, sb.body, with_hints);
    }
    const auto& ra = std::get<Reset>(a->node);
    return term_eq(ra.body, std::get<Reset>(b->node).body, with_hints);
}

void collect_free(const TermPtr& t, std::set<std::string>& out) {
    if (const auto* f = std::get_if<Free>(&t->node)) {
        out.insert(f->name);
    } else if (const auto* l = std::get_if<Abs>(&t->node)) {
        collect_free(l->body, out);
    } else if (const auto* p = std::get_if<App>(&t->node)) {
        collect_free(p->fun, out);
        collect_free(p->arg, out);
    } else if (const auto* s = std::get_if<Shift>(&t->node)) {
        collect_free(s->body, out);
    } else if (const auto* r = std::get_if<Reset>(&t->node)) {
        collect_free(r->body, out);
    }
}

}  // namespace

bool alpha_eq(const TermPtr& a, const TermPtr& b) { return term_eq(a, b, false); }
bool identical(const TermPtr& a, const TermPtr& b) { return term_eq(a, b, true); }

std::set<std::string> free_vars(const TermPtr& t) {
    std::set<std::string> out;
    collect_free(t, out);
    return out;
}

bool is_closed(const TermPtr& t) {
    if (std::holds_alternative<Free>(t->node)) return false;
    if (const auto* l = std::get_if<Abs>(&t->node)) return is_closed(l->body);
    if (const auto* p = std::get_if<App>(&t->node)) return is_closed(p->fun) && is_closed(p->arg);
    if (const auto* s = std::get_if<Shift>(&t->node)) return is_closed(s->body);
    if (const auto* r = std::get_if<Reset>(&t->node)) return is_closed(r->body);
    return true;
}

std::size_t term_size(const TermPtr& t) {
    if (const auto* l = std::get_if<Abs>(&t->node)) return 1 + term_size(l->body);
    if (const auto* p = std::get_if<App>(&t->node)) return 1 + term_size(p->fun) + term_size(p->arg);
    if (const auto* s = std::get_if<Shift>(&t->node)) return 1 + term_size(s->body);
    if (const auto* r = std::get_if<Reset>(&t->node)) return 1 + term_size(r->body);
    return 1;
}

bool contains_shift(const TermPtr& t) {
    if (std::holds_alternative<Shift>(t->node)) return true;
    if (const auto* l = std::get_if<Abs>(&t->node)) return contains_shift(l->body);
    if (const auto* p = std::get_if<App>(&t->node))
        return contains_shift(p->fun) || contains_shift(p->arg);
    if (const auto* r = std::get_if<Reset>(&t->node)) return contains_shift(r->body);
    return false;
}

bool contains_control(const TermPtr& t) {
    if (std::holds_alternative<Shift>(t->node) || std::holds_alternative<Reset>(t->node))
        return true;
    if (const auto* l = std::get_if<Abs>(&t->node)) return contains_control(l->body);
    if (const auto* p = std::get_if<App>(&t->node))
        return contains_control(p->fun) || contains_control(p->arg);
    return false;
}

// ---------------------------------------------------------------------------
// Binding operations. Each returns nullptr for "unchanged" internally so
// untouched subtrees stay shared.
// ---------------------------------------------------------------------------

namespace {

TermPtr subst_rec(const TermPtr& t, const std::string& x, const TermPtr& s) {
    if (const auto* f = std::get_if<Free>(&t->node)) return f->name == x ? s : nullptr;
    if (const auto* l = std::get_if<Abs>(&t->node)) {
        TermPtr b = subst_rec(l->body, x, s);
        return b ? mk_abs(l->hint, b) : nullptr;
    }
    if (const auto* p = std::get_if<App>(&t->node)) {
        TermPtr f = subst_rec(p->fun, x, s);
        TermPtr a = subst_rec(p->arg, x, s);
        if (!f && !a) return nullptr;
        return mk_app(f ? f : p->fun, a ? a : p->arg);
    }
    if (const auto* sh = std::get_if<Shift>(&t->node)) {
        TermPtr b = subst_rec(sh->body, x, s);
        return b ? mk_shift(sh->hint, b) : nullptr;
    }
    if (const auto* r = std::get_if<Reset>(&t->node)) {
        TermPtr b = subst_rec(r->body, x, s);
        return b ? mk_reset(b) : nullptr;
    }
    return nullptr;
}

TermPtr open_rec(const TermPtr& t, int depth, const TermPtr& arg) {
    if (const auto* v = std::get_if<Bound>(&t->node)) {
        if (v->index == depth) return arg;
        if (v->index > depth) throw std::logic_error("open_binder: escaped de Bruijn index");
        return nullptr;
    }
    if (const auto* l = std::get_if<Abs>(&t->node)) {
        TermPtr b = open_rec(l->body, depth + 1, arg);
        return b ? mk_abs(l->hint, b) : nullptr;
    }
    if (const auto* p = std::get_if<App>(&t->node)) {
        TermPtr f = open_rec(p->fun, depth, arg);
        TermPtr a = open_rec(p->arg, depth, arg);
        if (!f && !a) return nullptr;
        return mk_app(f ? f : p->fun, a ? a : p->arg);
    }
    if (const auto* s = std::get_if<Shift>(&t->node)) {
        TermPtr b = open_rec(s->body, depth + 1, arg);
        return b ? mk_shift(s->hint, b) : nullptr;
    }
    if (const auto* r = std::get_if<Reset>(&t->node)) {
        TermPtr b = open_rec(r->body, depth, arg);
        return b ? mk_reset(b) : nullptr;
    }
    return nullptr;
}

TermPtr close_rec(const TermPtr& t, int depth, const std::string& name) {
    if (const auto* f = std::get_if<Free>(&t->node))
        return f->name == name ? mk_bound(depth) : nullptr;
    if (const auto* l = std::get_if<Abs>(&t->node)) {
        TermPtr b = close_rec(l->body, depth + 1, name);
        return b ? mk_abs(l->hint, b) : nullptr;
    }
    if (const auto* p = std::get_if<App>(&t->node)) {
        TermPtr f = close_rec(p->fun, depth, name);
        TermPtr a = close_rec(p->arg, depth, name);
        if (!f && !a) return nullptr;
        return mk_app(f ? f : p->fun, a ? a : p->arg);
    }
    if (const auto* s = std::get_if<Shift>(&t->node)) {
        TermPtr b = close_rec(s->body, depth + 1, name);
        return b ? mk_shift(s->hint, b) : nullptr;
    }
    if (const auto* r = std::get_if<Reset>(&t->node)) {
        TermPtr b = close_rec(r->body, depth, name);
        return b ? mk_reset(b) : nullptr;
    }
    return nullptr;
}

}  // namespace

TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s) {
    TermPtr r = subst_rec(t, x, s);
    return r ? r : t;
}

TermPtr open_binder(const TermPtr& body, const TermPtr& arg) {
    TermPtr r = open_rec(body, 0, arg);
    return r ? r : body;
}

TermPtr close_binder(const TermPtr& t, const std::string& name) {
    TermPtr r = close_rec(t, 0, name);
    return r ? r : t;
}

std::string gensym(const std::string& base) {
    static std::atomic<std::uint64_t> counter{0};
    return base + "#" + std::to_string(counter.fetch_add(1));
}

namespace {

void key_rec(const TermPtr& t, std::string& out) {
    if (const auto* v = std::get_if<Bound>(&t->node)) {
        out += 'b';
        out += std::to_string(v->index);
        out += ';';
    } else if (const auto* f = std::get_if<Free>(&t->node)) {
        out += 'f';
        out += f->name;
        out += ';';
    } else if (const auto* l = std::get_if<Abs>(&t->node)) {
        out += "l(";
        key_rec(l->body, out);
        out += ')';
    } else if (const auto* p = std::get_if<App>(&t->node)) {
        out += "a(";
        key_rec(p->fun, out);
        key_rec(p->arg, out);
        out += ')';
    } else if (const auto* s = std::get_if<Shift>(&t->node)) {
        out += "s(";
        key_rec(s->body, out);
        out += ')';
    } else {
        out += "r(";
        key_rec(std::get<Reset>(t->node).body, out);
        out += ')';
    }
}

}  // namespace

std::string canonical_key(const TermPtr& t) {
    std::string out;
    out.reserve(term_size(t) * 3);
    key_rec(t, out);
    return out;
}

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line(line),
      column(column) {}

void require_closed(const TermPtr& t, const char* where) {
    if (is_closed(t)) return;
    std::set<std::string> fv = free_vars(t);
    std::string names;
    for (const auto& n : fv) {
        if (!names.empty()) names += ", ";
        names += n;
    }
    throw OpenTermError(std::string(where) + ": term has free variables: " + names);
}

// ---------------------------------------------------------------------------
// Lexer / parser
// ---------------------------------------------------------------------------

namespace {

struct Token {
    enum class Kind { Lambda, Dot, LParen, RParen, LAngle, RAngle, Hole, Ident, ShiftKw, End };
    Kind kind;
    std::string text;
    int line;
    int column;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> lex(const std::string& src, bool allow_hole) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            bump(c);
            ++i;
            continue;
        }
        if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
            while (i < src.size() && src[i] != '\n') {
                bump(src[i]);
                ++i;
            }
            continue;
        }
        int tl = line, tc = col;
        switch (c) {
            case '\\': out.push_back({Token::Kind::Lambda, "\\", tl, tc}); bump(c); ++i; continue;
            case '.': out.push_back({Token::Kind::Dot, ".", tl, tc}); bump(c); ++i; continue;
            case '(': out.push_back({Token::Kind::LParen, "(", tl, tc}); bump(c); ++i; continue;
            case ')': out.push_back({Token::Kind::RParen, ")", tl, tc}); bump(c); ++i; continue;
            case '<': out.push_back({Token::Kind::LAngle, "<", tl, tc}); bump(c); ++i; continue;
            case '>': out.push_back({Token::Kind::RAngle, ">", tl, tc}); bump(c); ++i; continue;
            case '@':
                if (!allow_hole) throw ParseError(tl, tc, "'@' is only valid in context syntax");
                out.push_back({Token::Kind::Hole, "@", tl, tc});
                bump(c);
                ++i;
                continue;
            default: break;
        }
        if (ident_start(c)) {
            std::string name;
            while (i < src.size() && ident_char(src[i])) {
                name += src[i];
                bump(src[i]);
                ++i;
            }
            if (name == "S" || name == "shift")
                out.push_back({Token::Kind::ShiftKw, name, tl, tc});
            else
                out.push_back({Token::Kind::Ident, name, tl, tc});
            continue;
        }
        throw ParseError(tl, tc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::Kind::End, "", line, col});
    return out;
}

struct Parser {
    std::vector<Token> toks;
    std::size_t idx = 0;
    std::vector<std::string> scope;  // innermost binder last

    const Token& peek() const { return toks[idx]; }
    Token take() { return toks[idx++]; }

    [[noreturn]] void fail(const std::string& msg) {
        const Token& t = peek();
        std::string got = t.kind == Token::Kind::End ? "end of input" : "'" + t.text + "'";
        throw ParseError(t.line, t.column, msg + ", got " + got);
    }

    TermPtr resolve(const std::string& name) {
        for (std::size_t j = scope.size(); j-- > 0;) {
            if (scope[j] == name) return mk_bound(static_cast<int>(scope.size() - 1 - j));
        }
        return mk_free(name);
    }

    TermPtr parse_term() {
        if (peek().kind == Token::Kind::Lambda || peek().kind == Token::Kind::ShiftKw) {
            bool is_lambda = take().kind == Token::Kind::Lambda;
            if (peek().kind != Token::Kind::Ident) fail("expected variable name");
            std::string name = take().text;
            if (peek().kind != Token::Kind::Dot) fail("expected '.'");
            take();
            scope.push_back(name);
            TermPtr body = parse_term();
            scope.pop_back();
            return is_lambda ? mk_abs(name, body) : mk_shift(name, body);
        }
        TermPtr t = parse_atom_or_fail();
        for (;;) {
            std::optional<TermPtr> next = try_atom();
            if (!next) return t;
            t = mk_app(t, *next);
        }
    }

    TermPtr parse_atom_or_fail() {
        std::optional<TermPtr> a = try_atom();
        if (!a) fail("expected a term");
        return *a;
    }

    std::optional<TermPtr> try_atom() {
        switch (peek().kind) {
            case Token::Kind::Ident: return resolve(take().text);
            case Token::Kind::Hole: take(); return mk_free("@");
            case Token::Kind::LParen: {
                take();
                TermPtr t = parse_term();
                if (peek().kind != Token::Kind::RParen) fail("expected ')'");
                take();
                return t;
            }
            case Token::Kind::LAngle: {
                take();
                TermPtr t = parse_term();
                if (peek().kind != Token::Kind::RAngle) fail("expected '>'");
                take();
                return mk_reset(t);
            }
            default: return std::nullopt;
        }
    }
};

TermPtr parse_impl(const std::string& src, bool allow_hole) {
    Parser p{lex(src, allow_hole), 0, {}};
    TermPtr t = p.parse_term();
    if (p.peek().kind != Token::Kind::End) p.fail("expected end of input");
    return t;
}

}  // namespace

TermPtr parse(const std::string& src) { return parse_impl(src, false); }

TermPtr expand_abbrevs(const TermPtr& t) {
    TermPtr r = substitute(t, "i", ident_term());
    r = substitute(r, "w", self_app_term());
    r = substitute(r, "omega", omega_term());
    return r;
}

TermPtr parse_with_abbrevs(const std::string& src) { return expand_abbrevs(parse(src)); }

TermPtr ident_term() { return mk_abs("x", mk_bound(0)); }
TermPtr self_app_term() { return mk_abs("x", mk_app(mk_bound(0), mk_bound(0))); }
TermPtr omega_term() { return mk_app(self_app_term(), self_app_term()); }

// ---------------------------------------------------------------------------
// Printer. Binder names come from hints, freshened with primes against the
// term's free names and all enclosing binder names, so output is
// deterministic and reparses to an alpha-equal term.
// ---------------------------------------------------------------------------

namespace {

enum Prec { PrecTerm = 0, PrecApp = 1, PrecAtom = 2 };

std::string pick_name(const std::string& hint, const std::set<std::string>& avoid) {
    std::string cand = hint.empty() ? "x" : hint;
    while (avoid.count(cand)) cand += '\'';
    return cand;
}

void render(const TermPtr& t, std::vector<std::string>& env, std::set<std::string>& avoid,
            int prec, std::string& out) {
    if (const auto* v = std::get_if<Bound>(&t->node)) {
        out += env[env.size() - 1 - static_cast<std::size_t>(v->index)];
        return;
    }
    if (const auto* f = std::get_if<Free>(&t->node)) {
        out += f->name;
        return;
    }
    if (const auto* r = std::get_if<Reset>(&t->node)) {
        out += '<';
        render(r->body, env, avoid, PrecTerm, out);
        out += '>';
        return;
    }
    if (const auto* p = std::get_if<App>(&t->node)) {
        bool wrap = prec > PrecApp;
        if (wrap) out += '(';
        render(p->fun, env, avoid, PrecApp, out);
        out += ' ';
        render(p->arg, env, avoid, PrecAtom, out);
        if (wrap) out += ')';
        return;
    }
    bool is_lambda = std::holds_alternative<Abs>(t->node);
    const std::string& hint = is_lambda ? std::get<Abs>(t->node).hint : std::get<Shift>(t->node).hint;
    const TermPtr& body = is_lambda ? std::get<Abs>(t->node).body : std::get<Shift>(t->node).body;
    bool wrap = prec > PrecTerm;
    if (wrap) out += '(';
    std::string name = pick_name(hint, avoid);
    out += is_lambda ? "\\" : "S ";
    out += name;
    out += '.';
    env.push_back(name);
    bool inserted = avoid.insert(name).second;
    render(body, env, avoid, PrecTerm, out);
    if (inserted) avoid.erase(name);
    env.pop_back();
    if (wrap) out += ')';
}

}  // namespace

std::string print(const TermPtr& t) {
    std::string out;
    std::vector<std::string> env;
    std::set<std::string> avoid = free_vars(t);
    render(t, env, avoid, PrecTerm, out);
    return out;
}

// ---------------------------------------------------------------------------
// Contexts
// ---------------------------------------------------------------------------

Frame Frame::applied(TermPtr v) {
    if (!is_value_like(v)) throw std::logic_error("applied-value frame requires a value");
    return Frame{Kind::AppliedValue, std::move(v)};
}

Frame Frame::pending(TermPtr t) { return Frame{Kind::PendingArg, std::move(t)}; }

TermPtr plug(const PureContext& c, TermPtr t) {
    for (const Frame& f : c.frames)
        t = f.kind == Frame::Kind::AppliedValue ? mk_app(f.term, t) : mk_app(t, f.term);
    return t;
}

TermPtr plug(const EvalContext& c, TermPtr t) {
    for (const EvalFrame& f : c.frames) {
        switch (f.kind) {
            case EvalFrame::Kind::AppliedValue: t = mk_app(f.term, t); break;
            case EvalFrame::Kind::PendingArg: t = mk_app(t, f.term); break;
            case EvalFrame::Kind::Delimiter: t = mk_reset(t); break;
        }
    }
    return t;
}

PureContext concat(const PureContext& inner, const PureContext& outer) {
    PureContext out = inner;
    out.frames.insert(out.frames.end(), outer.frames.begin(), outer.frames.end());
    return out;
}

std::set<std::string> free_vars(const PureContext& c) {
    std::set<std::string> out;
    for (const Frame& f : c.frames) collect_free(f.term, out);
    return out;
}

bool is_closed(const PureContext& c) {
    return std::all_of(c.frames.begin(), c.frames.end(),
                       [](const Frame& f) { return is_closed(f.term); });
}

bool alpha_eq(const PureContext& a, const PureContext& b) {
    if (a.frames.size() != b.frames.size()) return false;
    for (std::size_t i = 0; i < a.frames.size(); ++i) {
        if (a.frames[i].kind != b.frames[i].kind) return false;
        if (!alpha_eq(a.frames[i].term, b.frames[i].term)) return false;
    }
    return true;
}

TermPtr reify_continuation(const PureContext& e) {
    // \x.<E[x]>; no frame on the hole path carries a binder, so the index
    // stays attached to the wrapping abstraction.
    return mk_abs("x", mk_reset(plug(e, mk_bound(0))));
}

std::string print(const PureContext& c) { return print(plug(c, mk_free("@"))); }

namespace {

bool contains_hole(const TermPtr& t) {
    if (const auto* f = std::get_if<Free>(&t->node)) return f->name == "@";
    if (const auto* l = std::get_if<Abs>(&t->node)) return contains_hole(l->body);
    if (const auto* p = std::get_if<App>(&t->node))
        return contains_hole(p->fun) || contains_hole(p->arg);
    if (const auto* s = std::get_if<Shift>(&t->node)) return contains_hole(s->body);
    if (const auto* r = std::get_if<Reset>(&t->node)) return contains_hole(r->body);
    return false;
}

void holed_to_frames(const TermPtr& t, std::vector<Frame>& out) {
    if (const auto* f = std::get_if<Free>(&t->node); f && f->name == "@") return;
    const auto* p = std::get_if<App>(&t->node);
    if (!p) throw std::runtime_error("not a pure context: hole under a non-application node");
    bool in_fun = contains_hole(p->fun);
    bool in_arg = contains_hole(p->arg);
    if (in_fun && in_arg) throw std::runtime_error("context has more than one hole");
    if (in_fun) {
        holed_to_frames(p->fun, out);
        out.push_back(Frame::pending(p->arg));
    } else {
        if (!is_value_like(p->fun))
            throw std::runtime_error("not a pure context: term left of the hole must be a value");
        holed_to_frames(p->arg, out);
        out.push_back(Frame::applied(p->fun));
    }
}

PureContext holed_term_to_context(const TermPtr& t) {
    if (!contains_hole(t)) throw std::runtime_error("context must contain the hole '@'");
    PureContext c;
    holed_to_frames(t, c.frames);
    return c;
}

}  // namespace

PureContext parse_pure_context(const std::string& src) {
    return holed_term_to_context(parse_impl(src, true));
}

PureContext parse_pure_context_with_abbrevs(const std::string& src) {
    return holed_term_to_context(expand_abbrevs(parse_impl(src, true)));
}

// ---------------------------------------------------------------------------
// General contexts
// ---------------------------------------------------------------------------

GCtx ghole() { return std::make_shared<GeneralContext>(GeneralContext{GHole{}}); }
GCtx gabs(std::string name, GCtx body) {
    return std::make_shared<GeneralContext>(GeneralContext{GAbs{std::move(name), std::move(body)}});
}
GCtx gapp_l(GCtx fun, TermPtr arg) {
    return std::make_shared<GeneralContext>(GeneralContext{GAppL{std::move(fun), std::move(arg)}});
}
GCtx gapp_r(TermPtr fun, GCtx arg) {
    return std::make_shared<GeneralContext>(GeneralContext{GAppR{std::move(fun), std::move(arg)}});
}
GCtx gshift(std::string name, GCtx body) {
    return std::make_shared<GeneralContext>(
        GeneralContext{GShift{std::move(name), std::move(body)}});
}
GCtx greset(GCtx body) {
    return std::make_shared<GeneralContext>(GeneralContext{GReset{std::move(body)}});
}

TermPtr plug(const GCtx& c, const TermPtr& t) {
    if (std::holds_alternative<GHole>(c->node)) return t;
    if (const auto* l = std::get_if<GAbs>(&c->node))
        return mk_abs(l->name, close_binder(plug(l->body, t), l->name));
    if (const auto* pl = std::get_if<GAppL>(&c->node)) return mk_app(plug(pl->fun, t), pl->arg);
    if (const auto* pr = std::get_if<GAppR>(&c->node)) return mk_app(pr->fun, plug(pr->arg, t));
    if (const auto* s = std::get_if<GShift>(&c->node))
        return mk_shift(s->name, close_binder(plug(s->body, t), s->name));
    return mk_reset(plug(std::get<GReset>(c->node).body, t));
}

std::string print(const GCtx& c) { return print(plug(c, mk_free("@"))); }

}  // namespace lams
