#pragma once

#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Terms, contexts, binding, parsing and printing for the call-by-value
// lambda calculus with shift and reset.
//
// Binders are nameless inside (de Bruijn indices); the surface names are kept
// as printing hints only. Every Term crossing an API boundary is locally
// closed: each index points to a binder within the term itself. Free
// variables are represented by name, so substitution for a free name can
// never capture.

namespace lams {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Bound {
    int index;  // number of binders between occurrence and its binder
};
struct Free {
    std::string name;
};
struct Abs {
    std::string hint;
    TermPtr body;
};
struct App {
    TermPtr fun;
    TermPtr arg;
};
struct Shift {
    std::string hint;  // binds the continuation variable
    TermPtr body;
};
struct Reset {
    TermPtr body;
};

struct Term {
    std::variant<Bound, Free, Abs, App, Shift, Reset> node;
};

TermPtr mk_bound(int index);
TermPtr mk_free(std::string name);
TermPtr mk_abs(std::string hint, TermPtr body);
TermPtr mk_app(TermPtr fun, TermPtr arg);
TermPtr mk_app(TermPtr f, TermPtr a, TermPtr b);  // left-associated
TermPtr mk_shift(std::string hint, TermPtr body);
TermPtr mk_reset(TermPtr body);

const Abs* as_abs(const TermPtr& t);
const App* as_app(const TermPtr& t);
const Shift* as_shift(const TermPtr& t);
const Reset* as_reset(const TermPtr& t);
const Free* as_free(const TermPtr& t);

// Closed values are abstractions only.
bool is_value(const TermPtr& t);
// In the equational theory variables count as values too.
bool is_value_like(const TermPtr& t);

// Alpha-equivalence. Structural equality of the nameless skeleton; hints are
// ignored.
bool alpha_eq(const TermPtr& a, const TermPtr& b);
// Exact structural equality, hints included.
bool identical(const TermPtr& a, const TermPtr& b);

std::set<std::string> free_vars(const TermPtr& t);
bool is_closed(const TermPtr& t);
std::size_t term_size(const TermPtr& t);
bool contains_shift(const TermPtr& t);
bool contains_control(const TermPtr& t);  // any shift or reset node

// Capture-avoiding substitution of s for the free name x in t.
TermPtr substitute(const TermPtr& t, const std::string& x, const TermPtr& s);

// Replace the variable bound by the binder that `body` belonged to with
// `arg` (beta / probe application). `arg` must be locally closed.
TermPtr open_binder(const TermPtr& body, const TermPtr& arg);
// Inverse: turn free occurrences of `name` back into the variable of a
// binder about to be wrapped around `t`.
TermPtr close_binder(const TermPtr& t, const std::string& name);

// Process-unique name for temporarily opening binders. Contains '#', which
// the lexer rejects, so it can never collide with a parsed variable.
std::string gensym(const std::string& base = "g");

// Alpha-invariant serialization, usable as a hash/set key.
std::string canonical_key(const TermPtr& t);

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int line, int column, const std::string& what);
};

struct OpenTermError : std::runtime_error {
    explicit OpenTermError(const std::string& what) : std::runtime_error(what) {}
};

void require_closed(const TermPtr& t, const char* where);

// ---------------------------------------------------------------------------
// Concrete syntax
//
//   term  := '\' VAR '.' term | ('S'|'shift') VAR '.' term | app
//   app   := atom atom*                    (left-associative)
//   atom  := VAR | '(' term ')' | '<' term '>'
//   VAR   := [A-Za-z_][A-Za-z0-9_']*       excluding the keywords S, shift
//
// '--' starts a comment running to end of line.
// ---------------------------------------------------------------------------

TermPtr parse(const std::string& src);
// Same, then replaces the free names i, w, omega with their standard
// definitions \x.x, \x.x x, (\x.x x)(\x.x x).
TermPtr parse_with_abbrevs(const std::string& src);
TermPtr expand_abbrevs(const TermPtr& t);

std::string print(const TermPtr& t);

TermPtr ident_term();     // \x.x
TermPtr self_app_term();  // \x.x x
TermPtr omega_term();     // (\x.x x)(\x.x x)

// ---------------------------------------------------------------------------
// Evaluation contexts, inside-out: a context is a sequence of frames ordered
// from the hole outward, so extending a captured context on the outside is a
// sequence append.
// ---------------------------------------------------------------------------

struct Frame {
    enum class Kind { AppliedValue, PendingArg };
    Kind kind;
    TermPtr term;

    static Frame applied(TermPtr v);  // v [] ; v must be value-like
    static Frame pending(TermPtr t);  // [] t
};

struct PureContext {
    std::vector<Frame> frames;  // innermost first
    bool empty() const { return frames.empty(); }
};

struct EvalFrame {
    enum class Kind { AppliedValue, PendingArg, Delimiter };
    Kind kind;
    TermPtr term;  // null for Delimiter
};

struct EvalContext {
    std::vector<EvalFrame> frames;  // innermost first
    bool empty() const { return frames.empty(); }
};

TermPtr plug(const PureContext& c, TermPtr t);
TermPtr plug(const EvalContext& c, TermPtr t);

// inner ++ outer: the hole of `outer` receives `inner` filled first.
PureContext concat(const PureContext& inner, const PureContext& outer);

std::set<std::string> free_vars(const PureContext& c);
bool is_closed(const PureContext& c);
bool alpha_eq(const PureContext& a, const PureContext& b);

// The function a stuck term's context becomes when captured: \x.<E[x]>.
TermPtr reify_continuation(const PureContext& e);

// Text form of a pure context uses '@' for the hole, e.g. "i @", "@ (w w)".
std::string print(const PureContext& c);
PureContext parse_pure_context(const std::string& src);
PureContext parse_pure_context_with_abbrevs(const std::string& src);

// ---------------------------------------------------------------------------
// General contexts (grammar C), one hole by construction; the hole may sit
// under binders and plugging may capture free variables of the filled term.
// ---------------------------------------------------------------------------

struct GeneralContext;
using GCtx = std::shared_ptr<const GeneralContext>;

struct GHole {};
struct GAbs {
    std::string name;  // binds `name` in everything below, captured term included
    GCtx body;
};
struct GAppL {
    GCtx fun;
    TermPtr arg;
};
struct GAppR {
    TermPtr fun;  // arbitrary term, per the C grammar
    GCtx arg;
};
struct GShift {
    std::string name;
    GCtx body;
};
struct GReset {
    GCtx body;
};

struct GeneralContext {
    std::variant<GHole, GAbs, GAppL, GAppR, GShift, GReset> node;
};

GCtx ghole();
GCtx gabs(std::string name, GCtx body);
GCtx gapp_l(GCtx fun, TermPtr arg);
GCtx gapp_r(TermPtr fun, GCtx arg);
GCtx gshift(std::string name, GCtx body);
GCtx greset(GCtx body);

TermPtr plug(const GCtx& c, const TermPtr& t);
std::string print(const GCtx& c);

}  // namespace lams
