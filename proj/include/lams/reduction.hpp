#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lams/syntax.hpp"

// Reduction semantics: unique decomposition, one-step reduction, evaluation
// and stuck detection.

namespace lams::reduction {

// (\x.t) v with v a value.
struct BetaRedex {
    TermPtr fun;
    TermPtr arg;
};

// <E[S k.t]>. The delimiter lives in the surrounding evaluation context, so
// recomposing the redex yields E[S k.t] without the reset.
struct CaptureRedex {
    PureContext context;
    TermPtr shift_term;  // the S k.t node itself
};

// <v> with v a value; recomposes to <v>.
struct ResetValueRedex {
    TermPtr value;
};

using Redex = std::variant<BetaRedex, CaptureRedex, ResetValueRedex>;

TermPtr recompose(const Redex& r);

struct IsValue {
    TermPtr value;
};
struct IsStuck {
    PureContext context;  // t = E[S k.t'] with no delimiter around E
    TermPtr shift_term;
};
struct Decomposed {
    EvalContext context;
    Redex redex;
};

using Decomposition = std::variant<IsValue, IsStuck, Decomposed>;

// Splits a closed term into exactly one of value / stuck / (context, redex);
// plugging the recomposed redex back into the context restores the input
// untouched. Throws OpenTermError on open input.
Decomposition decompose(const TermPtr& t);
TermPtr recompose(const Decomposition& d);

enum class Rule { Rbeta, Rshift, Rreset };
const char* rule_name(Rule r);

// The unique reduction successor, or nullopt for values and stuck terms.
std::optional<TermPtr> step(const TermPtr& t);
std::optional<std::pair<TermPtr, Rule>> step_tagged(const TermPtr& t);

struct Observable {
    enum class Kind { Value, Stuck, Timeout };
    Kind kind;
    TermPtr term;       // the result, or the unfinished term on timeout
    std::size_t steps;  // steps taken (= fuel spent on timeout)
};

const char* kind_name(Observable::Kind k);

Observable evaluate(const TermPtr& t, std::size_t fuel);

struct TraceEntry {
    TermPtr term;  // the term after the step
    Rule rule;     // the rule that produced it
};

struct Trace {
    std::vector<TraceEntry> steps;
    Observable outcome;
};

Trace trace(const TermPtr& t, std::size_t fuel);

// JSON array of {"term","rule"} objects followed by a final
// {"result","term","steps"} object.
std::string trace_json(const Trace& tr);

}  // namespace lams::reduction
