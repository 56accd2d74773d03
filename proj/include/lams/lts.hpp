#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lams/reduction.hpp"
#include "lams/syntax.hpp"

// Labelled transition system. A term interacts with its environment in three
// ways: it steps internally (tau), a value consumes an argument value, and a
// stuck term captures a pure context the environment wraps around it (with
// the enclosing delimiter left implicit).

namespace lams::lts {

struct TauLabel {};
struct ValueProbe {
    TermPtr value;  // closed value
};
struct ContextProbe {
    PureContext context;  // closed pure context
};

using Label = std::variant<TauLabel, ValueProbe, ContextProbe>;

std::string label_text(const Label& l);
bool label_alpha_eq(const Label& a, const Label& b);

enum class RuleTag { Beta, Reset, CompL, CompR, CompReset, CaptReset, Val, Shift, CaptL, CaptR };
const char* rule_name(RuleTag r);

// Rules applied along a derivation, conclusion first, axiom last. Every
// derivation in this system is a spine (each rule has one premise).
struct Derivation {
    TermPtr target;
    std::vector<RuleTag> rules;
};

// The tau successor, derived rule by rule. Agrees with reduction::step
// everywhere.
std::optional<TermPtr> tau_step(const TermPtr& t);
std::optional<Derivation> tau_step_derivation(const TermPtr& t);

// \x.t probed with a value: defined exactly on abstractions.
std::optional<TermPtr> probe_value(const TermPtr& t, const TermPtr& v);

// Stuck term probed with a pure context. Computed in one stroke: for
// t = E'[S k.s] the captured context is E' extended outward with e, giving
// <s[k := \x.<e[E'[x]]>]>. Defined exactly on stuck terms.
std::optional<TermPtr> probe_context(const TermPtr& t, const PureContext& e);

// Same transition derived by walking the capture rules; kept as an oracle
// for rule-by-rule fidelity and for coverage counting.
std::optional<Derivation> capture_derivation(const TermPtr& t, const PureContext& e);

// Runs tau steps to quiescence and classifies the result.
reduction::Observable observables(const TermPtr& t, std::size_t fuel);

}  // namespace lams::lts
