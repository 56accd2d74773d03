#pragma once

#include <cstddef>
#include <optional>
#include <variant>

#include "lams/syntax.hpp"

// Definitional CPS translation into the plain lambda calculus and
// fuel-bounded beta-eta convertibility on the translated terms. Translated
// terms expect two continuations: the delimited continuation up to the
// nearest enclosing delimiter, and the metacontinuation beyond it.

namespace lams::cps {

// True when t contains no shift or reset node.
bool is_pure_lambda(const TermPtr& t);

// The five translation clauses. Open terms are allowed; free variables
// translate to themselves. Output never contains a control construct
// (checked on every call) and has exactly the free variables of the input.
TermPtr translate(const TermPtr& t);

// Normal-order beta reduction to beta normal form within `fuel` steps, then
// eta contraction to a fixpoint. Returns nullopt when fuel (or an internal
// size guard against exploding terms) runs out. The result carries neither a
// beta nor an eta redex (checked).
std::optional<TermPtr> normalize_beta_eta(const TermPtr& t, std::size_t fuel);

struct Equivalent {
    TermPtr normal_form;
};
struct NotEquivalent {
    TermPtr left_nf;
    TermPtr right_nf;
};
struct Unknown {
    bool left_timed_out;
    bool right_timed_out;
};

using EquivVerdict = std::variant<Equivalent, NotEquivalent, Unknown>;

const char* verdict_name(const EquivVerdict& v);

// Translate both terms, normalize both, compare normal forms up to alpha.
EquivVerdict equivalent(const TermPtr& t0, const TermPtr& t1, std::size_t fuel);

}  // namespace lams::cps
