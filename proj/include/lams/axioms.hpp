#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lams/cps.hpp"
#include "lams/syntax.hpp"

// The eight-equation direct-style axiomatization of shift and reset, as a
// rewrite system with bounded bidirectional proof search. Equations relate
// arbitrary (possibly open) terms, and variables count as values.

namespace lams::axioms {

enum class AxiomTag {
    BetaV,       // (\x.t) v = t[x:=v]
    EtaV,        // \x.v x = v                 if x not free in v
    BetaOmega,   // (\x.E[x]) t = E[t]         if x not free in E
    ResetValue,  // <v> = v
    ResetShift,  // <E[S k.t]> = <t[k := \x.<E[x]>]>
    ResetLift,   // <(\x.t0) <t1>> = (\x.<t0>) <t1>
    ShiftReset,  // S k.<t> = S k.t
    ShiftElim,   // S k.k t = t                if k not free in t
};

inline constexpr AxiomTag kAllAxioms[] = {
    AxiomTag::BetaV,      AxiomTag::EtaV,      AxiomTag::BetaOmega, AxiomTag::ResetValue,
    AxiomTag::ResetShift, AxiomTag::ResetLift, AxiomTag::ShiftReset, AxiomTag::ShiftElim,
};

const char* axiom_name(AxiomTag a);

enum class Direction { LeftToRight, RightToLeft };
const char* direction_name(Direction d);
Direction flip(Direction d);

struct RewriteStep {
    std::vector<int> path;  // child indices from the root to the rewritten subterm
    AxiomTag axiom;
    Direction dir;
    TermPtr result;       // whole term after the step
    std::string binding;  // metavariable instantiation, for display
};

// Every single-step rewrite of t: all subterm positions, all eight axioms,
// both directions, side conditions enforced. Right-to-left matches of the
// substituting axioms are enumerated from subterms of t, which is enough for
// search; replay validates reversed steps by running the other direction
// forward.
std::vector<RewriteStep> axiom_matches(const TermPtr& t);

// The rewrites available at one position only.
std::vector<RewriteStep> axiom_matches_at(const TermPtr& t, const std::vector<int>& path);

struct ProofTrace {
    std::vector<RewriteStep> steps;  // each step carries the term it produces
};

// Bidirectional breadth-first search over axiom_matches from both endpoints,
// meeting on alpha normal forms; `budget` caps expanded nodes. A returned
// trace replays from t0 to t1 (checked before returning).
std::optional<ProofTrace> prove_equal(const TermPtr& t0, const TermPtr& t1, std::size_t budget);

// Replays the steps from `from`, validating each as a genuine single-step
// rewrite, and checks the final term is alpha-equal to `to`.
bool replay(const TermPtr& from, const ProofTrace& trace, const TermPtr& to);

std::string trace_text(const ProofTrace& trace);

// ---------------------------------------------------------------------------
// Axiom schemas for fixtures: builds both sides of an axiom from an
// instantiation of its metavariables.
// ---------------------------------------------------------------------------

struct SideConditionError : std::runtime_error {
    explicit SideConditionError(const std::string& what) : std::runtime_error(what) {}
};

struct AxiomInstance {
    std::map<std::string, TermPtr> terms;        // t, t0, t1, v
    std::map<std::string, PureContext> contexts; // E
    std::map<std::string, std::string> binders;  // x, k (defaulted when absent)
};

std::pair<TermPtr, TermPtr> build_axiom_sides(AxiomTag tag, const AxiomInstance& inst);

// ---------------------------------------------------------------------------
// Cross-check of the two routes to CPS equivalence.
// ---------------------------------------------------------------------------

struct CrossCheckReport {
    std::optional<ProofTrace> proof;
    cps::EquivVerdict cps_verdict;
    bool contradiction;  // proof found yet translations normalize differently
};

CrossCheckReport cross_check(const TermPtr& t0, const TermPtr& t1, std::size_t budget,
                             std::size_t fuel);

}  // namespace lams::axioms
