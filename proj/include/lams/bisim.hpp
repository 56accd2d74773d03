#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lams/axioms.hpp"
#include "lams/lts.hpp"
#include "lams/syntax.hpp"

// Bounded applicative-bisimulation game. The "for all values / for all
// contexts" quantification of the labelled transitions is approximated by a
// finite probe pool and a depth bound, and internal steps by a fuel bound:
// a Distinguished verdict is definitive (the trace replays concretely), a
// BisimilarUpTo verdict is evidence only.

namespace lams::bisim {

struct ProbePool {
    std::vector<TermPtr> values;        // closed values
    std::vector<PureContext> contexts;  // closed pure contexts
    int depth = 4;
    std::size_t fuel = 500;

    std::string fingerprint() const;
};

// values {i, w, \x.omega, \x.\y.x, \x.S k.k x},
// contexts {@, i @, @ i, (\x.omega) @}, depth 4, fuel 500. The last value
// triggers a capture when probed, so higher-order capture behavior is
// exercised by default.
ProbePool default_pool();

struct Distinguished {
    std::vector<lts::Label> trace;  // probes leading to the mismatch, then the witness action
    std::string reason;             // e.g. "stuck vs value"
};

struct BisimilarUpTo {
    int depth;
    std::string pool_fingerprint;
};

using Verdict = std::variant<Distinguished, BisimilarUpTo>;

bool is_distinguished(const Verdict& v);
std::string verdict_text(const Verdict& v);

// Plays the big-step game: evaluate both sides, compare observable classes,
// recurse over pool probes on matching value/stuck pairs. Timeout on both
// sides counts as matching (all diverging terms sit in one class).
Verdict check(const TermPtr& t0, const TermPtr& t1, const ProbePool& pool);

// Re-runs the probes of a Distinguished trace: the leading labels must apply
// on both sides, and the final label must witness a class mismatch. check()
// validates every Distinguished verdict this way before returning it.
bool replay_distinguishing_trace(const TermPtr& t0, const TermPtr& t1,
                                 const std::vector<lts::Label>& trace, std::size_t fuel);

// Builds both sides of an equational-axiom instance and runs check.
Verdict check_axiom_instance(axioms::AxiomTag tag, const axioms::AxiomInstance& inst,
                             const ProbePool& pool = default_pool());

// Plugs both terms into each context and runs check; hunts for congruence
// violations (none are expected for genuinely bisimilar inputs).
std::vector<std::pair<GCtx, Verdict>> congruence_sample(const TermPtr& t0, const TermPtr& t1,
                                                        const std::vector<GCtx>& contexts,
                                                        const ProbePool& pool);

}  // namespace lams::bisim
