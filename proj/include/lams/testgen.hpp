#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lams/syntax.hpp"

// Random closed-term generation and differential-testing drivers.

namespace lams::testgen {

struct GenConfig {
    std::size_t max_size = 14;  // node count budget
    std::uint64_t seed = 0;
    struct Weights {
        double var = 1.0;
        double abs = 1.0;
        double app = 1.7;
        double shift = 0.5;
        double reset = 0.5;
    } weights;
    bool closed = true;       // open mode draws free names from a small pool
    double reset_bias = 0.5;  // chance to delimit a shift-containing subterm
};

class TermGen {
  public:
    explicit TermGen(const GenConfig& cfg);

    TermPtr next();
    PureContext next_pure_context(std::size_t max_frames);
    GCtx next_general_context(std::size_t max_depth);

  private:
    struct Impl;
    GenConfig cfg_;
    std::uint64_t state_;
    std::size_t var_counter_ = 0;

    std::uint64_t rand64();
    std::size_t below(std::size_t n);
    bool chance(double p);
    TermPtr gen(std::size_t budget, std::vector<std::string>& env);
    GCtx gen_gctx(std::size_t depth, std::vector<std::string>& bound);
};

// The single term a config denotes (head of the seeded stream); identical
// across runs for a fixed config.
TermPtr gen_term(const GenConfig& cfg);

struct Failure {
    std::string check;
    std::string term;  // printed offending input
    std::string detail;
};

struct Report {
    std::size_t checked = 0;
    std::vector<Failure> failures;
    std::map<std::string, std::size_t> rule_coverage;

    bool clean() const { return failures.empty(); }
};

std::string report_json(const Report& r);

using TauFn = std::function<std::optional<TermPtr>(const TermPtr&)>;

// Runs n generated terms, asserting that the transition system and the
// reduction relation agree step by step along the whole trace (up to fuel
// steps). A custom tau function can be injected to self-test the harness
// against a broken transition system.
Report diff_lts_reduction(std::size_t n, const GenConfig& cfg, std::size_t fuel);
Report diff_lts_reduction(std::size_t n, const GenConfig& cfg, std::size_t fuel,
                          const TauFn& tau);

// Checks the stuck characterization: every evaluation ending in a stuck term
// decomposes as E[S k.t] and recomposes exactly.
Report diff_stuck_law(std::size_t n, const GenConfig& cfg, std::size_t fuel);

// For generated terms with a reduction step, checks that the CPS translations
// of t and its successor normalize to the same normal form whenever both
// normalize in fuel. Counter keys: cps_equivalent / cps_unknown.
Report diff_cps_soundness(std::size_t n, const GenConfig& cfg, std::size_t fuel);

}  // namespace lams::testgen
