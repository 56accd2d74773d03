// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Run via ctest (test name "acceptance") or directly.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "lams/axioms.hpp"
#include "lams/bisim.hpp"
#include "lams/cps.hpp"
#include "lams/lts.hpp"
#include "lams/reduction.hpp"
#include "lams/syntax.hpp"
#include "lams/testgen.hpp"

using namespace lams;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void report(int num, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s  criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", num, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

// 1. The running reduction example: exact intermediate terms, exact rule
//    tags, ending in the value w, in under 10 ms.
void criterion1() {
    TermPtr t = parse_with_abbrevs("<(S k1. i (k1 i)) (S k2. w) (w w)>");
    Clock::time_point start = Clock::now();
    reduction::Trace tr = reduction::trace(t, 100);
    double ms = ms_since(start);
    const char* golden[] = {
        "<i ((\\x.<x (S k2. w) (w w)>) i)>",
        "<i <i (S k2. w) (w w)>>",
        "<i <w>>",
        "<i w>",
        "<w>",
        "w",
    };
    reduction::Rule tags[] = {reduction::Rule::Rshift, reduction::Rule::Rbeta,
                              reduction::Rule::Rshift, reduction::Rule::Rreset,
                              reduction::Rule::Rbeta,  reduction::Rule::Rreset};
    bool ok = tr.steps.size() == 6 && tr.outcome.kind == reduction::Observable::Kind::Value &&
              alpha_eq(tr.outcome.term, self_app_term()) && ms < 10.0;
    for (int j = 0; ok && j < 6; ++j)
        ok = tr.steps[j].rule == tags[j] &&
             alpha_eq(tr.steps[j].term, parse_with_abbrevs(golden[j]));
    char detail[64];
    std::snprintf(detail, sizeof detail, "%zu steps, %.2f ms", tr.steps.size(), ms);
    report(1, "golden reduction trace", ok, detail);
}

// 2. The capture example of the transition system: tau target and the
//    four-rule derivation spine, exact term match.
void criterion2() {
    TermPtr t = parse_with_abbrevs("<i (S k. w) (w w)>");
    auto d = lts::tau_step_derivation(t);
    auto direct = lts::tau_step(t);
    bool ok = d && direct && identical(d->target, *direct) &&
              print(d->target) == "<\\x.x x>" &&
              d->rules == std::vector<lts::RuleTag>{lts::RuleTag::CaptReset, lts::RuleTag::CaptL,
                                                    lts::RuleTag::CaptR, lts::RuleTag::Shift};
    report(2, "capture derivation in the LTS", ok,
           d ? std::to_string(d->rules.size()) + "-rule spine" : "no tau");
}

// 3. 1,000 generated closed terms, full-trace agreement between the LTS and
//    the reduction relation at fuel 200, in under 30 s.
void criterion3() {
    Clock::time_point start = Clock::now();
    testgen::Report rep = testgen::diff_lts_reduction(1000, testgen::GenConfig{.seed = 42}, 200);
    double ms = ms_since(start);
    bool ok = rep.checked == 1000 && rep.clean() && ms < 30000.0;
    char detail[96];
    std::snprintf(detail, sizeof detail, "%zu terms, %zu discrepancies, %.0f ms", rep.checked,
                  rep.failures.size(), ms);
    report(3, "transition system matches reduction", ok, detail);
}

// 4. On the same corpus: the decomposition trichotomy with exact
//    recomposition, and the capture shape of every stuck result.
void criterion4() {
    testgen::TermGen gen(testgen::GenConfig{.seed = 42});
    std::size_t violations = 0, stuck_seen = 0, examined = 0;
    for (int i = 0; i < 1000; ++i) {
        TermPtr cur = gen.next();
        for (int s = 0;; ++s) {
            ++examined;
            reduction::Decomposition d = reduction::decompose(cur);
            if (!identical(reduction::recompose(d), cur)) ++violations;
            if (const auto* st = std::get_if<reduction::IsStuck>(&d)) {
                ++stuck_seen;
                if (!as_shift(st->shift_term) || !is_closed(st->shift_term)) ++violations;
                break;
            }
            if (std::holds_alternative<reduction::IsValue>(d)) {
                if (!is_value(cur)) ++violations;
                break;
            }
            if (s == 200) break;
            cur = *reduction::step(cur);
        }
    }
    char detail[96];
    std::snprintf(detail, sizeof detail, "%zu decompositions, %zu stuck, %zu violations",
                  examined, stuck_seen, violations);
    report(4, "unique decomposition and stuck shape", violations == 0 && stuck_seen > 0, detail);
}

// 5. The seven bisimilar axiom schemas pass the game on every fixture; the
//    eliminated shift on a value body is distinguished by the empty context
//    probe. Under 60 s in total.
void criterion5() {
    Clock::time_point start = Clock::now();
    bool ok = true;
    std::size_t instances = 0;
    for (const auto& fx : fixtures::axiom_fixtures()) {
        if (fx.tag == axioms::AxiomTag::ShiftElim) continue;
        ++instances;
        if (bisim::is_distinguished(bisim::check_axiom_instance(fx.tag, fx.inst))) ok = false;
    }
    bisim::Verdict v = bisim::check(parse_with_abbrevs("S k. k i"), parse_with_abbrevs("i"),
                                    bisim::default_pool());
    const auto* d = std::get_if<bisim::Distinguished>(&v);
    bool selim_ok = d && d->trace.size() == 1 &&
                    std::holds_alternative<lts::ContextProbe>(d->trace[0]) &&
                    std::get<lts::ContextProbe>(d->trace[0]).context.empty();
    double ms = ms_since(start);
    ok = ok && selim_ok && ms < 60000.0;
    char detail[96];
    std::snprintf(detail, sizeof detail, "%zu bisimilar instances + shift_elim, %.0f ms",
                  instances, ms);
    report(5, "axiom schemas through the game", ok, detail);
}

// 6. Divergence is one class: omega and omega omega are not separated.
void criterion6() {
    bisim::Verdict v = bisim::check(parse_with_abbrevs("omega"),
                                    parse_with_abbrevs("omega omega"), bisim::default_pool());
    report(6, "diverging terms identified", !bisim::is_distinguished(v),
           bisim::is_distinguished(v) ? "distinguished" : "bisimilar up to bound");
}

// 7. CPS soundness of reduction on 200 generated stepping terms at fuel
//    5,000: no distinct normal forms, unknowns under 30%.
void criterion7() {
    testgen::Report rep =
        testgen::diff_cps_soundness(200, testgen::GenConfig{.seed = 43}, 5000);
    std::size_t unknown = rep.rule_coverage.count("cps_unknown")
                              ? rep.rule_coverage.at("cps_unknown")
                              : 0;
    bool ok = rep.checked == 200 && rep.clean() && unknown * 100 < 30 * rep.checked;
    char detail[96];
    std::snprintf(detail, sizeof detail, "%zu pairs, %zu not-equivalent, %zu unknown",
                  rep.checked, rep.failures.size(), unknown);
    report(7, "reduction is sound for the CPS translation", ok, detail);
}

// 8. Both routes agree on every axiom fixture: a replayable derivation
//    within 10,000 nodes, and never a not-equivalent verdict from the
//    translations.
void criterion8() {
    bool ok = true;
    std::size_t proved = 0;
    for (const auto& fx : fixtures::axiom_fixtures()) {
        auto [lhs, rhs] = axioms::build_axiom_sides(fx.tag, fx.inst);
        axioms::CrossCheckReport r = axioms::cross_check(lhs, rhs, 10000, 5000);
        if (!r.proof || !axioms::replay(lhs, *r.proof, rhs)) ok = false;
        if (std::holds_alternative<cps::NotEquivalent>(r.cps_verdict)) ok = false;
        if (r.contradiction) ok = false;
        if (r.proof) ++proved;
    }
    report(8, "equational derivations agree with the translations", ok,
           std::to_string(proved) + "/24 fixtures proved");
}

// 9. Results that are out of reach stay honestly unknown: the diverging pair
//    and the two fixed-point combinators report no verdict from the
//    translations, while the game identifies them.
void criterion9() {
    TermPtr theta = fixtures::theta_combinator();
    TermPtr delta = fixtures::delta_combinator();
    bisim::Verdict game = bisim::check(theta, delta, bisim::default_pool());
    cps::EquivVerdict pair = cps::equivalent(theta, delta, 5000);
    cps::EquivVerdict divs =
        cps::equivalent(parse_with_abbrevs("omega"), parse_with_abbrevs("omega omega"), 5000);
    bool ok = !bisim::is_distinguished(game) && std::holds_alternative<cps::Unknown>(pair) &&
              std::holds_alternative<cps::Unknown>(divs);
    report(9, "undecidable comparisons stay unknown, never falsely equivalent", ok,
           std::string("fixed points: game=") +
               (bisim::is_distinguished(game) ? "distinguished" : "bisimilar-up-to") +
               ", cps=" + cps::verdict_name(pair));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all 9 criteria passed\n");
    return 0;
}
