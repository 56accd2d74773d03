#pragma once

#include <vector>

#include "lams/axioms.hpp"
#include "lams/syntax.hpp"

// Shared instantiations of the eight equational axioms, three closed
// instances each, plus the two call-by-value fixed-point combinators.

namespace fixtures {

struct AxiomFixture {
    lams::axioms::AxiomTag tag;
    lams::axioms::AxiomInstance inst;
};

inline std::vector<AxiomFixture> axiom_fixtures() {
    using namespace lams;
    using axioms::AxiomInstance;
    using axioms::AxiomTag;
    auto t = [](const char* s) { return parse_with_abbrevs(s); };
    auto e = [](const char* s) { return parse_pure_context_with_abbrevs(s); };

    std::vector<AxiomFixture> out;
    auto add = [&](AxiomTag tag, AxiomInstance inst) { out.push_back({tag, std::move(inst)}); };

    add(AxiomTag::BetaV, {{{"t", t("x x")}, {"v", t("i")}}, {}, {}});
    add(AxiomTag::BetaV, {{{"t", t("x")}, {"v", t("w")}}, {}, {}});
    add(AxiomTag::BetaV, {{{"t", t("\\y.x")}, {"v", t("\\z.z z")}}, {}, {}});

    add(AxiomTag::EtaV, {{{"v", t("i")}}, {}, {}});
    add(AxiomTag::EtaV, {{{"v", t("w")}}, {}, {}});
    add(AxiomTag::EtaV, {{{"v", t("\\a.\\b.a")}}, {}, {}});

    add(AxiomTag::BetaOmega, {{{"t", t("w w")}}, {{"E", e("i @")}}, {}});
    add(AxiomTag::BetaOmega, {{{"t", t("S k. k i")}}, {{"E", e("@ i")}}, {}});
    add(AxiomTag::BetaOmega, {{{"t", t("w")}}, {{"E", e("i (@ (\\z.z))")}}, {}});

    add(AxiomTag::ResetValue, {{{"v", t("i")}}, {}, {}});
    add(AxiomTag::ResetValue, {{{"v", t("w")}}, {}, {}});
    add(AxiomTag::ResetValue, {{{"v", t("\\a.\\b.b")}}, {}, {}});

    add(AxiomTag::ResetShift, {{{"t", t("k i")}}, {{"E", e("@")}}, {}});
    add(AxiomTag::ResetShift, {{{"t", t("w")}}, {{"E", e("i @")}}, {}});
    add(AxiomTag::ResetShift, {{{"t", t("k (k i)")}}, {{"E", e("@ (w w)")}}, {}});

    add(AxiomTag::ResetLift, {{{"t0", t("x")}, {"t1", t("i")}}, {}, {}});
    add(AxiomTag::ResetLift, {{{"t0", t("x x")}, {"t1", t("w")}}, {}, {}});
    add(AxiomTag::ResetLift, {{{"t0", t("i x")}, {"t1", t("i i")}}, {}, {}});

    add(AxiomTag::ShiftReset, {{{"t", t("k i")}}, {}, {}});
    add(AxiomTag::ShiftReset, {{{"t", t("i")}}, {}, {}});
    add(AxiomTag::ShiftReset, {{{"t", t("k (\\z.z)")}}, {}, {}});

    add(AxiomTag::ShiftElim, {{{"t", t("i")}}, {}, {}});
    add(AxiomTag::ShiftElim, {{{"t", t("w w")}}, {}, {}});
    add(AxiomTag::ShiftElim, {{{"t", t("\\z.z z")}}, {}, {}});

    return out;
}

// Turing's call-by-value fixed-point combinator.
inline lams::TermPtr theta_combinator() {
    return lams::parse("(\\x.\\y.y (\\z.x x y z)) (\\x.\\y.y (\\z.x x y z))");
}

// Curry's call-by-value fixed-point combinator.
inline lams::TermPtr delta_combinator() {
    return lams::parse("\\x.(\\y.x (\\z.y y z)) (\\y.x (\\z.y y z))");
}

}  // namespace fixtures
