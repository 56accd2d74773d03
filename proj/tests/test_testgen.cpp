#include <doctest.h>

#include "lams/lts.hpp"
#include "lams/reduction.hpp"
#include "lams/testgen.hpp"

#include <json.hpp>

using namespace lams;
using namespace lams::testgen;

TEST_CASE("generation is deterministic per seed") {
    GenConfig cfg{.max_size = 16, .seed = 77};
    CHECK(print(gen_term(cfg)) == print(gen_term(cfg)));
    TermGen a(cfg), b(cfg);
    for (int i = 0; i < 50; ++i) CHECK(identical(a.next(), b.next()));
    GenConfig other = cfg;
    other.seed = 78;
    CHECK(print(gen_term(cfg)) != print(gen_term(other)));
}

TEST_CASE("generated terms are well formed") {
    GenConfig cfg{.max_size = 15, .seed = 9};
    TermGen gen(cfg);
    for (int i = 0; i < 500; ++i) {
        TermPtr t = gen.next();
        CHECK(is_closed(t));
        CHECK(term_size(t) <= cfg.max_size);
        CHECK(alpha_eq(parse(print(t)), t));
    }
}

TEST_CASE("zero control weights give plain lambda terms") {
    GenConfig cfg{.max_size = 15, .seed = 10};
    cfg.weights.shift = 0;
    cfg.weights.reset = 0;
    TermGen gen(cfg);
    for (int i = 0; i < 200; ++i) CHECK_FALSE(contains_control(gen.next()));
}

TEST_CASE("an impossible budget falls back to the smallest closed term") {
    GenConfig cfg{.max_size = 1, .seed = 3};
    CHECK(alpha_eq(gen_term(cfg), ident_term()));
}

TEST_CASE("weights must be sane") {
    GenConfig cfg;
    cfg.weights = {0, 0, 0, 0, 0};
    CHECK_THROWS_AS(TermGen{cfg}, std::invalid_argument);
    cfg.weights = {1, 1, -1, 0, 0};
    CHECK_THROWS_AS(TermGen{cfg}, std::invalid_argument);
}

TEST_CASE("open mode produces free variables eventually") {
    GenConfig cfg{.max_size = 8, .seed = 12};
    cfg.closed = false;
    TermGen gen(cfg);
    bool open_seen = false;
    for (int i = 0; i < 100; ++i) open_seen |= !is_closed(gen.next());
    CHECK(open_seen);
}

TEST_CASE("differential suite: transition system vs reduction") {
    Report rep = diff_lts_reduction(400, GenConfig{.max_size = 14, .seed = 99}, 150);
    CHECK(rep.checked == 400);
    CHECK(rep.clean());
}

TEST_CASE("rule coverage over the default corpus") {
    Report rep = diff_lts_reduction(1000, GenConfig{.seed = 1}, 200);
    REQUIRE(rep.clean());
    for (const char* rule : {"Rbeta", "Rshift", "Rreset", "LTSbeta", "LTSreset", "LTScompl",
                             "LTScompr", "LTScompreset", "LTScaptreset", "LTSval", "LTSshift",
                             "LTScaptl", "LTScaptr"}) {
        INFO(rule);
        CHECK(rep.rule_coverage[rule] >= 1);
    }
}

TEST_CASE("an LTS missing the delimited-capture rule is caught") {
    // same corpus, but every tau derived through LTScaptreset is dropped
    TauFn mutant = [](const TermPtr& t) -> std::optional<TermPtr> {
        auto d = lts::tau_step_derivation(t);
        if (!d) return std::nullopt;
        for (lts::RuleTag r : d->rules)
            if (r == lts::RuleTag::CaptReset) return std::nullopt;
        return d->target;
    };
    Report rep = diff_lts_reduction(300, GenConfig{.max_size = 14, .seed = 99}, 150, mutant);
    CHECK_FALSE(rep.clean());
}

TEST_CASE("stuck outcomes always have the capture shape") {
    Report rep = diff_stuck_law(400, GenConfig{.max_size = 14, .seed = 98}, 150);
    CHECK(rep.clean());

    // S k.k is stuck with the empty context
    reduction::Decomposition d = reduction::decompose(parse("S k. k"));
    const auto* st = std::get_if<reduction::IsStuck>(&d);
    REQUIRE(st);
    CHECK(st->context.empty());

    // wrapping it in a delimiter makes it reduce instead
    CHECK(reduction::step(parse("<(S k. k)>")).has_value());
}

TEST_CASE("cps soundness driver finds no counterexample") {
    Report rep = diff_cps_soundness(60, GenConfig{.max_size = 11, .seed = 97}, 4000);
    CHECK(rep.checked == 60);
    CHECK(rep.clean());
    CHECK(rep.rule_coverage["cps_equivalent"] + rep.rule_coverage["cps_unknown"] == 60);
}

TEST_CASE("reports serialize to the documented schema") {
    Report rep = diff_lts_reduction(20, GenConfig{.max_size = 10, .seed = 5}, 50);
    nlohmann::json j = nlohmann::json::parse(report_json(rep));
    CHECK(j["checked"] == 20);
    CHECK(j["failures"].is_array());
    CHECK(j["rule_coverage"].is_object());
}
