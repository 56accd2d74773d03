#include <doctest.h>

#include "lams/syntax.hpp"
#include "lams/testgen.hpp"

using namespace lams;

TEST_CASE("parse builds the expected shapes") {
    TermPtr t = parse("\\x.x x");
    const Abs* l = as_abs(t);
    REQUIRE(l);
    const App* a = as_app(l->body);
    REQUIRE(a);
    CHECK(std::holds_alternative<Bound>(a->fun->node));
    CHECK(std::holds_alternative<Bound>(a->arg->node));

    TermPtr u = parse_with_abbrevs("<(S k. k i) w>");
    const Reset* r = as_reset(u);
    REQUIRE(r);
    const App* body = as_app(r->body);
    REQUIRE(body);
    const Shift* sh = as_shift(body->fun);
    REQUIRE(sh);
    CHECK(alpha_eq(body->arg, self_app_term()));
    const App* ka = as_app(sh->body);
    REQUIRE(ka);
    CHECK(alpha_eq(ka->arg, ident_term()));
}

TEST_CASE("parse reports position on malformed input") {
    CHECK_THROWS_AS(parse("\\x."), ParseError);
    try {
        parse("\\x.");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 4);
    }
    CHECK_THROWS_AS(parse("(x"), ParseError);
    CHECK_THROWS_AS(parse("x )"), ParseError);
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("S . x"), ParseError);
    // '@' is context syntax only
    CHECK_THROWS_AS(parse("@"), ParseError);
    // open terms are legal: no unbound-name error
    CHECK_NOTHROW(parse("x y"));
}

TEST_CASE("comments and the shift keyword") {
    CHECK(alpha_eq(parse("\\x.x -- the identity\n"), ident_term()));
    CHECK(alpha_eq(parse("shift k. k"), parse("S k. k")));
    // 'S' and 'shift' are keywords, but longer identifiers are variables
    CHECK(free_vars(parse("Sk shifty")).count("Sk") == 1);
}

TEST_CASE("free variables") {
    CHECK(free_vars(parse("\\x.x")).empty());
    CHECK(free_vars(parse("S k. k x")) == std::set<std::string>{"x"});
    CHECK(free_vars(parse("<x y>")) == std::set<std::string>{"x", "y"});
}

TEST_CASE("substitution is capture avoiding") {
    // (x x)[x := \y.y] -> (\y.y) (\y.y)
    TermPtr r1 = substitute(parse("x x"), "x", parse("\\y.y"));
    CHECK(alpha_eq(r1, parse("(\\y.y) (\\y.y)")));
    // (\y.x)[x := \z.z] -> \y.\z.z
    TermPtr r2 = substitute(parse("\\y.x"), "x", parse("\\z.z"));
    CHECK(alpha_eq(r2, parse("\\y.\\z.z")));
    // (\y.x y)[x := \z.y]: the bound y must be renamed on printing
    TermPtr r3 = substitute(parse("\\y.x y"), "x", parse("\\z.y"));
    CHECK(print(r3) == "\\y'.(\\z.y) y'");
    CHECK(alpha_eq(parse(print(r3)), r3));
}

TEST_CASE("alpha equivalence") {
    CHECK(alpha_eq(parse("\\x.x"), parse("\\y.y")));
    CHECK(alpha_eq(parse("S k. k"), parse("S j. j")));
    CHECK_FALSE(alpha_eq(parse("\\x.x"), parse("\\x.x x")));
    CHECK_FALSE(alpha_eq(parse("\\x.\\y.x"), parse("\\x.\\y.y")));
}

TEST_CASE("plugging frame sequences, inside out") {
    TermPtr t = mk_free("t");
    CHECK(identical(plug(PureContext{}, t), t));
    // v [] represents the hole applied under v
    PureContext applied{{Frame::applied(ident_term())}};
    CHECK(alpha_eq(plug(applied, t), mk_app(ident_term(), t)));
    // the capture context of the running example: innermost frame first
    PureContext e{{Frame::pending(parse_with_abbrevs("S k2. w")),
                   Frame::pending(parse_with_abbrevs("w w"))}};
    CHECK(alpha_eq(plug(e, parse_with_abbrevs("S k1. i (k1 i)")),
                   parse_with_abbrevs("(S k1. i (k1 i)) (S k2. w) (w w)")));
}

TEST_CASE("pure context concatenation composes plugging") {
    testgen::TermGen gen(testgen::GenConfig{.max_size = 8, .seed = 11});
    for (int i = 0; i < 200; ++i) {
        PureContext c1 = gen.next_pure_context(3);
        PureContext c2 = gen.next_pure_context(3);
        TermPtr t = gen.next();
        CHECK(identical(plug(concat(c1, c2), t), plug(c2, plug(c1, t))));
    }
}

TEST_CASE("printing uses minimal parentheses") {
    CHECK(print(parse("\\x.x")) == "\\x.x");
    CHECK(print(mk_reset(mk_free("x"))) == "<x>");
    CHECK(print(parse("(a b) c")) == "a b c");
    CHECK(print(parse("a (b c)")) == "a (b c)");
    CHECK(print(parse("(\\x.x) y")) == "(\\x.x) y");
    CHECK(print(parse("\\x.x y")) == "\\x.x y");
    CHECK(print(parse("<x> <y>")) == "<x> <y>");
    CHECK(print(parse("S k.k x")) == "S k.k x");
}

TEST_CASE("round trip on random terms") {
    for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
        testgen::GenConfig cfg;
        cfg.seed = seed;
        cfg.max_size = 18;
        cfg.closed = seed != 3;  // include open terms
        testgen::TermGen gen(cfg);
        for (int i = 0; i < 300; ++i) {
            TermPtr t = gen.next();
            CHECK(alpha_eq(parse(print(t)), t));
        }
    }
}

TEST_CASE("substitution for a variable not free is identity") {
    testgen::TermGen gen(testgen::GenConfig{.max_size = 12, .seed = 4});
    for (int i = 0; i < 200; ++i) {
        TermPtr t = gen.next();
        CHECK(alpha_eq(substitute(t, "zz_unused", self_app_term()), t));
    }
}

TEST_CASE("alpha equivalence is an equivalence relation") {
    testgen::TermGen gen(testgen::GenConfig{.max_size = 10, .seed = 5});
    for (int i = 0; i < 100; ++i) {
        TermPtr a = gen.next();
        TermPtr b = parse(print(a));       // reparse of the printed form
        TermPtr c = expand_abbrevs(b);     // abbrevs never free in closed terms
        CHECK(alpha_eq(a, a));
        CHECK(alpha_eq(a, b));
        CHECK(alpha_eq(b, a));
        CHECK((alpha_eq(a, b) && alpha_eq(b, c) ? alpha_eq(a, c) : true));
    }
}

TEST_CASE("pure context text form") {
    PureContext c1 = parse_pure_context_with_abbrevs("i @");
    REQUIRE(c1.frames.size() == 1);
    CHECK(c1.frames[0].kind == Frame::Kind::AppliedValue);
    PureContext c2 = parse_pure_context_with_abbrevs("@ (w w)");
    REQUIRE(c2.frames.size() == 1);
    CHECK(c2.frames[0].kind == Frame::Kind::PendingArg);
    // two frames, innermost first
    PureContext c3 = parse_pure_context_with_abbrevs("i (@ w)");
    REQUIRE(c3.frames.size() == 2);
    CHECK(c3.frames[0].kind == Frame::Kind::PendingArg);
    CHECK(c3.frames[1].kind == Frame::Kind::AppliedValue);
    // round trip through the printed form
    CHECK(alpha_eq(plug(parse_pure_context(print(c3)), mk_free("h")), plug(c3, mk_free("h"))));

    CHECK_THROWS(parse_pure_context("<@>"));          // delimiter on the hole path
    CHECK_THROWS(parse_pure_context("@ @"));          // two holes
    CHECK_THROWS(parse_pure_context("x"));            // no hole
    CHECK_THROWS(parse_pure_context("(x x) @"));      // non-value left of the hole
    CHECK_THROWS(parse_pure_context("\\x.@"));        // hole under a binder
}

TEST_CASE("general contexts capture the variables of the filled term") {
    GCtx c = gabs("x", gapp_l(ghole(), mk_free("x")));
    TermPtr plugged = plug(c, mk_free("x"));
    CHECK(alpha_eq(plugged, parse("\\x.x x")));
    CHECK(is_closed(plugged));

    GCtx under_shift = gshift("k", greset(gapp_r(mk_free("k"), ghole())));
    TermPtr p2 = plug(under_shift, mk_free("k"));
    CHECK(alpha_eq(p2, parse("S k.<k k>")));

    // the hole is the only hole by construction; embedded terms stay put
    GCtx c3 = gapp_r(parse("\\a.a"), greset(ghole()));
    CHECK(alpha_eq(plug(c3, mk_free("y")), parse("(\\a.a) <y>")));
}

TEST_CASE("abbreviations expand to the standard terms") {
    CHECK(alpha_eq(parse_with_abbrevs("i"), parse("\\x.x")));
    CHECK(alpha_eq(parse_with_abbrevs("w"), parse("\\x.x x")));
    CHECK(alpha_eq(parse_with_abbrevs("omega"), parse("(\\x.x x) (\\x.x x)")));
    // bound occurrences are untouched
    CHECK(alpha_eq(parse_with_abbrevs("\\i.i"), parse("\\z.z")));
}
