#include <gtest/gtest.h>

#include <set>
#include <string>

#include "dmtl/dmtl.hpp"
#include "support/generators.hpp"

using dmtl::Literal;
using dmtl::parse_interval;
using dmtl::parse_program;
using dmtl::Program;

namespace {

std::string printed(const Program& p) { return dmtl::to_string(p); }

/// Restricts a model to predicates that do not start with the aux prefix.
dmtl::Model without_aux(const dmtl::Model& m) {
    return m.filtered([](const dmtl::GroundAtom& a) { return !a.predicate.starts_with(dmtl::kAuxPrefix); });
}

}  // namespace

TEST(Parser, BoxRule) {
    auto p = parse_program("boxminus[3,7] A -> A .");
    ASSERT_EQ(p.rules.size(), 1u);
    const auto& r = p.rules[0];
    ASSERT_EQ(r.body.size(), 1u);
    EXPECT_EQ(r.body[0].kind(), Literal::Kind::BoxMinus);
    EXPECT_EQ(r.body[0].range(), parse_interval("[3,7]"));
    EXPECT_EQ(r.body[0].operand().as_atom().predicate, "A");
    EXPECT_EQ(r.head.as_atom().predicate, "A");
    EXPECT_EQ(r.id, "r0");
}

TEST(Parser, HornRuleWithJoinVariable) {
    auto p = parse_program("A(X),B(X) -> C(X) .");
    ASSERT_EQ(p.rules.size(), 1u);
    const auto& r = p.rules[0];
    EXPECT_EQ(dmtl::form_of(r), dmtl::RuleForm::Horn);
    ASSERT_EQ(r.body.size(), 2u);
    EXPECT_TRUE(r.body[0].as_atom().args[0].is_variable());
    EXPECT_EQ(r.body[1].as_atom().args[0].name, "X");
    EXPECT_FALSE(dmtl::is_ground(r));
}

TEST(Parser, LowercaseArgumentsAreConstants) {
    auto p = parse_program("A(x) -> B(x) .");
    EXPECT_TRUE(dmtl::is_ground(p.rules[0]));
}

TEST(Parser, DayUnits) {
    auto p = parse_program("diamondminus[7d,7d] Monday -> Monday .");
    EXPECT_EQ(p.rules[0].body[0].range(), parse_interval("[7,7]"));
    auto h = parse_program("diamondminus[0,12h] A -> B .");
    EXPECT_EQ(h.rules[0].body[0].range(), parse_interval("[0,1/2]"));
}

TEST(Parser, SinceUntilAndTop) {
    auto p = parse_program("A since[0,2] B, top until(1,inf) C -> D .");
    ASSERT_EQ(p.rules[0].body.size(), 2u);
    EXPECT_EQ(p.rules[0].body[0].kind(), Literal::Kind::Since);
    EXPECT_EQ(p.rules[0].body[1].kind(), Literal::Kind::Until);
    EXPECT_EQ(p.rules[0].body[1].children()[0].kind(), Literal::Kind::Top);
    EXPECT_EQ(p.rules[0].body[1].range(), parse_interval("(1,inf)"));
}

TEST(Parser, CommentsAndEmptyBody) {
    auto p = parse_program("% nothing here\n-> A . % trailing\nA -> boxplus[1,2] B .");
    ASSERT_EQ(p.rules.size(), 2u);
    EXPECT_TRUE(p.rules[0].body.empty());
    EXPECT_EQ(p.rules[1].head.kind(), Literal::Kind::BoxPlus);
}

TEST(Parser, Database) {
    auto d = dmtl::parse_database("A@[0,1] . A@[1,2] . P(a,\"b c\")@(3,inf) .");
    EXPECT_EQ(d.at({"A", {}}), (dmtl::IntervalSet{parse_interval("[0,2]")}));
    EXPECT_EQ(d.at({"P", {"a", "b c"}}), (dmtl::IntervalSet{parse_interval("(3,inf)")}));
}

TEST(Parser, SingleFact) {
    auto f = dmtl::parse_fact("A@[98,99]");
    EXPECT_EQ(f.atom.predicate, "A");
    EXPECT_EQ(f.interval, parse_interval("[98,99]"));
    EXPECT_EQ(dmtl::parse_fact("Q(c)@[1,2] .").atom.args.at(0), "c");
    EXPECT_THROW(dmtl::parse_fact("Q(X)@[1,2]"), dmtl::ParseError);
}

TEST(ParserErrors, ReportLineAndColumn) {
    try {
        parse_program("A -> B .\nA -> -> C .");
        FAIL() << "expected a parse error";
    } catch (const dmtl::ParseError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_EQ(e.column(), 6u);
    }
}

TEST(ParserErrors, RejectsInvalidInput) {
    // head grammar
    EXPECT_THROW(parse_program("A -> diamondminus[1,2] B ."), dmtl::ParseError);
    EXPECT_THROW(parse_program("A -> bottom ."), dmtl::ParseError);
    EXPECT_THROW(parse_program("A -> B since[1,2] C ."), dmtl::ParseError);
    // negative range
    EXPECT_THROW(parse_program("diamondminus[-1,2] A -> B ."), dmtl::ParseError);
    // head variable not bound by the body
    EXPECT_THROW(parse_program("A(X) -> B(Y) ."), dmtl::ParseError);
    // reserved prefix
    EXPECT_THROW(parse_program("_aux0 -> B ."), dmtl::ParseError);
    // mixed units
    EXPECT_THROW(parse_program("diamondminus[1d,30] A -> B ."), dmtl::ParseError);
    // missing terminator, empty interval
    EXPECT_THROW(parse_program("A -> B"), dmtl::ParseError);
    EXPECT_THROW(parse_program("diamondminus[3,2] A -> B ."), dmtl::ParseError);
    // unknown character
    EXPECT_THROW(parse_program("A -> B ! ."), dmtl::ParseError);
}

TEST(Printer, RoundTrip) {
    const char* src =
        "diamondminus[3,4] A -> B .\n"
        "boxminus[3,4] B -> A .\n"
        "A(X), B(X) -> C(X) .\n"
        "(A since[0,2] B) until(1,inf) C, top -> boxplus[1,2] D(c, \"e f\") .\n"
        "-> E .\n"
        "diamondminus[1/2,3) (A since[0,1] B) -> top .\n";
    auto p = parse_program(src);
    auto text = printed(p);
    EXPECT_EQ(printed(parse_program(text)), text);
    EXPECT_EQ(dmtl::to_string(p.rules[0]), "diamondminus[3,4] A -> B .");
    EXPECT_EQ(dmtl::to_string(p.rules[4]), "-> E .");
}

TEST(PrinterProperty, RandomProgramsRoundTrip) {
    support::Rng rng(21);
    for (int k = 0; k < 200; ++k) {
        auto p = support::random_fp_program(rng, {});
        auto text = printed(p);
        auto q = parse_program(text);
        ASSERT_EQ(q.rules, p.rules) << text;
    }
}

TEST(NormalForm, NestedDiamonds) {
    auto p = dmtl::to_normal_form(parse_program("diamondminus[1,2] diamondminus[3,4] A -> B ."));
    EXPECT_EQ(printed(p), "diamondminus[3,4] A -> _aux0 .\ndiamondminus[1,2] _aux0 -> B .\n");
}

TEST(NormalForm, AlreadyNormalIsUnchanged) {
    auto src = parse_program("diamondminus[3,4] A -> B .");
    EXPECT_EQ(dmtl::to_normal_form(src).rules, src.rules);
}

TEST(NormalForm, TemporalLiteralInHornBody) {
    auto p = dmtl::to_normal_form(parse_program("diamondminus[3,5] C, D -> A ."));
    EXPECT_EQ(printed(p), "diamondminus[3,5] C -> _aux0 .\n_aux0, D -> A .\n");
}

TEST(NormalForm, BoxHeadsBecomeDualDiamonds) {
    auto p = dmtl::to_normal_form(parse_program("A -> boxminus[1,2] B . A -> boxplus[3,4] C ."));
    EXPECT_EQ(printed(p),
              "A -> _aux0 .\ndiamondplus[1,2] _aux0 -> B .\nA -> _aux1 .\ndiamondminus[3,4] _aux1 -> C .\n");
}

TEST(NormalForm, TopSinceBecomesDiamond) {
    auto p = dmtl::to_normal_form(parse_program("top since[1,2] A, B -> C . A -> top ."));
    EXPECT_EQ(printed(p), "diamondminus[1,2] A -> _aux0 .\n_aux0, B -> C .\n");
}

TEST(NormalForm, FreshNamesAvoidExistingAux) {
    dmtl::ParseOptions opts;
    opts.allow_reserved = true;
    auto p = dmtl::to_normal_form(parse_program("diamondminus[1,2] boxminus[0,1] _aux4 -> B .", opts));
    EXPECT_EQ(p.rules[0].head.as_atom().predicate, "_aux5");
}

TEST(NormalForm, AuxAtomsCarryVariables) {
    auto p = dmtl::to_normal_form(parse_program("diamondminus[1,2] A(X), B(X, Y) -> C(Y) ."));
    EXPECT_EQ(printed(p), "diamondminus[1,2] A(X) -> _aux0(X) .\n_aux0(X), B(X,Y) -> C(Y) .\n");
}

TEST(NormalForm, Idempotent) {
    auto once = dmtl::to_normal_form(
        parse_program("diamondminus[1,2] (A since[0,1] diamondminus[1,1] B), C -> boxminus[2,3] D ."));
    EXPECT_TRUE(dmtl::is_normal_form(once));
    EXPECT_EQ(dmtl::to_normal_form(once).rules, once.rules);
}

TEST(NormalForm, PreservesModelOnOriginalPredicates) {
    auto nested = parse_program("diamondminus[3,5] C, D -> A . diamondminus[1,2] diamondminus[3,4] A -> B .");
    auto flat = parse_program(
        "diamondminus[3,5] C -> X1 . X1, D -> A . diamondminus[3,4] A -> X2 . diamondminus[1,2] X2 -> B .");
    auto db = dmtl::parse_database("C@[0,1] . D@[2,10] . C@[6,7] .");
    auto a = without_aux(dmtl::naive_fixpoint_bounded(nested, db, 40));
    auto b = dmtl::naive_fixpoint_bounded(flat, db, 40).filtered([](const dmtl::GroundAtom& g) {
        return g.predicate != "X1" && g.predicate != "X2";
    });
    EXPECT_EQ(a, b);
    EXPECT_EQ(dmtl::to_string(a.at({"B", {}})), "{[7,12], [13,16]}");
}

TEST(NormalForm, FutureRulesAreOutsideTheEvaluableFragment) {
    auto p = parse_program("diamondminus[2,3] A -> boxminus[0,1] B .");
    EXPECT_THROW(dmtl::naive_fixpoint_bounded(p, dmtl::parse_database("A@[0,1] ."), 30), dmtl::FragmentError);
}

TEST(Grounding, SingleVariable) {
    auto g = dmtl::ground(parse_program("A(X) -> B(X) ."), dmtl::parse_database("A(c)@[0,1] ."));
    EXPECT_EQ(printed(g), "A(c) -> B(c) .\n");
}

TEST(Grounding, PropositionalIsUnchanged) {
    auto p = parse_program("diamondminus[3,4] A -> B . boxminus[3,4] B -> A .");
    EXPECT_EQ(dmtl::ground(p, dmtl::parse_database("A@[0,1] .")).rules, p.rules);
}

TEST(Grounding, CartesianProduct) {
    auto g = dmtl::ground(parse_program("A(X), B(Y) -> C(X) ."), dmtl::parse_database("A(c)@[0,1] . B(d)@[0,1] ."));
    EXPECT_EQ(g.rules.size(), 4u);
    std::set<std::string> texts;
    for (const auto& r : g.rules) texts.insert(dmtl::to_string(r));
    EXPECT_EQ(texts.size(), 4u);
    EXPECT_TRUE(texts.count("A(c), B(d) -> C(c) ."));
    EXPECT_TRUE(texts.count("A(d), B(c) -> C(d) ."));
}

TEST(Grounding, ConstantsFromRulesCount) {
    auto g = dmtl::ground(parse_program("A(X) -> B(X) . A(k) -> B(m) ."), dmtl::parse_database("A(c)@[0,1] ."));
    EXPECT_EQ(g.rules.size(), 4u);
}
