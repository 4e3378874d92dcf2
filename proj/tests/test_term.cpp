#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "loopkit/constructions.hpp"
#include "loopkit/identity.hpp"
#include "loopkit/term.hpp"
#include "oracle.hpp"

using namespace loopkit;

TEST_CASE("parser honors precedence and grouping") {
    auto t = parse("x * y \\ z");
    REQUIRE(t->kind == TermKind::Mul);
    CHECK(t->a->kind == TermKind::Var);
    CHECK(t->a->var == "x");
    REQUIRE(t->b->kind == TermKind::LDiv);
    CHECK(t->b->a->var == "y");
    CHECK(t->b->b->var == "z");

    CHECK(parse("e")->kind == TermKind::ConstE);

    auto r = parse("(x*y)^r");
    REQUIRE(r->kind == TermKind::Rin);
    CHECK(r->a->kind == TermKind::Mul);

    // Left associativity at each level.
    CHECK(equal(parse("x*y*z"), Term::mul(Term::mul(Term::make_var("x"), Term::make_var("y")),
                                          Term::make_var("z"))));
    CHECK(equal(parse("x\\y/z"), Term::rdiv(Term::ldiv(Term::make_var("x"), Term::make_var("y")),
                                            Term::make_var("z"))));
    CHECK(equal(parse("x^l^r"), Term::rin(Term::lin(Term::make_var("x")))));

    // Multi-letter names are single variables; there is no juxtaposition.
    CHECK(parse("xy")->var == "xy");
    CHECK_THROWS_AS(parse("x y"), SyntaxError);
    CHECK(parse("ze*e")->a->var == "ze");  // 'e' is reserved only as a whole name
}

TEST_CASE("parser reports positions and unknown symbols") {
    try {
        parse("x*(y");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 4);
    }
    CHECK_THROWS_AS(parse("x*"), SyntaxError);
    CHECK_THROWS_AS(parse(""), SyntaxError);
    CHECK_THROWS_AS(parse("x^q"), SyntaxError);
    CHECK_THROWS_AS(parse("x+y"), UnknownSymbolError);
    CHECK_THROWS_AS(parse("X"), UnknownSymbolError);
    CHECK_THROWS_AS(parse("x1"), UnknownSymbolError);
    CHECK_THROWS_AS(Identity::parse("bad", "x*y"), SyntaxError);
    CHECK_THROWS_AS(Identity::parse("bad", "x = y = z"), SyntaxError);
}

TEST_CASE("printer emits minimal parentheses and round-trips") {
    CHECK(print(parse("x*y*z")) == "x*y*z");
    CHECK(print(parse("x*(y*z)")) == "x*(y*z)");
    CHECK(print(parse("x * y \\ z")) == "x*y\\z");
    CHECK(print(parse("(x*y)^r")) == "(x*y)^r");
    CHECK(print(parse("x^l^l")) == "x^l^l");
    CHECK(print(parse("x\\(y*z)")) == "x\\(y*z)");
    CHECK(print(parse("(x\\y)^l")) == "(x\\y)^l");
}

TEST_CASE("print/parse round-trip on random terms") {
    std::mt19937 rng(20260808);
    const std::vector<std::string> pool = {"x", "y", "z", "u", "v", "w", "ab"};
    auto gen = [&](auto&& self, int depth) -> TermPtr {
        int pick = static_cast<int>(rng() % (depth > 5 ? 2 : 7));
        switch (pick) {
            case 0: return Term::make_e();
            case 1: return Term::make_var(pool[rng() % pool.size()]);
            case 2: return Term::mul(self(self, depth + 1), self(self, depth + 1));
            case 3: return Term::ldiv(self(self, depth + 1), self(self, depth + 1));
            case 4: return Term::rdiv(self(self, depth + 1), self(self, depth + 1));
            case 5: return Term::lin(self(self, depth + 1));
            default: return Term::rin(self(self, depth + 1));
        }
    };
    for (int i = 0; i < 1000; ++i) {
        TermPtr t = gen(gen, 0);
        CAPTURE(print(t));
        CHECK(equal(parse(print(t)), t));
    }
}

TEST_CASE("eval matches hand computations") {
    auto z4 = make::cyclic(4);
    CHECK(eval_term(parse("x \\ (y*z)"), z4, {{"x", 1}, {"y", 2}, {"z", 3}}) == 0);
    CHECK(eval_term(parse("e * x"), z4, {{"x", 3}}) == 3);

    auto l5 = make::l5();
    CHECK(eval_term(parse("(x*x)*x"), l5, {{"x", 2}}) == 0);
    CHECK(eval_term(parse("x*(x*x)"), l5, {{"x", 2}}) == 1);

    CHECK_THROWS_AS(eval_term(parse("x*y"), z4, {{"x", 1}}), UnboundVariableError);
}

TEST_CASE("precedence is semantic, not just syntactic") {
    auto a = Identity::parse("prec", "x*y\\z = x*(y\\z)");
    for (const auto& l : {make::cyclic(4), make::l5(), make::symmetric3()})
        CHECK(a.holds(l).holds);
}

TEST_CASE("holds finds deterministic first counterexamples") {
    auto moufang = Identity::parse("moufang", "(x*y)*(z*x) = (x*(y*z))*x");
    auto z4 = make::cyclic(4);
    CHECK(moufang.holds(z4).holds);
    CHECK_FALSE(moufang.holds(z4).counterexample.has_value());

    auto l5 = make::l5();
    auto res = moufang.holds(l5);
    CHECK_FALSE(res.holds);
    REQUIRE(res.counterexample.has_value());

    // The reported witness is re-checkable and lexicographically first.
    std::map<std::string, elem> env(res.counterexample->begin(), res.counterexample->end());
    CHECK(oracle::eval(moufang.lhs(), l5, env) != oracle::eval(moufang.rhs(), l5, env));
    auto first = oracle::first_counterexample(l5, moufang);
    REQUIRE(first.has_value());
    CHECK(env == *first);

    CHECK(Identity::parse("comm", "x*y = y*x").holds(z4).holds);
}

TEST_CASE("identities reject more than 8 variables") {
    CHECK_THROWS_AS(Identity::parse("big", "a*b*c*d*f*g*h*i*j = a"), TooManyVariablesError);
}

TEST_CASE("inverses coincide with divisions by e") {
    // x^l = e/x and x^r = x\e, here as a tested property rather than sugar.
    auto lhs = Identity::parse("lin", "x^l = e/x");
    auto rhs = Identity::parse("rin", "x^r = x\\e");
    for (const auto& l : {make::cyclic(4), make::l5(), make::symmetric3(), make::moufang12()}) {
        CHECK(lhs.holds(l).holds);
        CHECK(rhs.holds(l).holds);
    }
}

TEST_CASE("compiled sweep agrees with the recursive oracle on small loops") {
    std::vector<Identity> ids;
    ids.push_back(Identity::parse("moufang", "(x*y)*(z*x) = (x*(y*z))*x"));
    ids.push_back(Identity::parse("cc1", "x*(y*z) = (x*y)/x * (x*z)"));
    ids.push_back(Identity::parse("papl", "(x*x)*x = x*(x*x)"));
    ids.push_back(Identity::parse("wip", "x*(y*x)^r = y^r"));
    ids.push_back(Identity::parse("mixed", "x\\(y*e) = x^l*(y*x)/x"));

    std::vector<FiniteLoop> loops;
    for (int n = 1; n <= 4; ++n)
        oracle::reduced_squares(n, [&](const std::vector<std::vector<int>>& t) {
            loops.push_back(FiniteLoop::validate(t));
        });
    CHECK(loops.size() == 7);  // 1 + 1 + 1 + 4
    loops.push_back(make::l5());

    for (const auto& l : loops)
        for (const auto& id : ids) {
            auto got = id.holds(l);
            CHECK(got.holds == oracle::holds(l, id));
            if (!got.holds) {
                std::map<std::string, elem> env(got.counterexample->begin(), got.counterexample->end());
                CHECK(env == *oracle::first_counterexample(l, id));
            }
        }
}
