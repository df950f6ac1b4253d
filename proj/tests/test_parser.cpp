#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nscas/errors.hpp"
#include "nscas/parser.hpp"

using namespace nscas;

namespace {

Element random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), nletters(0, 4), idx(-7, 7),
        num(-9, 9), den(1, 4), pick_var(0, 5);
    Element out;
    for (int t = nterms(rng); t-- > 0;) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        Scalar coeff(c);
        if (pick_var(rng) == 0) coeff = coeff * Scalar::variable(Var::mu);
        if (pick_var(rng) == 1) coeff = coeff * Scalar::variable(Var::chat);
        Element term(coeff);
        for (int l = nletters(rng); l-- > 0;) {
            int d = idx(rng);
            if (d == 0) d = 2;
            term = term * Element(Generator(HalfInt::halves(d)));
        }
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("generator tokens") {
    CHECK(parse_generator("L[-2]") == Generator::L(-2));
    CHECK(parse_generator("G[3/2]") == Generator::G(3));
    CHECK(parse_generator("G[-1/2]") == Generator::G(-1));
    CHECK_THROWS_AS(parse_generator("G[1]"), IndexParityError);
    CHECK_THROWS_AS(parse_generator("L[1/2]"), IndexParityError);
    CHECK_THROWS_AS(parse_generator("X[1]"), SyntaxError);
    for (std::int64_t d = -9; d <= 9; ++d) {
        Generator g{HalfInt::halves(d)};
        CHECK(parse_generator(g.str()) == g);
    }
}

TEST_CASE("expression grammar") {
    CHECK(parse_element("2*L[0]^2-3*L[0]") ==
          Scalar(2) * (Element(Generator::L(0)) * Element(Generator::L(0))) +
              Scalar(-3) * Element(Generator::L(0)));
    CHECK(parse_element("-G[1/2]") == Scalar(-1) * Element(Generator::G(1)));
    CHECK(parse_element("(mu+1)/(mu-1)*L[0]") ==
          ((Scalar::variable(Var::mu) + Scalar(1)) / (Scalar::variable(Var::mu) - Scalar(1))) *
              Element(Generator::L(0)));
    CHECK(parse_element("1/2*L[1]*G[1/2]-G[3/2]") ==
          Scalar(Rational(1, 2)) * (Element(Generator::L(1)) * Element(Generator::G(1))) -
              Element(Generator::G(3)));
}

TEST_CASE("syntax errors carry positions; odd powers get a hint") {
    CHECK_THROWS_AS(parse_expr("L[2"), SyntaxError);
    CHECK_THROWS_AS(parse_expr("1 + * 2"), SyntaxError);
    CHECK_THROWS_AS(parse_element("1/0"), DivisionByZero);
    for (const char* bad : {"G[1/2]^2", "G[1/2]^3"}) {
        try {
            parse_element(bad);
            FAIL("expected IndexParityError for ", bad);
        } catch (const IndexParityError& e) {
            CHECK(std::string(e.what()).find("L[1]") != std::string::npos);
        }
    }
}

TEST_CASE("scalar-only elaboration rejects generators") {
    CHECK(parse_scalar("3/4+mu") == Scalar(Rational(3, 4)) + Scalar::variable(Var::mu));
    CHECK_THROWS_AS(parse_scalar("L[0]+1"), SyntaxError);
}

TEST_CASE("round trip on 1000 random elements") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Element e = random_element(rng);
        Element back = parse_element(e.str());
        REQUIRE(back == e);
    }
}

TEST_CASE("rule files define a working state space") {
    const char* text = R"(
# sample
weight mu - 1/2
central chat
state x = G[3/2] v +
state y = G[-1/2] x +
state h = G[-3/2] x -
state z = G[-3/2] y -
rule G[1/2] v -> 0
rule G[-1/2] y -> 0
rule G[1/2] y -> tau * x
rule G[1/2] h -> 0
rule G[3/2] h -> p * x
rule G[3/2] z -> q * y
)";
    RuleFile file = parse_rule_file(text);
    CHECK(file.states.size() == 5);  // the root v plus four declarations
    CHECK(file.rules.size() == 6);
    StateSpace sp = file.space();
    StateWord y = file.states.at("y");
    StateVector got = act_generator(Generator::G(1), y, sp);
    StateVector expect;
    expect.add(file.states.at("x"), Scalar::variable(Var::tau));
    CHECK(got == expect);
    CHECK(sp.weight_of(y) ==
          Scalar::variable(Var::mu) - Scalar(Rational(1, 2)) + Scalar(1));
}

TEST_CASE("rule file errors") {
    CHECK_THROWS_AS(parse_rule_file("state x = G[3/2] w +"), SyntaxError);
    CHECK_THROWS_AS(parse_rule_file("rule G[1/2] v -> 0\nrule G[1] v -> 0"),
                    IndexParityError);
}
