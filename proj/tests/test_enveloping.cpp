#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nscas/parser.hpp"
#include "nscas/verma.hpp"

using namespace nscas;

namespace {

Element nf(const Element& e) { return normal_form(e, OrderSpec::ascending()); }

// Random elements of bounded degree, deterministic seed.
Element random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 3), nletters(0, 3), idx(-5, 5),
        coeff(-4, 4);
    Element out;
    for (int t = nterms(rng); t-- > 0;) {
        Element term(Scalar(coeff(rng)));
        for (int l = nletters(rng); l-- > 0;) {
            int d = idx(rng);
            if (d == 0) d = 1;
            term = term * Element(Generator(HalfInt::halves(d)));
        }
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("odd squares rewrite to even modes") {
    CHECK(Element(Generator::G(-1)) * Element(Generator::G(-1)) ==
          Element(Generator::L(-1)));
    CHECK(parse_element("G[3/2]*G[3/2]") == parse_element("L[3]"));
}

TEST_CASE("straightening agrees with the bracket") {
    // L[-1]*L[-2] = L[-2]*L[-1] + [L[-1],L[-2]] with [L[-1],L[-2]] = -L[-3]
    CHECK(nf(parse_element("L[-1]*L[-2]")) ==
          parse_element("L[-2]*L[-1]") - parse_element("L[-3]"));
    // G[1/2]*G[-1/2] = -G[-1/2]*G[1/2] + 2*L[0]
    CHECK(nf(parse_element("G[1/2]*G[-1/2]")) ==
          parse_element("-G[-1/2]*G[1/2]+2*L[0]"));
    // central term appears in chat
    CHECK(nf(parse_element("L[2]*L[-2]")) ==
          parse_element("L[-2]*L[2]-4*L[0]-1/2*chat"));
    CHECK(nf(parse_element("G[3/2]*G[-3/2]")) ==
          parse_element("-G[-3/2]*G[3/2]+2*L[0]+2/3*chat"));
}

TEST_CASE("normal_form is idempotent and multiplicative") {
    std::mt19937 rng(7);
    for (int i = 0; i < 40; ++i) {
        Element a = random_element(rng), b = random_element(rng);
        Element na = nf(a), nb = nf(b);
        CHECK(nf(na) == na);
        CHECK(nf(a * b) == nf(na * nb));
        CHECK(nf(a + b) == na + nb);
    }
}

TEST_CASE("trailing orders split into quotient and ideal part") {
    OrderSpec order = OrderSpec::trailing({Generator::L(-1), Generator::G(-1)});
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        Element e = random_element(rng);
        auto [quot, ideal] = reduce_trailing(e, order);
        CHECK(quot + ideal == normal_form(e, order));
        for (const auto& [m, c] : ideal.terms()) {
            REQUIRE(!m.is_unit());
            CHECK(order.is_trailing(m.letters().back()));
        }
        for (const auto& [m, c] : quot.terms())
            CHECK((m.is_unit() || !order.is_trailing(m.letters().back())));
    }
}

TEST_CASE("congruence checks from the left-ideal calculus") {
    CHECK(congruent_mod(parse_element("(1/2*L[1]*G[1/2]-G[3/2])*G[3/2]"), Element{},
                        {Generator::L(1), Generator::G(1)}));
    CHECK(congruent_mod(parse_element("(1/2*L[-1]*G[-1/2]+G[-3/2])*G[-3/2]"), Element{},
                        {Generator::L(-1), Generator::G(-1)}));
    CHECK_FALSE(congruent_mod(parse_element("G[3/2]"), Element{}, {Generator::G(1)}));
    CHECK_FALSE(congruent_mod(parse_element("L[0]"), parse_element("L[0]+1"),
                              {Generator::L(-1)}));
}

TEST_CASE("lemma 3 quotient") {
    auto [quot, ideal] =
        reduce_trailing(parse_element("L[-1]*G[-1/2]*(1/2*L[1]*G[1/2]-G[3/2])"),
                        OrderSpec::trailing({Generator::L(-1), Generator::G(-1)}));
    CHECK(quot == parse_element("2*L[0]^2-3*L[0]"));
}

TEST_CASE("acting through the Verma module is order-independent") {
    // The Verma action is an independent oracle: straightening an operator
    // must not change what it does to a vector.
    VermaParams params = VermaParams::symbolic();
    std::mt19937 rng(23);
    std::vector<VermaVector> vecs;
    for (int d = 0; d <= 4; ++d)
        for (const auto& m : basis(HalfInt::halves(d))) vecs.emplace_back(m);
    for (int i = 0; i < 15; ++i) {
        Element e = random_element(rng);
        Element n = nf(e);
        for (const auto& u : vecs) {
            CHECK(act_element(e, u, params) == act_element(n, u, params));
        }
    }
}
