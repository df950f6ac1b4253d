#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nscas/parser.hpp"
#include "nscas/verma.hpp"

using namespace nscas;

namespace {
const Scalar kH = Scalar::variable(Var::h);
const Scalar kChat = Scalar::variable(Var::chat);
}  // namespace

TEST_CASE("basis monomials are superpartitions") {
    for (int d = 0; d <= 10; ++d) {
        HalfInt level = HalfInt::halves(d);
        auto b = basis(level);
        CHECK(b.size() == dim(level));
        for (const auto& m : b) {
            CHECK(m.level() == level);
            for (std::size_t i = 1; i < m.g_parts().size(); ++i)
                CHECK(m.g_parts()[i - 1] > m.g_parts()[i]);  // strictly decreasing
            for (std::size_t i = 1; i < m.l_parts().size(); ++i)
                CHECK(m.l_parts()[i - 1] >= m.l_parts()[i]);  // weakly decreasing
        }
    }
}

TEST_CASE("dimensions through level 4") {
    const std::size_t expect[9] = {1, 1, 1, 2, 3, 4, 5, 7, 10};
    for (int d = 0; d <= 8; ++d) CHECK(dim(HalfInt::halves(d)) == expect[d]);
}

TEST_CASE("highest-weight vector eigenvalues") {
    VermaParams params = VermaParams::symbolic();
    VermaVector hw{PartitionMonomial{}};
    CHECK(act(Generator::L(0), hw, params) == kH * hw);
    CHECK(act(Generator::G(1), hw, params).is_zero());
    CHECK(act(Generator::L(2), hw, params).is_zero());
    // L[1]*L[-1]|h> = [L[1],L[-1]]|h> = -2h|h>
    VermaVector lm1 = act(Generator::L(-1), hw, params);
    CHECK(act(Generator::L(1), lm1, params) == (Scalar(-2) * kH) * hw);
    // G[3/2]*G[-3/2]|h> = (2h + 2/3 chat)|h>
    VermaVector gm = act(Generator::G(-3), hw, params);
    CHECK(act(Generator::G(3), gm, params) ==
          (Scalar(2) * kH + Scalar(Rational(2, 3)) * kChat) * hw);
}

TEST_CASE("action is degree-correct") {
    VermaParams params = VermaParams::symbolic();
    for (int d = 0; d <= 6; ++d) {
        for (const auto& m : basis(HalfInt::halves(d))) {
            for (std::int64_t gd : {-3, -1, 1, 2}) {
                Generator g{HalfInt::halves(gd)};
                VermaVector out = act(g, m, params);
                for (const auto& [pm, c] : out.terms())
                    CHECK(pm.level().doubled() == m.level().doubled() - g.index().doubled());
            }
        }
    }
}

TEST_CASE("representation property, symbolic, level 2") {
    VermaReport rep = rep_check(VermaParams::symbolic(), HalfInt::whole(2),
                                HalfInt::halves(3));
    CHECK(rep.ok());
    CHECK(rep.pairs_checked > 0);
}

TEST_CASE("representation property at specialized weights") {
    VermaReport rep = rep_check({Scalar(0), Scalar(0)}, HalfInt::whole(2),
                                HalfInt::halves(3));
    CHECK(rep.ok());
}

TEST_CASE("corrupted central term breaks the commutator identity") {
    // With the wrong G-G central (4r^2+1)/12 the anticommutator of
    // G[3/2], G[-3/2] would be 2*L[0] + 5/6*chat; the module rejects it.
    VermaParams params = VermaParams::symbolic();
    for (const auto& m : basis(HalfInt::whole(1))) {
        VermaVector u{m};
        VermaVector lhs = act(Generator::G(3), act(Generator::G(-3), u, params), params) +
                          act(Generator::G(-3), act(Generator::G(3), u, params), params);
        VermaVector good =
            act_element(parse_element("2*L[0]+2/3*chat"), u, params);
        VermaVector bad = act_element(parse_element("2*L[0]+5/6*chat"), u, params);
        CHECK(lhs == good);
        CHECK_FALSE(lhs == bad);
    }
}

TEST_CASE("action matrices have oracle-consistent shape") {
    VermaParams params = VermaParams::symbolic();
    auto mat = action_matrix(Generator::G(-1), HalfInt::whole(1), params);
    CHECK(mat.size() == dim(HalfInt::halves(3)));
    for (const auto& row : mat) CHECK(row.size() == dim(HalfInt::whole(1)));
}

TEST_CASE("monomial rendering round-trips through its own parser") {
    for (const auto& m : basis(HalfInt::halves(7))) {
        std::string s = m.str();
        CHECK(s.find("|h>") != std::string::npos);
    }
}
