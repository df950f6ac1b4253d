#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "nscas/algebra.hpp"

using namespace nscas;

namespace {

struct Value {
    std::map<Generator, Scalar> gens;
    Scalar central{0};
    void acc(const Scalar& c, const Bracket& b) {
        if (b.gen && !b.coeff.is_zero()) {
            auto [it, fresh] = gens.emplace(*b.gen, c * b.coeff);
            if (!fresh) it->second += c * b.coeff;
            if (it->second.is_zero()) gens.erase(it);
        }
        central += c * b.central;
    }
    bool operator==(const Value& o) const { return gens == o.gens && central == o.central; }
};

}  // namespace

TEST_CASE("mixed bracket anchor values") {
    Bracket b = bracket(Generator::L(2), Generator::L(-2));
    REQUIRE(b.gen == Generator::L(0));
    CHECK(b.coeff == Scalar(-4));
    CHECK(b.central == Scalar(Rational(-1, 2)));

    b = bracket(Generator::G(3), Generator::G(-3));
    REQUIRE(b.gen == Generator::L(0));
    CHECK(b.coeff == Scalar(2));
    CHECK(b.central == Scalar(Rational(2, 3)));

    b = bracket(Generator::L(1), Generator::L(-1));
    CHECK(b.coeff == Scalar(-2));
    CHECK(b.central.is_zero());

    b = bracket(Generator::G(1), Generator::G(-1));
    CHECK(b.coeff == Scalar(2));
    CHECK(b.central.is_zero());

    b = bracket(Generator::L(1), Generator::G(-1));
    REQUIRE(b.gen == Generator::G(1));
    CHECK(b.coeff == Scalar(-1));

    b = bracket(Generator::L(0), Generator::G(3));
    CHECK(b.coeff == Scalar(Rational(3, 2)));
    b = bracket(Generator::L(-1), Generator::G(3));
    REQUIRE(b.gen == Generator::G(1));
    CHECK(b.coeff == Scalar(2));
}

TEST_CASE("super-antisymmetry") {
    for (std::int64_t da = -8; da <= 8; ++da)
        for (std::int64_t db = -8; db <= 8; ++db) {
            Generator a{HalfInt::halves(da)}, b{HalfInt::halves(db)};
            Bracket ab = bracket(a, b), ba = bracket(b, a);
            Scalar s(swap_sign(a, b));
            CHECK(ab.coeff == -s * ba.coeff);
            CHECK(ab.central == -s * ba.central);
        }
}

TEST_CASE("super-Jacobi identity holds") {
    for (std::int64_t da = -8; da <= 8; ++da)
        for (std::int64_t db = -8; db <= 8; ++db)
            for (std::int64_t dc = -8; dc <= 8; ++dc) {
                Generator a{HalfInt::halves(da)}, b{HalfInt::halves(db)},
                    c{HalfInt::halves(dc)};
                Value lhs, rhs;
                Bracket bc = bracket(b, c);
                if (bc.gen) lhs.acc(bc.coeff, bracket(a, *bc.gen));
                Bracket ab = bracket(a, b);
                if (ab.gen) rhs.acc(ab.coeff, bracket(*ab.gen, c));
                Bracket ac = bracket(a, c);
                if (ac.gen) rhs.acc(Scalar(swap_sign(a, b)) * ac.coeff, bracket(b, *ac.gen));
                REQUIRE(lhs == rhs);
            }
}

TEST_CASE("E accessor and parity") {
    CHECK(E(HalfInt::whole(2)) == Generator::L(2));
    CHECK(E(HalfInt::halves(7)).is_G());
    CHECK(Generator::L(3).parity() == Parity::even);
    CHECK(Generator::G(-1).parity() == Parity::odd);
    CHECK(swap_sign(Generator::G(1), Generator::G(3)) == -1);
    CHECK(swap_sign(Generator::L(1), Generator::G(3)) == 1);
}

TEST_CASE("adjoint closure of the principal generators") {
    ClosureResult res = adjoint_closure(
        {Generator::G(1), Generator::G(-1), Generator::G(3), Generator::G(-3)},
        HalfInt::whole(4));
    for (std::int64_t d = -8; d <= 8; ++d)
        CHECK(res.generators.contains(Generator(HalfInt::halves(d))));
    CHECK(res.generators.size() == 17);
    CHECK(res.central_reached);
}

TEST_CASE("closure without a central witness") {
    // G[1/2] alone only reaches L[1]; no opposite pair, no chat certificate.
    ClosureResult res = adjoint_closure({Generator::G(1)}, HalfInt::whole(1));
    CHECK(res.generators == std::set<Generator>{Generator::G(1), Generator::L(1)});
    CHECK_FALSE(res.central_reached);
}
