#pragma once

#include <map>
#include <string>

#include "nscas/poly.hpp"

namespace nscas {

// Element of the coefficient field Q(mu, lam, chat, tau, taup, p, q, h):
// a reduced fraction of two polynomials with monic denominator.
class Scalar {
public:
    Scalar() : num_(), den_(Poly::constant(1)) {}
    Scalar(int n) : Scalar(Rational(n)) {}  // NOLINT: implicit by design
    Scalar(const Rational& r) : num_(Poly::constant(r)), den_(Poly::constant(1)) {}
    Scalar(const Poly& p) : num_(p), den_(Poly::constant(1)) {}
    static Scalar variable(Var v) { return Scalar(Poly::variable(v)); }
    static Scalar fraction(const Poly& num, const Poly& den);

    bool is_zero() const { return num_.is_zero(); }
    bool is_rational() const { return num_.is_constant() && den_.is_constant(); }
    // Valid when is_rational().
    Rational rational_value() const { return num_.constant_value(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws DivisionByZero
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar pow(int n) const;

    bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    // Total order for use as a map key; otherwise meaningless.
    bool operator<(const Scalar& o) const;

    // Simultaneous substitution; a field homomorphism where defined.
    Scalar substitute(const std::map<Var, Scalar>& bindings) const;

    std::string str() const;

private:
    Scalar(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {}
    void normalize();
    Poly num_, den_;
};

}  // namespace nscas
