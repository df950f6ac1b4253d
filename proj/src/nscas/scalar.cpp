#include "nscas/scalar.hpp"

#include <sstream>

#include "nscas/errors.hpp"

namespace nscas {

Scalar Scalar::fraction(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw DivisionByZero("zero denominator polynomial");
    Scalar s(num, den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // Monic denominator under grlex.
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
        Poly inv = Poly::constant(Rational(1) / lc);
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_); }

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    r.normalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r(num_ * o.num_, den_ * o.den_);
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    Scalar r(num_ * o.den_, den_ * o.num_);
    r.normalize();
    return r;
}

Scalar Scalar::pow(int n) const {
    if (n < 0) return Scalar(1) / pow(-n);
    Scalar r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

bool Scalar::operator<(const Scalar& o) const {
    auto key = [](const Poly& p) {
        std::map<ExpVec, Rational> m(p.terms().begin(), p.terms().end());
        return m;
    };
    auto a = std::pair(key(num_), key(den_));
    auto b = std::pair(key(o.num_), key(o.den_));
    return a < b;
}

namespace {

Scalar eval_poly(const Poly& p, const std::map<Var, Scalar>& bindings) {
    Scalar acc(0);
    for (const auto& [e, c] : p.terms()) {
        Scalar term{Rational(c)};
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            Var v = static_cast<Var>(i);
            auto it = bindings.find(v);
            Scalar base = it != bindings.end() ? it->second : Scalar::variable(v);
            term *= base.pow(e[i]);
        }
        acc += term;
    }
    return acc;
}

}  // namespace

Scalar Scalar::substitute(const std::map<Var, Scalar>& bindings) const {
    Scalar n = eval_poly(num_, bindings);
    Scalar d = eval_poly(den_, bindings);
    if (d.is_zero()) throw DivisionByZero("denominator vanishes under substitution");
    return n / d;
}

std::string Scalar::str() const {
    if (den_ == Poly::constant(1)) {
        if (num_.terms().size() <= 1) return num_.str();
        return "(" + num_.str() + ")";
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace nscas
