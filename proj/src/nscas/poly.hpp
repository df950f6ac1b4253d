#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nscas {

using Rational = mpq_class;

// Fixed indeterminate alphabet. Keeping it global makes canonical forms
// syntactic: two polynomials are equal iff their term maps are identical.
enum class Var : int { mu = 0, lam, chat, tau, taup, p, q, h };
inline constexpr std::size_t kNumVars = 8;

const char* var_name(Var v);
std::optional<Var> var_by_name(const std::string& name);

using ExpVec = std::array<int, kNumVars>;

// Graded lexicographic order on exponent vectors.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial over Q in the fixed alphabet.
class Poly {
public:
    Poly() = default;
    static Poly constant(const Rational& c);
    static Poly variable(Var v, int exp = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Valid when is_constant(); zero polynomial yields 0.
    Rational constant_value() const;

    int degree(Var v) const;
    int total_degree() const;
    bool uses(Var v) const { return degree(v) > 0; }

    // Leading term under grlex.
    const ExpVec& leading_exps() const;
    const Rational& leading_coeff() const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly pow(int n) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Exact division; the caller must guarantee divisibility.
    Poly divide_exact(const Poly& divisor) const;

    // Primitive gcd (content 1, positive leading coefficient); gcd with 0 is
    // the primitive part of the other argument, gcd of two constants is 1.
    static Poly gcd(const Poly& a, const Poly& b);

    // Fully expanded rendering, terms in descending grlex order.
    std::string str() const;

    const std::map<ExpVec, Rational, GrlexLess>& terms() const { return terms_; }
    void add_term(const ExpVec& e, const Rational& c);

private:
    // Invariant: no zero coefficients stored.
    std::map<ExpVec, Rational, GrlexLess> terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return Poly::constant(c) * p; }

}  // namespace nscas
