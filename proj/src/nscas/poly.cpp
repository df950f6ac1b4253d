#include "nscas/poly.hpp"

#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nscas {

namespace {

const char* kVarNames[kNumVars] = {"mu", "lam", "chat", "tau", "taup", "p", "q", "h"};

int grade(const ExpVec& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

}  // namespace

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_by_name(const std::string& name) {
    for (std::size_t i = 0; i < kNumVars; ++i)
        if (name == kVarNames[i]) return static_cast<Var>(i);
    return std::nullopt;
}

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;  // lexicographic tie-break
}

Poly Poly::constant(const Rational& c) {
    Poly p;
    if (c != 0) p.terms_[ExpVec{}] = c;
    return p;
}

Poly Poly::variable(Var v, int exp) {
    assert(exp >= 0);
    if (exp == 0) return constant(1);
    Poly p;
    ExpVec e{};
    e[static_cast<int>(v)] = exp;
    p.terms_[e] = 1;
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ExpVec{});
}

Rational Poly::constant_value() const {
    if (terms_.empty()) return 0;
    assert(is_constant());
    return terms_.begin()->second;
}

int Poly::degree(Var v) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<int>(v)]);
    return d;
}

int Poly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, grade(e));
    return d;
}

const ExpVec& Poly::leading_exps() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
}

const Rational& Poly::leading_coeff() const {
    assert(!terms_.empty());
    return terms_.rbegin()->second;
}

void Poly::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    Poly r = *this;
    r += o;
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    Poly r = *this;
    r -= o;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator*(const Poly& o) const {
    Poly r;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            ExpVec e;
            for (std::size_t i = 0; i < kNumVars; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Poly Poly::pow(int n) const {
    assert(n >= 0);
    Poly r = constant(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

Poly Poly::divide_exact(const Poly& divisor) const {
    assert(!divisor.is_zero());
    Poly rem = *this;
    Poly quot;
    while (!rem.is_zero()) {
        const ExpVec& le = rem.leading_exps();
        const ExpVec& de = divisor.leading_exps();
        ExpVec qe;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            qe[i] = le[i] - de[i];
            if (qe[i] < 0) throw std::logic_error("divide_exact: not divisible");
        }
        Rational qc = rem.leading_coeff() / divisor.leading_coeff();
        Poly t;
        t.terms_[qe] = qc;
        quot += t;
        rem -= t * divisor;
    }
    return quot;
}

namespace {

// --- gcd machinery (primitive PRS) ---------------------------------------

mpz_class num_gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Rational content: gcd of numerators over lcm of denominators.
Rational content(const Poly& p) {
    mpz_class g = 0, l = 1;
    for (const auto& [e, c] : p.terms()) {
        g = num_gcd(g, c.get_num());
        mpz_class tmp;
        mpz_lcm(tmp.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        l = tmp;
    }
    if (g == 0) return 0;
    Rational r(g, l);
    r.canonicalize();
    return r;
}

Poly scaled(const Poly& p, const Rational& c) { return Poly::constant(c) * p; }

// Integer-primitive with positive leading coefficient.
Poly primitive(const Poly& p) {
    if (p.is_zero()) return p;
    Rational c = content(p);
    if (p.leading_coeff() < 0) c = -c;
    return scaled(p, Rational(1) / c);
}

std::optional<Var> first_var(const Poly& a, const Poly& b) {
    for (std::size_t i = 0; i < kNumVars; ++i) {
        Var v = static_cast<Var>(i);
        if (a.uses(v) || b.uses(v)) return v;
    }
    return std::nullopt;
}

// View as univariate in v: coefficient polynomials indexed by degree.
std::vector<Poly> univariate(const Poly& p, Var v) {
    std::vector<Poly> out(static_cast<std::size_t>(p.degree(v)) + 1);
    for (const auto& [e, c] : p.terms()) {
        ExpVec rest = e;
        int d = rest[static_cast<int>(v)];
        rest[static_cast<int>(v)] = 0;
        out[static_cast<std::size_t>(d)].add_term(rest, c);
    }
    while (out.size() > 1 && out.back().is_zero()) out.pop_back();
    return out;
}

int deg_in(const Poly& p, Var v) { return p.degree(v); }

Poly lead_coeff_in(const Poly& p, Var v) {
    auto u = univariate(p, v);
    return u.back();
}

// Pseudo-remainder of a by b in variable v.
Poly prem(Poly a, const Poly& b, Var v) {
    int db = deg_in(b, v);
    Poly lb = lead_coeff_in(b, v);
    while (!a.is_zero() && deg_in(a, v) >= db) {
        int da = deg_in(a, v);
        Poly la = lead_coeff_in(a, v);
        Poly shift = Poly::variable(v, da - db);
        a = lb * a - la * shift * b;
    }
    return a;
}

// Content with respect to v: gcd of the univariate coefficients.
Poly poly_content(const Poly& p, Var v) {
    Poly g;
    for (const Poly& c : univariate(p, v)) g = Poly::gcd(g, c);
    return g;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return primitive(b);
    if (b.is_zero()) return primitive(a);
    auto mv = first_var(a, b);
    if (!mv) return constant(1);
    Var v = *mv;
    if (!a.uses(v) || !b.uses(v)) {
        // One side is free of the main variable: gcd divides its content.
        const Poly& free_side = a.uses(v) ? b : a;
        const Poly& other = a.uses(v) ? a : b;
        return gcd(free_side, poly_content(other, v));
    }
    Poly ca = poly_content(a, v), cb = poly_content(b, v);
    Poly pa = a.divide_exact(ca), pb = b.divide_exact(cb);
    Poly cont_gcd = gcd(ca, cb);
    if (deg_in(pa, v) < deg_in(pb, v)) std::swap(pa, pb);
    while (true) {
        Poly r = prem(pa, pb, v);
        if (r.is_zero()) break;
        pa = pb;
        pb = primitive(r.divide_exact(poly_content(r, v)));
        if (deg_in(pb, v) == 0) return primitive(cont_gcd);
    }
    Poly g = pb.divide_exact(poly_content(pb, v));
    return primitive(cont_gcd * g);
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Descending grlex, largest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational ac = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_vars = !(e == ExpVec{});
        bool coeff_shown = (ac != 1) || !has_vars;
        if (coeff_shown) os << ac.get_str();
        bool need_star = coeff_shown;
        for (std::size_t i = 0; i < kNumVars; ++i) {
            if (e[i] == 0) continue;
            if (need_star) os << "*";
            os << kVarNames[i];
            if (e[i] > 1) os << "^" << e[i];
            need_star = true;
        }
    }
    return os.str();
}

}  // namespace nscas
