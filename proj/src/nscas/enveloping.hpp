#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "nscas/algebra.hpp"

namespace nscas {

// PBW monomial: a word of generators with exponents. Odd generators carry
// exponent exactly 1 (G_r * G_r rewrites to L_{2r}); adjacent entries have
// distinct generators. The empty word is the unit.
class Monomial {
public:
    using Entry = std::pair<Generator, int>;

    Monomial() = default;
    explicit Monomial(Generator g) : word_{{g, 1}} {}
    // Builds from a flat letter sequence, merging adjacent repeats. Adjacent
    // equal odd letters are NOT merged here; canonicalization of those is
    // multiplication's job (see concat_mul).
    static Monomial from_letters(const std::vector<Generator>& letters);

    bool is_unit() const { return word_.empty(); }
    const std::vector<Entry>& word() const { return word_; }
    std::vector<Generator> letters() const;
    std::size_t length() const;  // total letter count
    HalfInt degree() const;

    bool operator==(const Monomial& o) const { return word_ == o.word_; }
    // Graded-lexicographic: by degree, then by word.
    bool operator<(const Monomial& o) const;

    std::string str() const;  // "1" for the unit

private:
    std::vector<Entry> word_;
};

// Element of U(NS): finite Scalar-linear combination of monomials.
class Element {
public:
    Element() = default;
    Element(const Scalar& c) { add(Monomial{}, c); }  // NOLINT: scalar embeds
    Element(int n) : Element(Scalar(n)) {}            // NOLINT
    explicit Element(Generator g) { add(Monomial(g), Scalar(1)); }
    explicit Element(const Monomial& m) { add(m, Scalar(1)); }
    static Element from_bracket(const Bracket& b);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }
    void add(const Monomial& m, const Scalar& c);
    Scalar coeff(const Monomial& m) const;

    Element operator-() const;
    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    bool operator==(const Element& o) const { return terms_ == o.terms_; }

    std::string str() const;  // canonical: descending monomial order

private:
    std::map<Monomial, Scalar> terms_;
};

Element operator*(const Scalar& c, const Element& e);

// Free bilinear concatenation with eager odd-square rewriting; no reordering.
Element multiply(const Element& x, const Element& y);
Element operator*(const Element& x, const Element& y);

// Normal orders for straightening. ascending: generators sorted by index.
// trailing(gs): all other generators ascending, then the listed generators
// rightmost, in list order.
class OrderSpec {
public:
    static OrderSpec ascending() { return OrderSpec({}); }
    static OrderSpec trailing(std::vector<Generator> gs);

    const std::vector<Generator>& trailing_set() const { return trailing_; }
    bool is_trailing(Generator g) const;
    // Strict order on generators; adjacent letters a,b are in normal position
    // iff less(a,b) or a == b.
    bool less(Generator a, Generator b) const;

private:
    explicit OrderSpec(std::vector<Generator> gs) : trailing_(std::move(gs)) {}
    std::vector<Generator> trailing_;
};

// PBW straightening: rewrites x into monomials normal for the given order.
// Equal to x in U(NS); idempotent.
Element normal_form(const Element& x, const OrderSpec& order);

// Splits normal_form(x, order) into (quotient, ideal_part): ideal_part takes
// the normal monomials whose rightmost letter lies in the trailing set, and
// hence lies in the left ideal generated by it.
std::pair<Element, Element> reduce_trailing(const Element& x, const OrderSpec& order);

// Sound congruence test modulo the left ideal generated by `trailing`:
// true certifies x = y mod sum_g U(NS) g; false is inconclusive in general.
bool congruent_mod(const Element& x, const Element& y, const std::vector<Generator>& trailing);

}  // namespace nscas
