#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nscas/enveloping.hpp"

namespace nscas {

// Formal word of generators applied right-to-left to the cyclic vector v.
// The empty word is v itself. Canonical words consist of a declared base
// word (see StateSpace) prefixed by a sign-homogeneous, index-ascending
// "tower" of generators on the base's side of the algebra; the engine
// commutes every other letter inward.
class StateWord {
public:
    StateWord() = default;
    explicit StateWord(std::vector<Generator> letters) : letters_(std::move(letters)) {}

    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    const std::vector<Generator>& letters() const { return letters_; }
    // Weight shift relative to the base weight.
    HalfInt shift() const;

    StateWord cons(Generator g) const;
    StateWord tail() const;
    // True iff o.letters() is a suffix of letters().
    bool ends_with(const StateWord& o) const;

    bool operator==(const StateWord& o) const { return letters_ == o.letters_; }
    bool operator<(const StateWord& o) const;

    std::string str() const;  // "G[-1/2]*G[3/2] v", or "v"

private:
    std::vector<Generator> letters_;
};

class StateVector {
public:
    StateVector() = default;
    explicit StateVector(const StateWord& w) { add(w, Scalar(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<StateWord, Scalar>& terms() const { return terms_; }
    void add(const StateWord& w, const Scalar& c);
    Scalar coeff(const StateWord& w) const;

    StateVector operator-() const;
    StateVector operator+(const StateVector& o) const;
    StateVector operator-(const StateVector& o) const;
    StateVector& operator+=(const StateVector& o);
    bool operator==(const StateVector& o) const { return terms_ == o.terms_; }

    std::string str() const;

private:
    std::map<StateWord, Scalar> terms_;
};

StateVector operator*(const Scalar& c, const StateVector& v);

// Oriented reduction: head applied to the literal target word rewrites to
// replacement. Replacement words must be strictly shorter than 1 + |target|.
struct Rule {
    Generator head;
    StateWord target;
    StateVector replacement;
};

// A cyclic vector with eigenvalue data, named base vectors, and a
// deterministic rule table. Base vectors are words built one generator at a
// time from v; each carries a tower direction (+1 or -1) saying which half
// of the algebra spans new words above it. The root v accepts towers of
// either sign.
class StateSpace {
public:
    StateSpace(Scalar base_weight, Scalar central)
        : base_weight_(std::move(base_weight)), central_(std::move(central)) {
        bases_.push_back({StateWord{}, std::nullopt, StateWord{}, 0});
    }

    const Scalar& base_weight() const { return base_weight_; }
    const Scalar& central() const { return central_; }
    const std::vector<Rule>& rules() const { return rules_; }

    // Declares head·parent as a named base; parent must already be declared.
    // direction: +1 or -1. Returns the new base word.
    StateWord declare_base(Generator head, const StateWord& parent, int direction);

    // At most one rule per (head, target); re-adding replaces. Throws
    // std::invalid_argument if a replacement word is not strictly shorter
    // than 1 + |target|.
    void add_rule(Rule r);
    const StateVector* find_rule(Generator head, const StateWord& target) const;

    struct Base {
        StateWord word;
        std::optional<Generator> head;  // empty for the root
        StateWord parent;
        int direction;  // +1, -1, or 0 for the root
    };
    // Longest declared base word that is a suffix of s (the root always
    // matches); the rest of s is its tower.
    const Base& base_of(const StateWord& s) const;
    // Declared base whose (head, parent) matches, if any: the definition step.
    const Base* child_base(Generator head, const StateWord& parent) const;

    Scalar weight_of(const StateWord& w) const;
    // chat evaluates to the space's central scalar.
    Scalar eval(const Scalar& c) const;

private:
    Scalar base_weight_;
    Scalar central_;
    std::vector<Rule> rules_;
    std::map<std::pair<std::vector<Generator>, std::vector<Generator>>, std::size_t> index_;
    std::vector<Base> bases_;
};

// Action of a single generator on a state word:
//   1. a matching rule fires (its replacement is weight-checked);
//   2. L_0 acts by the word's weight; every other L-mode is routed through
//      its odd-mode factorization, so only G letters ever enter words;
//   3. a declared child base absorbs the letter (definition step);
//   4. a letter that is irreducible on the word's tail is appended to the
//      tower verbatim; one that reduces there is pushed through the tower
//      head with bracket corrections, except when the bracket mode's own
//      factorization would recreate the product (the word is then normal);
//   5. at a base, letters on the opposite side unfold its definition, and
//      letters at least as heavy as its head stay put.
StateVector act_generator(Generator g, const StateWord& s, const StateSpace& space);

// Linear / multiplicative extension: monomial factors apply right-to-left.
StateVector act_element(const Element& e, const StateVector& vec, const StateSpace& space);
StateVector act_element(const Element& e, const StateWord& s, const StateSpace& space);

// True iff operator applied to source reduces exactly to expected.
bool derive(const StateSpace& space, const Element& op, const StateWord& source,
            const StateVector& expected);

struct RewriteReport {
    // reachable states grouped by weight shift relative to the base weight
    std::map<HalfInt, std::set<StateWord>> states_by_shift;
    std::vector<std::string> failures;
    int depth = 0;
    bool ok() const { return failures.empty(); }
    std::size_t state_count() const;
    std::string str() const;
};

// Bounded verification that the rule table defines a module action: all
// words over gens of length <= depth applied to seeds, then the super-
// commutator identity on every pair at every reachable state.
RewriteReport check_representation(const StateSpace& space, const std::vector<Generator>& gens,
                                   const std::vector<StateWord>& seeds, int depth);

}  // namespace nscas
