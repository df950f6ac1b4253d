#include "nscas/rewrite.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "nscas/errors.hpp"

namespace nscas {

// --- StateWord / StateVector ----------------------------------------------

HalfInt StateWord::shift() const {
    std::int64_t doubled = 0;
    for (Generator g : letters_) doubled += g.index().doubled();
    return HalfInt::halves(doubled);
}

StateWord StateWord::cons(Generator g) const {
    std::vector<Generator> ls;
    ls.reserve(letters_.size() + 1);
    ls.push_back(g);
    ls.insert(ls.end(), letters_.begin(), letters_.end());
    return StateWord(std::move(ls));
}

StateWord StateWord::tail() const {
    return StateWord(std::vector<Generator>(letters_.begin() + 1, letters_.end()));
}

bool StateWord::ends_with(const StateWord& o) const {
    if (o.letters_.size() > letters_.size()) return false;
    return std::equal(o.letters_.rbegin(), o.letters_.rend(), letters_.rbegin());
}

bool StateWord::operator<(const StateWord& o) const {
    if (letters_.size() != o.letters_.size()) return letters_.size() < o.letters_.size();
    return letters_ < o.letters_;
}

std::string StateWord::str() const {
    if (letters_.empty()) return "v";
    std::ostringstream os;
    for (Generator g : letters_) os << g.str() << "*";
    std::string s = os.str();
    s.back() = ' ';
    return s + "v";
}

void StateVector::add(const StateWord& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar StateVector::coeff(const StateWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

StateVector StateVector::operator-() const {
    StateVector r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

StateVector StateVector::operator+(const StateVector& o) const {
    StateVector r = *this;
    r += o;
    return r;
}

StateVector StateVector::operator-(const StateVector& o) const { return *this + (-o); }

StateVector& StateVector::operator+=(const StateVector& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

StateVector operator*(const Scalar& c, const StateVector& v) {
    StateVector r;
    for (const auto& [w, k] : v.terms()) r.add(w, c * k);
    return r;
}

std::string StateVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Scalar shown = c;
        bool negative = false;
        if (c.is_rational() && c.rational_value() < 0) {
            negative = true;
            shown = -c;
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (shown == Scalar(1)) {
            os << w.str();
        } else {
            os << "(" << shown.str() << ")*" << w.str();
        }
    }
    return os.str();
}

// --- StateSpace -----------------------------------------------------------

StateWord StateSpace::declare_base(Generator head, const StateWord& parent, int direction) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("base direction must be +1 or -1");
    const Base* p = nullptr;
    for (const Base& b : bases_)
        if (b.word == parent) p = &b;
    if (!p) throw std::invalid_argument("parent base not declared: " + parent.str());
    StateWord word = parent.cons(head);
    for (const Base& b : bases_)
        if (b.word == word) throw std::invalid_argument("base already declared: " + word.str());
    bases_.push_back({word, head, parent, direction});
    return word;
}

void StateSpace::add_rule(Rule r) {
    for (const auto& [w, c] : r.replacement.terms()) {
        if (w.size() >= 1 + r.target.size())
            throw std::invalid_argument("rule replacement word " + w.str() +
                                        " not shorter than head * target");
    }
    auto key = std::pair(std::vector<Generator>{r.head}, r.target.letters());
    auto it = index_.find(key);
    if (it != index_.end()) {
        rules_[it->second] = std::move(r);
        return;
    }
    index_.emplace(std::move(key), rules_.size());
    rules_.push_back(std::move(r));
}

const StateVector* StateSpace::find_rule(Generator head, const StateWord& target) const {
    auto it = index_.find(std::pair(std::vector<Generator>{head}, target.letters()));
    if (it == index_.end()) return nullptr;
    return &rules_[it->second].replacement;
}

const StateSpace::Base& StateSpace::base_of(const StateWord& s) const {
    const Base* best = &bases_.front();  // root, empty word
    for (const Base& b : bases_)
        if (b.word.size() > best->word.size() && s.ends_with(b.word)) best = &b;
    return *best;
}

const StateSpace::Base* StateSpace::child_base(Generator head, const StateWord& parent) const {
    for (const Base& b : bases_)
        if (b.head && *b.head == head && b.parent == parent) return &b;
    return nullptr;
}

Scalar StateSpace::weight_of(const StateWord& w) const {
    Rational half(w.shift().doubled(), 2);
    half.canonicalize();
    return base_weight_ + Scalar(half);
}

Scalar StateSpace::eval(const Scalar& c) const {
    return c.substitute({{Var::chat, central_}});
}

// --- action ---------------------------------------------------------------

namespace {

struct DepthGuard {
    static thread_local int depth;
    DepthGuard() {
        if (++depth > 4000)
            throw RepresentationFailure("reduction did not terminate within the recursion bound");
    }
    ~DepthGuard() { --depth; }
};
thread_local int DepthGuard::depth = 0;

int index_sign(Generator g) { return g.index().doubled() > 0 ? 1 : -1; }

// Canonical position for letters of mixed sign: ascending |index| outward,
// negative-index letters outside positive ones on a tie.
bool mixed_less(Generator g, Generator a) {
    if (g.index().abs() != a.index().abs()) return g.index().abs() < a.index().abs();
    return index_sign(g) < index_sign(a);
}

// True when expand_L would split m into exactly the odd modes {g, a}.
bool splits_to(Generator m, Generator g, Generator a) {
    if (!m.is_L() || m.index().doubled() == 0) return false;
    std::int64_t n = m.index().as_integer();
    Generator r1(HalfInt::halves(n % 2 != 0 ? n : (n > 0 ? 1 : -1)));
    Generator r2(HalfInt::halves(n % 2 != 0 ? n : 2 * n - (n > 0 ? 1 : -1)));
    return (g == r1 && a == r2) || (g == r2 && a == r1);
}

StateVector act_vec(Generator g, const StateVector& v, const StateSpace& space) {
    StateVector out;
    for (const auto& [w, c] : v.terms()) out += c * act_generator(g, w, space);
    return out;
}

// L_m rewritten through odd modes: L_m = G_{m/2}^2 for odd m,
// (1/2){G_r, G_{m-r}} with r = sign(m)/2 for even m.  Routing every L
// through the G-action makes the even-odd commutation identities hold by
// construction, so the consistency check only tests the rule table.
StateVector expand_L(Generator g, const StateWord& s, const StateSpace& space) {
    std::int64_t m = g.index().as_integer();
    if (m % 2 != 0) {
        Generator r(HalfInt::halves(m));
        return act_vec(r, act_generator(r, s, space), space);
    }
    Generator r1(HalfInt::halves(m > 0 ? 1 : -1));
    Generator r2(HalfInt::halves(2 * m - (m > 0 ? 1 : -1)));
    StateVector sum = act_vec(r1, act_generator(r2, s, space), space) +
                      act_vec(r2, act_generator(r1, s, space), space);
    return Scalar(Rational(1, 2)) * sum;
}

StateVector apply_letter(Generator g, const StateWord& s, const StateSpace& space) {
    DepthGuard guard;
    if (const StateVector* rep = space.find_rule(g, s)) {
        // Weight bookkeeping guards against rule-table typos.
        Rational step(g.index().doubled(), 2);
        step.canonicalize();
        Scalar expect = space.weight_of(s) + Scalar(step);
        for (const auto& [w, c] : rep->terms()) {
            if (!(space.weight_of(w) == expect))
                throw WeightError("rule " + g.str() + " @ " + s.str() + " emits " + w.str() +
                                  " of wrong weight");
        }
        return *rep;
    }
    if (g.index().doubled() == 0) {
        StateVector out;
        out.add(s, space.weight_of(s));  // L_0 acts by the weight
        return out;
    }
    if (g.is_L()) return expand_L(g, s, space);
    const StateSpace::Base& base = space.base_of(s);
    std::size_t tower_len = s.size() - base.word.size();
    int dir = tower_len > 0 ? index_sign(s.letters().front()) : base.direction;
    if (dir == 0 || index_sign(g) == dir) {
        if (tower_len == 0) return StateVector(s.cons(g));
        Generator a = s.letters().front();
        StateWord rest = s.tail();
        StateVector inner = act_generator(g, rest, space);
        if (!space.child_base(g, rest) && inner == StateVector(rest.cons(g))) {
            // Odd square: g g rest = L_{2r} rest, reducible when a rule for
            // the square mode exists; otherwise the squared word is normal.
            Generator sq(g.index() + g.index());
            if (g == a && space.find_rule(sq, rest)) return apply_letter(sq, rest, space);
            return StateVector(s.cons(g));
        }
        // g reduces below a, so push it through, except when the bracket
        // L-mode has no rule and its odd-mode split is exactly {g, a}: its
        // expansion would recreate this product, and the value of the word
        // is not pinned down by the rule table.
        Bracket br = bracket(g, a);
        if (br.gen && !br.coeff.is_zero() && !space.find_rule(*br.gen, rest) &&
            splits_to(*br.gen, g, a))
            return StateVector(s.cons(g));
        Scalar sign(swap_sign(g, a));
        StateVector out = sign * act_vec(a, inner, space);
        if (br.gen && !br.coeff.is_zero())
            out += space.eval(br.coeff) * act_generator(*br.gen, rest, space);
        if (!br.central.is_zero()) {
            StateVector unit;
            unit.add(rest, space.eval(br.central * Scalar::variable(Var::chat)));
            out += unit;
        }
        return out;
    }
    // Opposite side: push the letter toward the base.
    if (tower_len > 0) {
        // Probe below the tower head: if g is irreducible there and sits
        // before the head in canonical order, the word is already normal.
        Generator a = s.letters().front();
        StateWord rest = s.tail();
        StateVector inner = act_generator(g, rest, space);
        // A definition step also returns a cons, but its result is a declared
        // base carrying rules, so it does not count as inert.
        if (mixed_less(g, a) && !space.child_base(g, rest) &&
            inner == StateVector(rest.cons(g)))
            return StateVector(s.cons(g));
        Scalar sign(swap_sign(g, a));
        StateVector out = sign * act_vec(a, inner, space);
        Bracket br = bracket(g, a);
        if (br.gen && !br.coeff.is_zero())
            out += space.eval(br.coeff) * act_generator(*br.gen, rest, space);
        if (!br.central.is_zero()) {
            StateVector unit;
            unit.add(rest, space.eval(br.central * Scalar::variable(Var::chat)));
            out += unit;
        }
        return out;
    }
    if (space.child_base(g, base.word)) return StateVector(s.cons(g));  // definition step
    if (!base.head) return StateVector(s.cons(g));                      // root
    // A letter at least as heavy as the base's head stays put as an
    // opposite-direction tower letter; unfolding it would ping-pong.
    if (!(g.index().abs() < base.head->index().abs())) return StateVector(s.cons(g));
    // Unfold the base definition: s = head * parent.
    Scalar sign(swap_sign(g, *base.head));
    StateVector out = sign * act_vec(*base.head, act_generator(g, base.parent, space), space);
    Bracket br = bracket(g, *base.head);
    if (br.gen && !br.coeff.is_zero())
        out += space.eval(br.coeff) * act_generator(*br.gen, base.parent, space);
    if (!br.central.is_zero()) {
        StateVector unit;
        unit.add(base.parent, space.eval(br.central * Scalar::variable(Var::chat)));
        out += unit;
    }
    return out;
}

}  // namespace

StateVector act_generator(Generator g, const StateWord& s, const StateSpace& space) {
    return apply_letter(g, s, space);
}

StateVector act_element(const Element& e, const StateVector& vec, const StateSpace& space) {
    StateVector out;
    for (const auto& [m, c] : e.terms()) {
        StateVector acc = vec;
        std::vector<Generator> ls = m.letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) acc = act_vec(*it, acc, space);
        out += space.eval(c) * acc;
    }
    return out;
}

StateVector act_element(const Element& e, const StateWord& s, const StateSpace& space) {
    return act_element(e, StateVector(s), space);
}

bool derive(const StateSpace& space, const Element& op, const StateWord& source,
            const StateVector& expected) {
    return (act_element(op, source, space) - expected).is_zero();
}

// --- representation check -------------------------------------------------

std::size_t RewriteReport::state_count() const {
    std::size_t n = 0;
    for (const auto& [k, v] : states_by_shift) n += v.size();
    return n;
}

std::string RewriteReport::str() const {
    std::ostringstream os;
    os << "depth " << depth << ", " << state_count() << " reachable states\n";
    for (const auto& [shift, words] : states_by_shift) {
        os << "  weight base" << (shift.doubled() >= 0 ? "+" : "") << shift.str() << ": dim "
           << words.size() << "\n";
    }
    if (failures.empty()) {
        os << "  all super-commutator identities hold\n";
    } else {
        for (const auto& f : failures) os << "  FAIL " << f << "\n";
    }
    return os.str();
}

RewriteReport check_representation(const StateSpace& space, const std::vector<Generator>& gens,
                                   const std::vector<StateWord>& seeds, int depth) {
    RewriteReport report;
    report.depth = depth;
    std::set<StateWord> reachable(seeds.begin(), seeds.end());
    std::set<StateWord> frontier = reachable;
    for (int d = 0; d < depth; ++d) {
        std::set<StateWord> next;
        for (const StateWord& s : frontier) {
            for (Generator g : gens) {
                StateVector r;
                try {
                    r = act_generator(g, s, space);
                } catch (const WeightError& e) {
                    report.failures.push_back(e.what());
                    continue;
                } catch (const RepresentationFailure& e) {
                    report.failures.push_back(g.str() + " @ " + s.str() + ": " + e.what());
                    continue;
                }
                for (const auto& [w, c] : r.terms())
                    if (reachable.insert(w).second) next.insert(w);
            }
        }
        frontier = std::move(next);
    }
    for (const StateWord& w : reachable) report.states_by_shift[w.shift()].insert(w);
    for (const StateWord& s : reachable) {
        for (Generator a : gens) {
            for (Generator b : gens) {
                try {
                    StateVector lhs = act_vec(a, act_generator(b, s, space), space);
                    Scalar sign(swap_sign(a, b));
                    lhs = lhs - sign * act_vec(b, act_generator(a, s, space), space);
                    StateVector rhs = act_element(Element::from_bracket(bracket(a, b)), s, space);
                    if (!(lhs == rhs)) {
                        report.failures.push_back("[" + a.str() + "," + b.str() + "] @ " + s.str() +
                                                  ": got " + (lhs - rhs).str());
                    }
                } catch (const WeightError& e) {
                    report.failures.push_back(e.what());
                } catch (const RepresentationFailure& e) {
                    report.failures.push_back("[" + a.str() + "," + b.str() + "] @ " + s.str() +
                                              ": " + e.what());
                }
            }
        }
    }
    return report;
}

}  // namespace nscas
