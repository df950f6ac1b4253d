#include "nscas/enveloping.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace nscas {

// --- Monomial -------------------------------------------------------------

Monomial Monomial::from_letters(const std::vector<Generator>& letters) {
    std::vector<Generator> ls = letters;
    // Eager odd-square rewriting: G_r G_r = L_{2r} (the delta term needs
    // r + s = 0, impossible for r = s half-odd).
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            if (ls[i] == ls[i + 1] && ls[i].odd()) {
                Generator merged(ls[i].index() + ls[i].index());
                ls[i] = merged;
                ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
                break;
            }
        }
    }
    Monomial m;
    for (Generator g : ls) {
        if (!m.word_.empty() && m.word_.back().first == g) {
            m.word_.back().second += 1;
        } else {
            m.word_.push_back({g, 1});
        }
    }
    return m;
}

std::vector<Generator> Monomial::letters() const {
    std::vector<Generator> out;
    for (const auto& [g, e] : word_)
        for (int i = 0; i < e; ++i) out.push_back(g);
    return out;
}

std::size_t Monomial::length() const {
    std::size_t n = 0;
    for (const auto& [g, e] : word_) n += static_cast<std::size_t>(e);
    return n;
}

HalfInt Monomial::degree() const {
    std::int64_t doubled = 0;
    for (const auto& [g, e] : word_) doubled += e * g.index().doubled();
    return HalfInt::halves(doubled);
}

bool Monomial::operator<(const Monomial& o) const {
    HalfInt da = degree(), db = o.degree();
    if (da != db) return da < db;
    auto key = [](const Monomial& m) {
        std::vector<std::pair<std::int64_t, int>> k;
        for (const auto& [g, e] : m.word_) k.push_back({g.index().doubled(), e});
        return k;
    };
    return key(*this) < key(o);
}

std::string Monomial::str() const {
    if (word_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [g, e] : word_) {
        if (!first) os << "*";
        os << g.str();
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

// --- Element --------------------------------------------------------------

Element Element::from_bracket(const Bracket& b) {
    Element e;
    if (b.gen && !b.coeff.is_zero()) e.add(Monomial(*b.gen), b.coeff);
    if (!b.central.is_zero()) e.add(Monomial{}, b.central * Scalar::variable(Var::chat));
    return e;
}

void Element::add(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Element Element::operator-() const {
    Element r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Element Element::operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
}

Element Element::operator-(const Element& o) const {
    Element r = *this;
    r -= o;
    return r;
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

Element operator*(const Scalar& c, const Element& e) {
    Element r;
    for (const auto& [m, k] : e.terms()) r.add(m, c * k);
    return r;
}

Element multiply(const Element& x, const Element& y) {
    Element r;
    for (const auto& [mx, cx] : x.terms()) {
        for (const auto& [my, cy] : y.terms()) {
            std::vector<Generator> ls = mx.letters();
            std::vector<Generator> ly = my.letters();
            ls.insert(ls.end(), ly.begin(), ly.end());
            r.add(Monomial::from_letters(ls), cx * cy);
        }
    }
    return r;
}

Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Scalar shown = c;
        bool negative = false;
        // A rendered coefficient leads with '-' only when the whole scalar
        // can be negated without changing shape; fold that into the sum.
        if (std::string cs = c.str(); !cs.empty() && cs[0] == '-') {
            negative = true;
            shown = -c;
        }
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (m.is_unit()) {
            os << shown.str();
        } else if (shown == Scalar(1)) {
            os << m.str();
        } else {
            os << shown.str() << "*" << m.str();
        }
    }
    return os.str();
}

// --- OrderSpec ------------------------------------------------------------

OrderSpec OrderSpec::trailing(std::vector<Generator> gs) {
    for (std::size_t i = 0; i < gs.size(); ++i)
        for (std::size_t j = i + 1; j < gs.size(); ++j)
            assert(!(gs[i] == gs[j]) && "trailing list must be duplicate-free");
    return OrderSpec(std::move(gs));
}

bool OrderSpec::is_trailing(Generator g) const {
    return std::find(trailing_.begin(), trailing_.end(), g) != trailing_.end();
}

bool OrderSpec::less(Generator a, Generator b) const {
    auto rank = [&](Generator g) -> std::pair<int, std::int64_t> {
        auto it = std::find(trailing_.begin(), trailing_.end(), g);
        if (it != trailing_.end()) return {1, it - trailing_.begin()};
        return {0, g.index().doubled()};
    };
    return rank(a) < rank(b);
}

// --- straightening --------------------------------------------------------

Element normal_form(const Element& x, const OrderSpec& order) {
    Element result;
    std::deque<std::pair<std::vector<Generator>, Scalar>> work;
    for (const auto& [m, c] : x.terms()) work.push_back({m.letters(), c});
    while (!work.empty()) {
        auto [ls, c] = work.front();
        work.pop_front();
        bool rewritten = false;
        for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
            Generator a = ls[i], b = ls[i + 1];
            if (a == b) {
                if (!a.odd()) continue;
                // odd square
                std::vector<Generator> merged(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
                merged.push_back(Generator(a.index() + a.index()));
                merged.insert(merged.end(), ls.begin() + static_cast<std::ptrdiff_t>(i) + 2, ls.end());
                work.push_back({std::move(merged), c});
                rewritten = true;
                break;
            }
            if (order.less(a, b)) continue;
            // Out-of-order pair: ab = sign * ba + [a,b].
            std::vector<Generator> swapped = ls;
            std::swap(swapped[i], swapped[i + 1]);
            Scalar sc = swap_sign(a, b) < 0 ? -c : c;
            work.push_back({std::move(swapped), sc});
            Bracket br = bracket(a, b);
            if (br.gen && !br.coeff.is_zero()) {
                std::vector<Generator> spliced(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
                spliced.push_back(*br.gen);
                spliced.insert(spliced.end(), ls.begin() + static_cast<std::ptrdiff_t>(i) + 2, ls.end());
                work.push_back({std::move(spliced), c * br.coeff});
            }
            if (!br.central.is_zero()) {
                std::vector<Generator> dropped(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(i));
                dropped.insert(dropped.end(), ls.begin() + static_cast<std::ptrdiff_t>(i) + 2, ls.end());
                work.push_back({std::move(dropped), c * br.central * Scalar::variable(Var::chat)});
            }
            rewritten = true;
            break;
        }
        if (!rewritten) result.add(Monomial::from_letters(ls), c);
    }
    return result;
}

std::pair<Element, Element> reduce_trailing(const Element& x, const OrderSpec& order) {
    Element nf = normal_form(x, order);
    Element quotient, ideal;
    for (const auto& [m, c] : nf.terms()) {
        if (!m.is_unit() && order.is_trailing(m.word().back().first)) {
            ideal.add(m, c);
        } else {
            quotient.add(m, c);
        }
    }
    return {quotient, ideal};
}

bool congruent_mod(const Element& x, const Element& y, const std::vector<Generator>& trailing) {
    auto [quotient, ideal] = reduce_trailing(x - y, OrderSpec::trailing(trailing));
    return quotient.is_zero();
}

}  // namespace nscas
