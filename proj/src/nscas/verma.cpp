#include "nscas/verma.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "nscas/errors.hpp"

namespace nscas {

// --- PartitionMonomial ----------------------------------------------------

PartitionMonomial::PartitionMonomial(std::vector<HalfInt> g_parts,
                                     std::vector<std::int64_t> l_parts)
    : g_parts_(std::move(g_parts)), l_parts_(std::move(l_parts)) {
    for (std::size_t i = 0; i < g_parts_.size(); ++i) {
        assert(g_parts_[i].is_half_odd() && g_parts_[i].doubled() > 0);
        assert(i == 0 || g_parts_[i - 1] > g_parts_[i]);
    }
    for (std::size_t i = 0; i < l_parts_.size(); ++i) {
        assert(l_parts_[i] > 0);
        assert(i == 0 || l_parts_[i - 1] >= l_parts_[i]);
    }
}

HalfInt PartitionMonomial::level() const {
    std::int64_t doubled = 0;
    for (HalfInt g : g_parts_) doubled += g.doubled();
    for (std::int64_t l : l_parts_) doubled += 2 * l;
    return HalfInt::halves(doubled);
}

std::vector<Generator> PartitionMonomial::letters() const {
    std::vector<Generator> out;
    for (HalfInt g : g_parts_) out.push_back(Generator(-g));
    for (std::int64_t l : l_parts_) out.push_back(Generator::L(-l));
    return out;
}

namespace {

// Sequence order: shorter prefix first, then larger leading part first.
template <typename T>
int seq_cmp(const std::vector<T>& a, const std::vector<T>& b) {
    for (std::size_t i = 0;; ++i) {
        if (i == a.size() && i == b.size()) return 0;
        if (i == a.size()) return -1;
        if (i == b.size()) return 1;
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
}

}  // namespace

bool PartitionMonomial::operator<(const PartitionMonomial& o) const {
    if (level() != o.level()) return level() < o.level();
    int c = seq_cmp(g_parts_, o.g_parts_);
    if (c != 0) return c < 0;
    return seq_cmp(l_parts_, o.l_parts_) < 0;
}

std::string PartitionMonomial::str() const {
    if (g_parts_.empty() && l_parts_.empty()) return "|h>";
    std::ostringstream os;
    for (HalfInt g : g_parts_) os << "G[-" << g.str() << "]*";
    for (std::size_t i = 0; i < l_parts_.size();) {
        std::size_t j = i;
        while (j < l_parts_.size() && l_parts_[j] == l_parts_[i]) ++j;
        os << "L[-" << l_parts_[i] << "]";
        if (j - i > 1) os << "^" << (j - i);
        os << "*";
        i = j;
    }
    std::string s = os.str();
    s.back() = ' ';
    return s + "|h>";
}

// --- VermaVector ----------------------------------------------------------

void VermaVector::add(const PartitionMonomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

VermaVector VermaVector::operator+(const VermaVector& o) const {
    VermaVector r = *this;
    r += o;
    return r;
}

VermaVector VermaVector::operator-(const VermaVector& o) const {
    VermaVector r = *this;
    for (const auto& [m, c] : o.terms_) r.add(m, -c);
    return r;
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

VermaVector operator*(const Scalar& c, const VermaVector& v) {
    VermaVector r;
    for (const auto& [m, k] : v.terms()) r.add(m, c * k);
    return r;
}

std::string VermaVector::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")*" << m.str();
        first = false;
    }
    return os.str();
}

// --- basis enumeration ----------------------------------------------------

namespace {

void enum_l_parts(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& acc,
                  const std::vector<HalfInt>& g_acc, std::vector<PartitionMonomial>& out) {
    if (remaining == 0) {
        out.emplace_back(g_acc, acc);
        return;
    }
    for (std::int64_t part = std::min(remaining, max_part); part >= 1; --part) {
        acc.push_back(part);
        enum_l_parts(remaining - part, part, acc, g_acc, out);
        acc.pop_back();
    }
}

void enum_g_parts(std::int64_t remaining_doubled, std::int64_t max_doubled,
                  std::vector<HalfInt>& g_acc, std::vector<PartitionMonomial>& out) {
    if (remaining_doubled % 2 == 0) {
        std::vector<std::int64_t> l_acc;
        enum_l_parts(remaining_doubled / 2, remaining_doubled / 2 + 1, l_acc, g_acc, out);
    }
    // next strictly smaller half-odd part
    std::int64_t start = std::min(remaining_doubled, max_doubled);
    if (start % 2 == 0) --start;
    for (std::int64_t d = start; d >= 1; d -= 2) {
        g_acc.push_back(HalfInt::halves(d));
        enum_g_parts(remaining_doubled - d, d - 2, g_acc, out);
        g_acc.pop_back();
    }
}

}  // namespace

std::vector<PartitionMonomial> basis(HalfInt level) {
    assert(level.doubled() >= 0);
    std::vector<PartitionMonomial> out;
    std::vector<HalfInt> g_acc;
    enum_g_parts(level.doubled(), level.doubled(), g_acc, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t dim(HalfInt level) { return basis(level).size(); }

// --- action ---------------------------------------------------------------

namespace {

using Letters = std::vector<Generator>;

VermaVector act_word(Generator g, const Letters& w, const VermaParams& params);

VermaVector act_on(Generator g, const VermaVector& v, const VermaParams& params) {
    VermaVector out;
    for (const auto& [m, c] : v.terms()) out += c * act_word(g, m.letters(), params);
    return out;
}

PartitionMonomial mono_from_letters(const Letters& ls) {
    std::vector<HalfInt> g_parts;
    std::vector<std::int64_t> l_parts;
    for (Generator g : ls) {
        if (g.is_G()) {
            g_parts.push_back(-g.index());
        } else {
            l_parts.push_back(-g.index().as_integer());
        }
    }
    return PartitionMonomial(std::move(g_parts), std::move(l_parts));
}

// May g be consed in front of the canonical word? (G block, then L block.)
bool cons_ok(Generator g, const Letters& w) {
    if (g.index().doubled() >= 0) return false;
    if (w.empty()) return true;
    Generator a = w.front();
    if (g.is_G()) return a.is_L() || g.index() < a.index();
    return a.is_L() && g.index() <= a.index();
}

VermaVector act_word(Generator g, const Letters& w, const VermaParams& params) {
    VermaVector out;
    if (w.empty()) {
        if (g.index().doubled() > 0) return out;  // highest-weight annihilation
        if (g.index().doubled() == 0) {
            out.add(PartitionMonomial{}, params.h);
            return out;
        }
        out.add(mono_from_letters({g}), Scalar(1));
        return out;
    }
    if (cons_ok(g, w)) {
        Letters ls{g};
        ls.insert(ls.end(), w.begin(), w.end());
        out.add(mono_from_letters(ls), Scalar(1));
        return out;
    }
    Generator a = w.front();
    Letters rest(w.begin() + 1, w.end());
    if (g == a && g.odd()) {
        // G_{-r}^2 = L_{-2r}
        return act_word(Generator(g.index() + g.index()), rest, params);
    }
    Scalar sign(swap_sign(g, a));
    out = sign * act_on(a, act_word(g, rest, params), params);
    Bracket br = bracket(g, a);
    if (br.gen && !br.coeff.is_zero()) out += br.coeff * act_word(*br.gen, rest, params);
    if (!br.central.is_zero()) {
        VermaVector unit;
        unit.add(mono_from_letters(rest), br.central * params.central);
        out += unit;
    }
    return out;
}

}  // namespace

VermaVector act(Generator g, const PartitionMonomial& m, const VermaParams& params) {
    return act_word(g, m.letters(), params);
}

VermaVector act(Generator g, const VermaVector& vec, const VermaParams& params) {
    return act_on(g, vec, params);
}

VermaVector act_element(const Element& e, const VermaVector& vec, const VermaParams& params) {
    VermaVector out;
    for (const auto& [m, c] : e.terms()) {
        VermaVector acc = vec;
        std::vector<Generator> ls = m.letters();
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) acc = act_on(*it, acc, params);
        Scalar cc = c.substitute({{Var::chat, params.central}});
        out += cc * acc;
    }
    return out;
}

std::vector<std::vector<Scalar>> action_matrix(Generator g, HalfInt level,
                                               const VermaParams& params) {
    HalfInt target_level = level - g.index();
    std::vector<PartitionMonomial> src = basis(level);
    std::vector<PartitionMonomial> dst =
        target_level.doubled() >= 0 ? basis(target_level) : std::vector<PartitionMonomial>{};
    std::vector<std::vector<Scalar>> m(dst.size(), std::vector<Scalar>(src.size(), Scalar(0)));
    for (std::size_t j = 0; j < src.size(); ++j) {
        VermaVector img = act(g, src[j], params);
        for (const auto& [mon, c] : img.terms()) {
            auto it = std::find(dst.begin(), dst.end(), mon);
            assert(it != dst.end());
            m[static_cast<std::size_t>(it - dst.begin())][j] = c;
        }
    }
    return m;
}

VermaReport rep_check(const VermaParams& params, HalfInt max_level, HalfInt index_bound) {
    VermaReport report;
    std::vector<Generator> gens;
    for (std::int64_t d = -index_bound.doubled(); d <= index_bound.doubled(); ++d)
        gens.push_back(Generator(HalfInt::halves(d)));
    std::vector<PartitionMonomial> vectors;
    for (std::int64_t d = 0; d <= max_level.doubled(); ++d)
        for (const auto& m : basis(HalfInt::halves(d))) vectors.push_back(m);
    report.vectors_checked = vectors.size();
    for (Generator a : gens) {
        for (Generator b : gens) {
            ++report.pairs_checked;
            Element br = Element::from_bracket(bracket(a, b));
            Scalar sign(swap_sign(a, b));
            for (const auto& u : vectors) {
                VermaVector uu(u);
                VermaVector lhs = act(a, act(b, uu, params), params) -
                                  sign * act(b, act(a, uu, params), params);
                VermaVector rhs = act_element(br, uu, params);
                if (!(lhs == rhs)) {
                    report.failures.push_back("[" + a.str() + "," + b.str() + "] @ " + u.str());
                }
            }
        }
    }
    return report;
}

}  // namespace nscas
