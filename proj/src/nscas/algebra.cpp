#include "nscas/algebra.hpp"

#include <deque>
#include <map>

namespace nscas {

// Defining relations:
//   [L_m, L_n] = (n - m) L_{m+n} + delta_{m+n,0} (m - m^3)/12 c
//   [L_m, G_r] = (r - m/2) G_{m+r}
//   [G_r, G_s] = 2 L_{r+s} + delta_{r+s,0} (4r^2 - 1)/12 c
// With the (n - m) and (r - m/2) structure constants, the super-Jacobi
// identity forces the L-L central term to carry the opposite sign from the
// (m^3 - m)/12 seen in the (m - n) convention; the G-G central sign is
// pinned by the even-odd relations.
Bracket bracket(Generator a, Generator b) {
    Bracket out{Scalar(0), std::nullopt, Scalar(0)};
    HalfInt sum = a.index() + b.index();
    if (a.is_L() && b.is_L()) {
        std::int64_t m = a.index().as_integer(), n = b.index().as_integer();
        Rational c(n - m);
        if (c != 0) {
            out.coeff = Scalar(c);
            out.gen = Generator(sum);
        }
        if (sum.doubled() == 0) {
            mpz_class mz(static_cast<long>(m));
            Rational cz(mz - mz * mz * mz, 12);
            cz.canonicalize();
            out.central = Scalar(cz);
        }
    } else if (a.is_L() && b.is_G()) {
        // (r - m/2) with r = b/2 halves and m = a/2 halves
        Rational c(2 * b.index().doubled() - a.index().doubled(), 4);
        c.canonicalize();
        if (c != 0) {
            out.coeff = Scalar(c);
            out.gen = Generator(sum);
        }
    } else if (a.is_G() && b.is_L()) {
        Bracket rev = bracket(b, a);
        out.coeff = -rev.coeff;
        out.gen = rev.gen;
        out.central = -rev.central;
    } else {
        out.coeff = Scalar(2);
        out.gen = Generator(sum);
        if (sum.doubled() == 0) {
            // (4r^2 - 1)/12 with r = doubled/2: (doubled^2 - 1)/12.
            mpz_class d(static_cast<long>(a.index().doubled()));
            Rational cz(d * d - 1, 12);
            cz.canonicalize();
            out.central = Scalar(cz);
        }
    }
    return out;
}

ClosureResult adjoint_closure(const std::set<Generator>& seeds, HalfInt index_bound) {
    ClosureResult res;
    std::deque<Generator> queue;
    for (Generator g : seeds) {
        if (g.index().abs() <= index_bound) {
            res.generators.insert(g);
            queue.push_back(g);
        }
    }
    // Brackets seen, keyed by their generator part: gen -> set of (coeff, chat)
    // pairs. Two entries with proportionally different chat parts certify that
    // a pure chat multiple lies in the span.
    std::map<Generator, std::set<std::pair<Scalar, Scalar>>> seen;
    auto visit_pair = [&](Generator a, Generator b) {
        Bracket br = bracket(a, b);
        if (br.gen && !br.coeff.is_zero()) {
            Generator g = *br.gen;
            if (g.index().abs() <= index_bound && !res.generators.contains(g)) {
                res.generators.insert(g);
                queue.push_back(g);
            }
            auto& entries = seen[g];
            for (const auto& [c0, z0] : entries) {
                // c0*gen + z0*chat and coeff*gen + central*chat: eliminate gen.
                if (!(z0 / c0 == br.central / br.coeff)) res.central_reached = true;
            }
            entries.insert({br.coeff, br.central});
        } else if (!br.central.is_zero()) {
            res.central_reached = true;  // bracket is a pure chat multiple
        }
    };
    while (!queue.empty()) {
        Generator a = queue.front();
        queue.pop_front();
        std::vector<Generator> snapshot(res.generators.begin(), res.generators.end());
        for (Generator b : snapshot) {
            visit_pair(a, b);
            visit_pair(b, a);
        }
    }
    return res;
}

}  // namespace nscas
