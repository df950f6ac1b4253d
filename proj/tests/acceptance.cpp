// Acceptance gate: one line per criterion, exit nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "nscas/checks.hpp"
#include "nscas/errors.hpp"
#include "nscas/verma.hpp"

using namespace nscas;

namespace {

int g_failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::printf("criterion %2d: %s  %s\n", n, ok ? "pass" : "FAIL", what.c_str());
    if (!ok) ++g_failures;
}

bool check_passes(const char* id) { return run_check(id).passed(); }

StateVector single(const StateWord& w, const Scalar& c) {
    StateVector v;
    v.add(w, c);
    return v;
}

Element random_element(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), nletters(0, 4), idx(-7, 7),
        num(-9, 9), den(1, 4), pick_var(0, 5);
    Element out;
    for (int t = nterms(rng); t-- > 0;) {
        Rational c(num(rng), den(rng));
        c.canonicalize();
        Scalar coeff(c);
        if (pick_var(rng) == 0) coeff = coeff * Scalar::variable(Var::mu);
        if (pick_var(rng) == 1) coeff = coeff * Scalar::variable(Var::chat);
        Element term(coeff);
        for (int l = nletters(rng); l-- > 0;) {
            int d = idx(rng);
            if (d == 0) d = 2;
            term = term * Element(Generator(HalfInt::halves(d)));
        }
        out += term;
    }
    return out;
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;

    {  // 1: super-Jacobi, |index| <= 6, under 10 seconds
        auto t0 = clock::now();
        bool ok = check_passes("jacobi.sweep");
        double secs = std::chrono::duration<double>(clock::now() - t0).count();
        report(1, ok && secs < 10.0,
               "super-Jacobi on all triples with |index| <= 6 (" +
                   std::to_string(secs).substr(0, 5) + " s)");
    }

    {  // 2: bracket table sample with both literal anchor values
        Bracket ll = bracket(Generator::L(2), Generator::L(-2));
        bool a1 = ll.gen == Generator::L(0) && ll.coeff == Scalar(-4) &&
                  ll.central == Scalar(Rational(1, 2));
        Bracket gg = bracket(Generator::G(3), Generator::G(-3));
        bool a2 = gg.gen == Generator::L(0) && gg.coeff == Scalar(2) &&
                  gg.central == Scalar(Rational(2, 3));
        report(2, check_passes("bracket.table") && a1 && a2,
               "bracket table sample incl. [L[2],L[-2]] = -4*L[0]+(1/2)*chat and "
               "[G[3/2],G[-3/2]] = 2*L[0]+(2/3)*chat");
    }

    report(3, check_passes("lemma2.i") && check_passes("lemma2.ii"),
           "both kernel identities congruent to 0 mod {L[1],G[1/2]} / {L[-1],G[-1/2]}");

    {  // 4: quotient and its root set
        auto [quot, ideal] =
            reduce_trailing(parse_element("L[-1]*G[-1/2]*(1/2*L[1]*G[1/2]-G[3/2])"),
                            OrderSpec::trailing({Generator::L(-1), Generator::G(-1)}));
        Scalar mu = Scalar::variable(Var::mu);
        Scalar weight = mu + Scalar(1);
        Scalar quad = Scalar(2) * weight * weight - Scalar(3) * weight;
        bool roots = quad.substitute({{Var::mu, Scalar(-1)}}).is_zero() &&
                     quad.substitute({{Var::mu, Scalar(Rational(1, 2))}}).is_zero() &&
                     !quad.substitute({{Var::mu, Scalar(2)}}).is_zero() &&
                     !quad.substitute({{Var::mu, Scalar(0)}}).is_zero();
        report(4, quot == parse_element("2*L[0]^2-3*L[0]") && roots,
               "quotient 2*L[0]^2 - 3*L[0]; induced quadratic vanishes exactly at "
               "mu in {-1, 1/2}");
    }

    report(5, check_passes("claim.eq7") && check_passes("claim.eq8"),
           "operator congruences mod U(NS)L[-1] and mod U(NS)L[1]");

    {  // 6: derived eigenvalues equal the closed forms as canonical Scalars
        CheckReport tau = run_check("claim.tau"), taup = run_check("claim.tauprime");
        bool ok = tau.passed() && taup.passed() &&
                  parse_scalar(tau.machine) == parse_scalar("(mu+1)*(2*mu-1)/(mu-1)") &&
                  parse_scalar(taup.machine) == parse_scalar("(mu-1)*(2*mu+1)/(mu+1)");
        report(6, ok, "tau = (mu+1)(2mu-1)/(mu-1), tau' = (mu-1)(2mu+1)/(mu+1)");
    }

    {  // 7: central congruences and the p/q closed forms
        Scalar chat = Scalar::variable(Var::chat);
        Scalar p_form = Scalar::variable(Var::tau) + Scalar(Rational(2, 3)) * chat;
        Scalar q_form = Scalar::variable(Var::taup) + Scalar(Rational(2, 3)) * chat;
        Scalar dp = (Scalar::variable(Var::p) - p_form).substitute({{Var::p, p_form}});
        Scalar dq = (Scalar::variable(Var::q) - q_form).substitute({{Var::q, q_form}});
        bool ok = check_passes("lemma6.central") && check_passes("lemma6.p") &&
                  check_passes("lemma6.q") && dp.is_zero() && dq.is_zero();
        report(7, ok, "central congruences; p - tau - (2/3)chat and q - tau' - "
                      "(2/3)chat normalize to 0");
    }

    {  // 8: the 24 module formulas plus the corrupted-rule negative control
        bool ok = true;
        for (int i = 1; i <= 24; ++i) {
            char id[16];
            std::snprintf(id, sizeof id, "lemma6.f%02d", i);
            ok = ok && check_passes(id);
        }
        bool control_failed = false;
        try {
            StateSpace sp(Scalar::variable(Var::mu) - Scalar(Rational(1, 2)),
                          Scalar::variable(Var::chat));
            StateWord v;
            StateWord x = sp.declare_base(Generator::G(3), v, +1);
            StateWord y = sp.declare_base(Generator::G(-1), x, +1);
            StateWord z = sp.declare_base(Generator::G(-3), y, -1);
            sp.add_rule({Generator::G(1), v, StateVector{}});
            sp.add_rule({Generator::G(-1), y, StateVector{}});
            sp.add_rule({Generator::G(3), z, single(x, Scalar::variable(Var::q))});
            control_failed = !derive(sp, Element(Generator::G(3)), z,
                                     single(y, Scalar::variable(Var::q)));
        } catch (const WeightError&) {
            control_failed = true;
        }
        report(8, ok && control_failed,
               "all 24 formulas derive; corrupted rule (G[3/2], z) -> q*x is rejected");
    }

    {  // 9: closure at depth 4 with 0 failures, weights on the lattice
        NModulePreset n = n_module_preset();
        RewriteReport rep = check_representation(
            n.space, {Generator::G(1), Generator::G(-1), Generator::G(3), Generator::G(-3)},
            {n.x, n.y, n.z, n.h}, 4);
        Scalar base = Scalar::variable(Var::mu) - Scalar(Rational(1, 2));
        bool lattice = true;
        for (const auto& [shift, words] : rep.states_by_shift)
            for (const StateWord& w : words) {
                Scalar diff = n.space.weight_of(w) - base;
                if (!diff.is_rational() ||
                    diff.rational_value() * 2 != Rational(shift.doubled()))
                    lattice = false;
            }
        report(9, rep.ok() && lattice,
               "closure depth 4: " + std::to_string(rep.failures.size()) +
                   " commutator failures over " + std::to_string(rep.state_count()) +
                   " states; weights in mu - 1/2 + (1/2)Z: " + (lattice ? "yes" : "no"));
    }

    report(10, check_passes("verma.dims"),
           "levels 0..4 dims [1,1,1,2,3,4,5,7,10], enumeration and q-series agree");

    {  // 11: symbolic rep check through level 3 plus negative control
        VermaReport rep =
            rep_check(VermaParams::symbolic(), HalfInt::whole(3), HalfInt::halves(5));
        VermaParams params = VermaParams::symbolic();
        VermaVector hw{PartitionMonomial{}};
        VermaVector lhs =
            act(Generator::G(3), act(Generator::G(-3), hw, params), params) +
            act(Generator::G(-3), act(Generator::G(3), hw, params), params);
        // wrong central coefficient (4r^2+1)/12 = 5/6 at r = 3/2
        VermaVector bad = act_element(parse_element("2*L[0]+5/6*chat"), hw, params);
        report(11, rep.ok() && !(lhs == bad),
               "representation property symbolic in h, chat through level 3, |k| <= 5/2; "
               "corrupted central term detected");
    }

    report(12, check_passes("genset.principal"),
           "principal generators reach every |index| <= 5 mode plus the central scalar");

    {  // 13: parser round trip on 1000 random canonical elements
        std::mt19937 rng(2024);
        bool ok = true;
        for (int i = 0; i < 1000 && ok; ++i) {
            Element e = random_element(rng);
            ok = parse_element(e.str()) == e;
        }
        report(13, ok, "render -> parse -> elaborate identity on 1000 random elements");
    }

    std::printf("%d of 13 criteria failed\n", g_failures);
    return g_failures ? 1 : 0;
}
