// Acceptance suite: reproduces every number the worked nodal-cubic example
// pins, plus the property batteries. One line per criterion; exit code 0
// only if all pass.

#include "oracles.hpp"
#include "wlab/birational.hpp"
#include "wlab/degeneration.hpp"
#include "wlab/parser.hpp"

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace wlab;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> XYZT{"x", "y", "z", "t"};
const std::vector<std::string> UV{"u", "v"};
const std::vector<std::string> ST{"s", "t"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = XYZ) {
    return parse_polynomial(text, vars);
}

int failures = 0;

void criterion(int number, const std::string& what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (") + e.what() + ")";
    }
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " — " << what << note
              << "\n";
    if (!ok) ++failures;
}

PlaneCurve nodal() { return PlaneCurve::make(P("y^2*z - x^2*z - x^3")); }
PlaneCurve cuspidal() { return PlaneCurve::make(P("y^2*z - x^3")); }

GenLinearSystem pencil(const PlaneCurve& C) {
    SheafRep sheaf = SheafRep::make(C, 1, Ideal(3, {P("x"), P("y")}));
    return GenLinearSystem::make(sheaf, {P("x"), P("y")});
}

ProjPoint Q() { return ProjPoint::make(Rat(0), Rat(0), Rat(1)); }

Cycle only(const ProjPoint& p, long m) {
    Cycle c;
    c.add(p, m);
    return c;
}

bool congruent_nonzero_multiple(const Polynomial& a, const Polynomial& b,
                                const Polynomial& modulus) {
    GroebnerBasis gb = groebner({modulus}, MonomialOrder::degrevlex());
    Polynomial na = normal_form(a, gb), nb = normal_form(b, gb);
    if (na.is_zero() || nb.is_zero()) return false;
    Rat ratio = na.leading(gb.order()).second / nb.leading(gb.order()).second;
    return ratio != 0 && (na - ratio * nb).is_zero();
}

FamilySystem family1() {
    auto p = [&](const std::string& s) { return parse_polynomial(s, XYZT); };
    return FamilySystem::make(p("y^2*z - x^3 - x^2*z - t^2*z^3"), {p("x"), p("y - t*z")},
                              {p("x"), p("y - t*z")});
}

FamilySystem family2(int c) {
    std::vector<std::string> vars{"x", "y", "z", "t", "c"};
    auto fix = [&](const std::string& text) {
        return parse_polynomial(text, vars)
            .substitute(4, Polynomial::constant(5, Rat(c)))
            .remove_variables(4, 1);
    };
    return FamilySystem::make(fix("y^2*z + (t-1)*x^2*z - x^3 - 2*c*t*y*z^2 + t^2*z^3"),
                              {fix("x - t*z"), fix("y - 2*c*t*z")},
                              {fix("x - t*z"), fix("y - 2*c*t*z")});
}

Ideal W_ab(long a, long b) {
    std::vector<Polynomial> gens{Rat(a) * P("u*v", UV) + Rat(b) * P("v^2", UV)};
    Ideal cube = maximal_power(2, 3);
    for (const auto& g : cube.generators()) gens.push_back(g);
    gens.push_back(P("v^2 - u^2 - u^3", UV));
    return Ideal(2, std::move(gens));
}

} // namespace

int main() {
    criterion(1, "nodal Weierstrass divisor: w ~ u^3 on the z chart, [W] = 6*(0:0:1)", [] {
        GenLinearSystem sys = pencil(nodal());
        WronskianResult w = wronskian(sys);
        const auto& [chart, wz] = w.per_chart[static_cast<std::size_t>(Chart::Z)];
        bool wronskian_ok = congruent_nonzero_multiple(wz, P("u^3", UV), chart.f);
        ChartIdeals ids{{Ideal(2), Ideal(2), Ideal(2)}};
        for (const auto& [c, poly] : w.per_chart)
            ids.charts[static_cast<std::size_t>(c.which)] = Ideal(2, {poly, c.f});
        return wronskian_ok && divisor_cycle(ids) == only(Q(), 6);
    });

    criterion(2, "Weierstrass cycle R(I_Q(1), eps_Q) = 4*(0:0:1)", [] {
        return weierstrass_cycle(pencil(nodal())) == only(Q(), 4);
    });

    criterion(3, "intrinsic scheme: transporter ideal = (u,v)^2 + (F), cycle 3*(0:0:1)", [] {
        IntrinsicScheme z = intrinsic_scheme(pencil(nodal()));
        Ideal expect(2, {P("u^2", UV), P("u*v", UV), P("v^2", UV), P("v^2 - u^2 - u^3", UV)});
        return ideal_equal(z.ideals[Chart::Z], expect) && z.cycle == only(Q(), 3);
    });

    criterion(4, "decomposition R = [Z] + defect^2 on the nodal and cuspidal cubics", [] {
        Verdict a = decomposition_identity_check(pencil(nodal()));
        Verdict b = decomposition_identity_check(pencil(cuspidal()));
        bool split_node = intrinsic_scheme(pencil(nodal())).cycle == only(Q(), 3) &&
                          defect(pencil(nodal()).sheaf(), 2) == only(Q(), 1);
        bool split_cusp = intrinsic_scheme(pencil(cuspidal())).cycle == only(Q(), 3) &&
                          defect(pencil(cuspidal()).sheaf(), 2) == only(Q(), 1);
        return a.ok && b.ok && split_node && split_cusp;
    });

    criterion(5, "flat limits: family 1 gives W(1,0); family 2 gives W(c,1), c = 1,2,3", [] {
        LimitScheme lim1 = flat_limit(family1());
        bool ok = ideal_equal(lim1.ideals[Chart::Z], W_ab(1, 0)) && lim1.cycle == only(Q(), 4);
        {
            IntrinsicScheme intr = intrinsic_scheme(family1().special());
            for (const auto& g : lim1.ideals[Chart::Z].generators())
                ok = ok && intr.ideals[Chart::Z].basis().contains(g);
        }
        for (int c : {1, 2, 3}) {
            FamilySystem fam = family2(c);
            LimitScheme lim = flat_limit(fam);
            ok = ok && ideal_equal(lim.ideals[Chart::Z], W_ab(c, 1)) && lim.cycle == only(Q(), 4);
            IntrinsicScheme intr = intrinsic_scheme(fam.special());
            for (const auto& g : lim.ideals[Chart::Z].generators())
                ok = ok && intr.ideals[Chart::Z].basis().contains(g);
        }
        return ok;
    });

    criterion(6, "Pluecker degrees: pencil 4; nodal line system 9 = 6 + 1 + 2; Fermat 9", [] {
        Cycle pencil_cycle = weierstrass_cycle(pencil(nodal()));
        bool ok = pencil_cycle.total_degree() == 4;

        SheafRep inv = SheafRep::make(nodal(), 1, Ideal::unit(3));
        GenLinearSystem lines = GenLinearSystem::make(inv, {P("x"), P("y"), P("z")});
        Cycle Rn = weierstrass_cycle(lines);
        ok = ok && Rn.total_degree() == 9 && Rn.multiplicity_at(Q()) == 6 &&
             Rn.multiplicity_at(ProjPoint::make(Rat(0), Rat(1), Rat(0))) == 1 &&
             Rn.unresolved() == 2;
        // cross-check against the Hessian divisor
        Cycle hess = divisor_cycle(
            chart_ideals_of_subscheme(nodal(), Ideal(3, {oracle::hessian(nodal().form())})));
        ok = ok && hess == Rn;

        PlaneCurve F = PlaneCurve::make(P("x^3 + y^3 + z^3"));
        SheafRep finv = SheafRep::make(F, 1, Ideal::unit(3));
        GenLinearSystem flines = GenLinearSystem::make(finv, {P("x"), P("y"), P("z")});
        Cycle Rf = weierstrass_cycle(flines);
        ok = ok && Rf.total_degree() == 9 &&
             Rf.multiplicity_at(ProjPoint::make(Rat(1), Rat(-1), Rat(0))) == 1 &&
             Rf.multiplicity_at(ProjPoint::make(Rat(0), Rat(1), Rat(-1))) == 1 &&
             Rf.multiplicity_at(ProjPoint::make(Rat(1), Rat(0), Rat(-1))) == 1;
        // flex divisor ideal equals (Hessian, F) chart by chart
        Polynomial H = oracle::hessian(F.form());
        WronskianResult w = wronskian(flines);
        for (const auto& [chart, poly] : w.per_chart) {
            Ideal A(2, {poly, chart.f});
            Ideal B(2, {dehomogenize(H, chart.which), chart.f});
            ok = ok && ideal_equal(A, B);
        }
        return ok;
    });

    criterion(7, "birational comparison on the nodal and cuspidal parameterizations", [] {
        PlaneCurve C = nodal();
        Parameterization b = Parameterization::make(
            C, {P("s*t^2 - s^3", ST), P("t^3 - s^2*t", ST), P("s^3", ST)},
            {SingularFiber{Q(), {P1Point::finite(Rat(1)), P1Point::finite(Rat(-1))},
                           LocalType::Node}});
        P1System ps = pullback_system(pencil(C), b);
        bool induced_ok = ps.cap == 1 && ps.sections.size() == 2 &&
                          ps.sections[0] == Polynomial::constant(1, Rat(1)) &&
                          ps.sections[1] == Polynomial::variable(1, 0);
        bool rb_zero = p1_weierstrass_cycle(ps.sections, ps.cap).is_zero();
        BirationalComparison node = birational_comparison(pencil(C), b);

        PlaneCurve K = cuspidal();
        Parameterization bc = Parameterization::make(
            K, {P("s*t^2", ST), P("t^3", ST), P("s^3", ST)},
            {SingularFiber{Q(), {P1Point::finite(Rat(0))}, LocalType::Cusp}});
        P1System pc = pullback_system(pencil(K), bc);
        bool induced_ok_c = pc.cap == 1 && pc.sections[0] == Polynomial::constant(1, Rat(1)) &&
                            pc.sections[1] == Polynomial::variable(1, 0);
        BirationalComparison cusp = birational_comparison(pencil(K), bc);

        return induced_ok && rb_zero && node.ok && node.lhs == only(Q(), 4) && induced_ok_c &&
               cusp.ok && cusp.lhs == only(Q(), 4);
    });

    criterion(8, "property suites: defects, injection independence, invariances, oracles", [] {
        bool ok = true;

        // defect nonnegativity over the fixture battery
        std::vector<SheafRep> battery{
            SheafRep::make(nodal(), 1, Ideal(3, {P("x"), P("y")})),
            SheafRep::make(nodal(), 2, Ideal(3, {P("x^2"), P("x*y"), P("y^2")})),
            SheafRep::make(cuspidal(), 1, Ideal(3, {P("x"), P("y")})),
            SheafRep::make(cuspidal(), 2, Ideal(3, {P("x^2"), P("x*y"), P("y^2")})),
            SheafRep::make(nodal(), 1, Ideal(3, {P("x - 3*z"), P("y - 6*z")}))};
        for (const auto& s : battery)
            for (int n = 1; n <= 4; ++n) ok = ok && defect(s, n).effective();

        // injection independence: J -> l*J, m -> m+1
        Cycle R = weierstrass_cycle(pencil(nodal()));
        for (std::string ell : {"z", "x + z"}) {
            SheafRep tw = SheafRep::make(nodal(), 2, Ideal(3, {P(ell) * P("x"), P(ell) * P("y")}));
            GenLinearSystem sys = GenLinearSystem::make(tw, {P(ell) * P("x"), P(ell) * P("y")});
            ok = ok && weierstrass_cycle(sys) == R;
        }

        // Wronskian-ideal invariance under unimodular section changes
        {
            GenLinearSystem sys = pencil(nodal());
            Ideal W = weierstrass_divisor_ideal(sys, Chart::Z);
            std::mt19937 rng(99);
            std::uniform_int_distribution<int> coef(-2, 2);
            for (int trial = 0; trial < 3; ++trial) {
                long a = 1, b = 0, c = 0, d = 1;
                for (int k = 0; k < 5; ++k) {
                    int f = coef(rng);
                    if (k % 2 == 0) {
                        a += f * c;
                        b += f * d;
                    } else {
                        c += f * a;
                        d += f * b;
                    }
                }
                GenLinearSystem mixed = GenLinearSystem::make(
                    sys.sheaf(), {Rat(a) * P("x") + Rat(b) * P("y"),
                                  Rat(c) * P("x") + Rat(d) * P("y")});
                ok = ok && ideal_equal(weierstrass_divisor_ideal(mixed, Chart::Z), W);
            }
        }

        // local multiplicity against the resultant oracle
        {
            std::mt19937 rng(20240811);
            std::uniform_int_distribution<int> coef(-3, 3);
            int done = 0;
            while (done < 20) {
                Polynomial F(2), G(2);
                for (Polynomial* p : {&F, &G})
                    for (int a = 0; a <= 4; ++a)
                        for (int b = 0; a + b <= 4; ++b) {
                            if (a == 0 && b == 0) continue;
                            int c = coef(rng);
                            if (c != 0)
                                *p += Polynomial::term(Monomial(std::vector<int>{a, b}), Rat(c));
                        }
                if (F.is_zero() || G.is_zero()) continue;
                long expected;
                try {
                    expected = oracle::intersection_multiplicity(F, G);
                } catch (const std::exception&) {
                    continue;
                }
                long got;
                try {
                    got = local_multiplicity(Ideal(2, {F, G}), {Rat(0), Rat(0)});
                } catch (const std::exception&) {
                    continue;
                }
                ok = ok && got == expected;
                ++done;
            }
        }

        // chart consistency at the Fermat flex (1:-1:0)
        {
            PlaneCurve F = PlaneCurve::make(P("x^3 + y^3 + z^3"));
            SheafRep finv = SheafRep::make(F, 1, Ideal::unit(3));
            GenLinearSystem lines = GenLinearSystem::make(finv, {P("x"), P("y"), P("z")});
            WronskianResult w = wronskian(lines);
            ProjPoint flex = ProjPoint::make(Rat(1), Rat(-1), Rat(0));
            for (Chart which : {Chart::Y, Chart::X}) {
                const auto& [chart, poly] = w.per_chart[static_cast<std::size_t>(which)];
                auto pc = chart_coords(flex, which);
                ok = ok && pc &&
                     local_multiplicity(Ideal(2, {poly, chart.f}), {(*pc)[0], (*pc)[1]}) == 1;
            }
        }
        return ok;
    });

    if (failures == 0)
        std::cout << "all acceptance criteria passed\n";
    else
        std::cout << failures << " criteria FAILED\n";
    return failures == 0 ? 0 : 1;
}
