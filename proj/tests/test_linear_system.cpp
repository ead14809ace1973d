#include <doctest.h>

#include "wlab/errors.hpp"
#include "wlab/linear_system.hpp"
#include "wlab/parser.hpp"

#include <random>

using namespace wlab;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> UV{"u", "v"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars = XYZ) {
    return parse_polynomial(text, vars);
}

PlaneCurve nodal() { return PlaneCurve::make(P("y^2*z - x^2*z - x^3")); }

GenLinearSystem node_system() {
    SheafRep sheaf = SheafRep::make(nodal(), 1, Ideal(3, {P("x"), P("y")}));
    return GenLinearSystem::make(sheaf, {P("x"), P("y")});
}

bool congruent_up_to_constant(const Polynomial& a, const Polynomial& b, const Polynomial& modulus) {
    GroebnerBasis gb = groebner({modulus}, MonomialOrder::degrevlex());
    Polynomial na = normal_form(a, gb), nb = normal_form(b, gb);
    if (na.is_zero() || nb.is_zero()) return na.is_zero() && nb.is_zero();
    Rat ratio = na.leading(gb.order()).second / nb.leading(gb.order()).second;
    return (na - ratio * nb).is_zero();
}

} // namespace

TEST_CASE("sheaf validation and degree") {
    PlaneCurve C = nodal();
    SheafRep s1 = SheafRep::make(C, 1, Ideal(3, {P("x"), P("y")}));
    CHECK(sheaf_degree(s1) == 2);
    SheafRep s2 = SheafRep::make(C, 1, Ideal::unit(3));
    CHECK(sheaf_degree(s2) == C.degree());
    SheafRep s3 = SheafRep::make(C, 2, Ideal(3, {P("x^2"), P("x*y"), P("y^2")}));
    CHECK(sheaf_degree(s3) == 3);

    // V(J) meets the curve in a curve: rejected
    CHECK_THROWS_AS(SheafRep::make(C, 1, Ideal(3, {P("y^2*z - x^2*z - x^3")})), input_error);
}

TEST_CASE("section validation") {
    PlaneCurve C = nodal();
    SheafRep sheaf = SheafRep::make(C, 1, Ideal(3, {P("x"), P("y")}));
    CHECK_THROWS_AS(GenLinearSystem::make(sheaf, {P("x"), P("z")}), input_error); // z not in (J)+(F)
    CHECK_THROWS_AS(GenLinearSystem::make(sheaf, {P("x"), P("y^2")}), input_error); // wrong degree
    CHECK_NOTHROW(GenLinearSystem::make(sheaf, {P("x"), P("y")}));
}

TEST_CASE("nondegeneracy verdicts") {
    CHECK(check_nondegenerate(node_system()).strongly_nondegenerate);

    PlaneCurve C = nodal();
    SheafRep inv = SheafRep::make(C, 1, Ideal::unit(3));
    NondegeneracyReport dep =
        check_nondegenerate(GenLinearSystem::make(inv, {P("x"), P("2*x")}));
    CHECK(!dep.nondegenerate);

    // triangle of lines: strong nondegeneracy needs independence on each line
    PlaneCurve tri = PlaneCurve::make(P("x*y*z"), {P("x"), P("y"), P("z")});
    SheafRep tinv = SheafRep::make(tri, 1, Ideal::unit(3));
    NondegeneracyReport good =
        check_nondegenerate(GenLinearSystem::make(tinv, {P("x + y"), P("y + z")}));
    CHECK(good.nondegenerate);
    CHECK(good.strongly_nondegenerate);
    // (y+z, y-z) is independent modulo F but collapses on the line y = 0
    NondegeneracyReport bad =
        check_nondegenerate(GenLinearSystem::make(tinv, {P("y + z"), P("y - z")}));
    CHECK(bad.nondegenerate);
    CHECK(!bad.strongly_nondegenerate);
}

TEST_CASE("wronskian: pinned fixtures") {
    WronskianResult w = wronskian(node_system());
    const auto& [chartZ, wz] = w.per_chart[static_cast<std::size_t>(Chart::Z)];
    CHECK(congruent_up_to_constant(wz, parse_polynomial("u^3", UV), chartZ.f));

    PlaneCurve cusp = PlaneCurve::make(P("y^2*z - x^3"));
    SheafRep csheaf = SheafRep::make(cusp, 1, Ideal(3, {P("x"), P("y")}));
    WronskianResult cw = wronskian(GenLinearSystem::make(csheaf, {P("x"), P("y")}));
    const auto& [cchart, cwz] = cw.per_chart[static_cast<std::size_t>(Chart::Z)];
    CHECK(congruent_up_to_constant(cwz, parse_polynomial("u^3", UV), cchart.f));

    PlaneCurve tri = PlaneCurve::make(P("x*y*z"), {P("x"), P("y"), P("z")});
    SheafRep tinv = SheafRep::make(tri, 1, Ideal::unit(3));
    CHECK_THROWS_WITH_AS(wronskian(GenLinearSystem::make(tinv, {P("y + z"), P("y - z")})),
                         "degenerate system", input_error);
}

TEST_CASE("weierstrass divisor ideal") {
    Ideal W = weierstrass_divisor_ideal(node_system(), Chart::Z);
    CHECK(ideal_equal(W, Ideal(2, {parse_polynomial("u^3", UV),
                                   parse_polynomial("v^2 - u^2 - u^3", UV)})));

    // r = 0: the divisor of the single section
    PlaneCurve C = nodal();
    SheafRep inv = SheafRep::make(C, 1, Ideal::unit(3));
    GenLinearSystem single = GenLinearSystem::make(inv, {P("x")});
    Ideal W0 = weierstrass_divisor_ideal(single, Chart::Z);
    CHECK(ideal_equal(W0, Ideal(2, {parse_polynomial("u", UV),
                                    parse_polynomial("v^2 - u^2 - u^3", UV)})));
}

TEST_CASE("wronskian invariances") {
    GenLinearSystem sys = node_system();
    WronskianResult base = wronskian(sys);
    const auto& [chart, w0] = base.per_chart[static_cast<std::size_t>(Chart::Z)];

    // unimodular column operations scale w by a constant and keep the ideal
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int trial = 0; trial < 4; ++trial) {
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
        std::vector<Polynomial> mixed{Rat(a) * P("x") + Rat(b) * P("y"),
                                      Rat(c) * P("x") + Rat(d) * P("y")};
        GenLinearSystem sys2 = GenLinearSystem::make(sys.sheaf(), mixed);
        WronskianResult w2 = wronskian(sys2);
        const auto& [chart2, wz2] = w2.per_chart[static_cast<std::size_t>(Chart::Z)];
        CHECK(congruent_up_to_constant(wz2, w0, chart.f));
        CHECK(ideal_equal(weierstrass_divisor_ideal(sys, Chart::Z),
                          weierstrass_divisor_ideal(sys2, Chart::Z)));
    }

    // 3x3 unimodular changes on the full line system of the Fermat cubic
    {
        PlaneCurve F = PlaneCurve::make(P("x^3 + y^3 + z^3"));
        SheafRep finv = SheafRep::make(F, 1, Ideal::unit(3));
        GenLinearSystem lines = GenLinearSystem::make(finv, {P("x"), P("y"), P("z")});
        Ideal W3 = weierstrass_divisor_ideal(lines, Chart::Z);
        for (int trial = 0; trial < 2; ++trial) {
            std::array<std::array<long, 3>, 3> M{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
            for (int k = 0; k < 6; ++k) {
                int i = static_cast<int>(rng() % 3), j = static_cast<int>(rng() % 3);
                if (i == j) continue;
                int f = coef(rng);
                for (int col = 0; col < 3; ++col)
                    M[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] +=
                        f * M[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)];
            }
            std::vector<Polynomial> mixed;
            for (int i = 0; i < 3; ++i)
                mixed.push_back(Rat(M[static_cast<std::size_t>(i)][0]) * P("x") +
                                Rat(M[static_cast<std::size_t>(i)][1]) * P("y") +
                                Rat(M[static_cast<std::size_t>(i)][2]) * P("z"));
            GenLinearSystem mixed_sys = GenLinearSystem::make(finv, mixed);
            CHECK(ideal_equal(weierstrass_divisor_ideal(mixed_sys, Chart::Z), W3));
        }
    }

    // scaling the sections by a common form multiplies w by its (r+1)-st power
    PlaneCurve C = nodal();
    SheafRep scaled = SheafRep::make(C, 2, Ideal(3, {P("z*x"), P("z*y")}));
    GenLinearSystem sys3 = GenLinearSystem::make(scaled, {P("z*x"), P("z*y")});
    WronskianResult w3 = wronskian(sys3);
    // on the z chart the scaling form is 1, so the Wronskians agree there
    const auto& [chart3, wz3] = w3.per_chart[static_cast<std::size_t>(Chart::Z)];
    CHECK(congruent_up_to_constant(wz3, w0, chart.f));
    // on the y chart the scaling form is v, and r + 1 = 2
    const auto& [charty, wy3] = w3.per_chart[static_cast<std::size_t>(Chart::Y)];
    const auto& [charty0, wy0] = base.per_chart[static_cast<std::size_t>(Chart::Y)];
    Polynomial v = Polynomial::variable(2, 1);
    CHECK(congruent_up_to_constant(wy3, v.pow(2) * wy0, charty.f));
}
