#include <doctest.h>

#include "wlab/degeneration.hpp"
#include "wlab/errors.hpp"
#include "wlab/parser.hpp"

using namespace wlab;

namespace {

const std::vector<std::string> XYZT{"x", "y", "z", "t"};
const std::vector<std::string> UV{"u", "v"};
const std::vector<std::string> UVT{"u", "v", "t"};

Polynomial P4(const std::string& text) { return parse_polynomial(text, XYZT); }

FamilySystem family1() {
    return FamilySystem::make(P4("y^2*z - x^3 - x^2*z - t^2*z^3"),
                              {P4("x"), P4("y - t*z")}, {P4("x"), P4("y - t*z")});
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

FamilySystem constant_family() {
    // the t-independent full line system on the nodal cubic
    return FamilySystem::make(P4("y^2*z - x^2*z - x^3"), {P4("1")},
                              {P4("x"), P4("y"), P4("z")});
}

ProjPoint Q() { return ProjPoint::make(Rat(0), Rat(0), Rat(1)); }

Ideal W_ab(long a, long b) {
    // (a uv + b v^2) + (u,v)^3 + (F_0) in the z chart
    std::vector<Polynomial> gens{Rat(a) * parse_polynomial("u*v", UV) +
                                 Rat(b) * parse_polynomial("v^2", UV)};
    Ideal cube = maximal_power(2, 3);
    for (const auto& g : cube.generators()) gens.push_back(g);
    gens.push_back(parse_polynomial("v^2 - u^2 - u^3", UV));
    return Ideal(2, std::move(gens));
}

} // namespace

TEST_CASE("family validation") {
    CHECK_NOTHROW(family1());
    // sections outside the family ideal are rejected
    CHECK_THROWS_AS(FamilySystem::make(P4("y^2*z - x^3 - x^2*z - t^2*z^3"),
                                       {P4("x"), P4("y - t*z")}, {P4("x"), P4("z")}),
                    input_error);
    // non-reduced special fiber
    CHECK_THROWS_AS(FamilySystem::make(P4("x^2*z - t*y^3"), {P4("1")}, {P4("x"), P4("y")}),
                    input_error);
    // sections that collapse at t = 0
    CHECK_THROWS_WITH_AS(FamilySystem::make(P4("y^2*z - x^2*z - x^3"), {P4("1")},
                                            {P4("x"), P4("x + t*y")}),
                         "degenerate special fiber", input_error);
}

TEST_CASE("family Wronskian specializes to the special Wronskian") {
    FamilySystem fam = family1();
    Polynomial wt = family_wronskian(fam, Chart::Z);
    Polynomial at0 = wt.substitute(2, Polynomial::zero(3)).remove_variables(2, 1);
    // u^3 modulo F_0, up to a constant
    Polynomial f0 = fam.special().sheaf().curve().chart(Chart::Z).f;
    GroebnerBasis gb = groebner({f0}, MonomialOrder::degrevlex());
    Polynomial nf = normal_form(at0, gb);
    Polynomial target = normal_form(parse_polynomial("u^3", UV), gb);
    REQUIRE(!nf.is_zero());
    Rat ratio = nf.leading(gb.order()).second / target.leading(gb.order()).second;
    CHECK((nf - ratio * target).is_zero());

    // the constant family reproduces the single-curve Wronskian
    FamilySystem cf = constant_family();
    Polynomial wc = family_wronskian(cf, Chart::Z);
    WronskianResult single = wronskian(cf.special());
    Polynomial wc0 = wc.substitute(2, Polynomial::zero(3)).remove_variables(2, 1);
    const auto& [chart, w0] = single.per_chart[static_cast<std::size_t>(Chart::Z)];
    GroebnerBasis gbc = groebner({chart.f}, MonomialOrder::degrevlex());
    Polynomial a = normal_form(wc0, gbc), bpoly = normal_form(w0, gbc);
    Rat r2 = a.leading(gbc.order()).second / bpoly.leading(gbc.order()).second;
    CHECK((a - r2 * bpoly).is_zero());

    CHECK_NOTHROW(family_wronskian(family2(1), Chart::Z));
}

TEST_CASE("flat limits of the two families") {
    LimitScheme lim1 = flat_limit(family1());
    Cycle fourQ;
    fourQ.add(Q(), 4);
    CHECK(lim1.cycle == fourQ);
    CHECK(ideal_equal(lim1.ideals[Chart::Z], W_ab(1, 0)));
    // no limit support at infinity on these fixtures
    CHECK(quotient_dim(lim1.ideals[Chart::Y]) == 0);
    CHECK(quotient_dim(lim1.ideals[Chart::X]) == 0);

    for (int c : {1, 2, 3}) {
        LimitScheme lim2 = flat_limit(family2(c));
        CHECK(lim2.cycle == fourQ);
        CHECK(ideal_equal(lim2.ideals[Chart::Z], W_ab(c, 1)));
        auto shape = node_limit_shape(lim2.ideals[Chart::Z],
                                      parse_polynomial("v^2 - u^2 - u^3", UV),
                                      {Rat(0), Rat(0)});
        REQUIRE(shape);
        CHECK(shape->first == Rat(c));
        CHECK(shape->second == Rat(1));
    }

    auto shape1 = node_limit_shape(lim1.ideals[Chart::Z],
                                   parse_polynomial("v^2 - u^2 - u^3", UV), {Rat(0), Rat(0)});
    REQUIRE(shape1);
    CHECK(shape1->first == Rat(1));
    CHECK(shape1->second == Rat(0));

    // same special system, different limits
    LimitScheme lim2 = flat_limit(family2(2));
    CHECK(family1().special().sections() == family2(2).special().sections());
    CHECK(!ideal_equal(lim1.ideals[Chart::Z], lim2.ideals[Chart::Z]));
}

TEST_CASE("constant invertible family: saturation is a no-op") {
    FamilySystem cf = constant_family();
    LimitScheme lim = flat_limit(cf);
    CHECK(ideal_equal(lim.ideals[Chart::Z], weierstrass_divisor_ideal(cf.special(), Chart::Z)));
    CHECK(lim.cycle == weierstrass_cycle(cf.special()));
}

TEST_CASE("limit checks") {
    LimitChecks chk = limit_checks(family1());
    CHECK(chk.containment);
    CHECK(chk.cycle_matches);

    LimitChecks chk2 = limit_checks(family2(2));
    CHECK(chk2.containment);
    CHECK(chk2.cycle_matches);

    LimitChecks cc = limit_checks(constant_family());
    CHECK(cc.containment);
    CHECK(cc.cycle_matches);
    // containment is equality in the invertible case
    IntrinsicScheme intr = intrinsic_scheme(constant_family().special());
    CHECK(ideal_equal(cc.limit.ideals[Chart::Z], intr.ideals[Chart::Z]));
}

TEST_CASE("flatness probe on nearby fibers") {
    // the pre-saturation divisor family specializes to degree-6 Weierstrass
    // divisors at small nonzero t
    FamilySystem fam = family1();
    for (int k : {1, 2, 3}) {
        Rat t0(1, 4 * k);
        GenLinearSystem fiber = fam.fiber(t0);
        Ideal div = family_divisor_ideal(fam, Chart::Z);
        Ideal at_t0 = specialize(div, 2, t0);
        auto dz = quotient_dim(at_t0);
        REQUIRE(dz);
        ChartIdeals ids{{at_t0,
                         specialize(family_divisor_ideal(fam, Chart::Y), 2, t0),
                         specialize(family_divisor_ideal(fam, Chart::X), 2, t0)}};
        CHECK(divisor_cycle(ids).total_degree() == 6);
        // and it is the fiber system's own Weierstrass divisor
        CHECK(ideal_equal(at_t0, weierstrass_divisor_ideal(fiber, Chart::Z)));
    }
}

TEST_CASE("divisor-limit bookkeeping: 6Q = R + (r+1)[Y(0)]") {
    FamilySystem fam = family1();
    ChartIdeals ids{{Ideal(2), Ideal(2), Ideal(2)}};
    for (Chart which : all_charts) {
        Ideal sat = saturate(family_divisor_ideal(fam, which),
                             Ideal::principal(Polynomial::variable(3, 2)));
        ids.charts[static_cast<std::size_t>(which)] = specialize(sat, 2, Rat(0));
    }
    Cycle divisor_limit = divisor_cycle(ids);
    CHECK(divisor_limit.total_degree() == 6);
    Cycle R = weierstrass_cycle(fam.special());
    Cycle Y = divisor_cycle(
        chart_ideals_of_subscheme(fam.special().sheaf().curve(), fam.special().sheaf().J()));
    CHECK(divisor_limit == R + Y.scaled(fam.rank() + 1));
}
