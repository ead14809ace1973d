#include "wlab/degeneration.hpp"

#include "wlab/errors.hpp"

#include <cassert>
#include <sstream>

namespace wlab {

namespace {

// degree in (x, y, z) only; -1 for zero
int xyz_degree(const Polynomial& p, bool& pure) {
    pure = true;
    int d = -1;
    for (const auto& [m, c] : p.terms()) {
        int k = m[0] + m[1] + m[2];
        if (d == -1) d = k;
        if (k != d) pure = false;
    }
    return d;
}

GenLinearSystem specialize_family(const Polynomial& Ft, const std::vector<Polynomial>& Jt,
                                  const std::vector<Polynomial>& sections_t, const Rat& t0) {
    auto at = [&](const Polynomial& p) {
        return p.substitute(3, Polynomial::constant(4, t0)).remove_variables(3, 1);
    };
    PlaneCurve C = PlaneCurve::make(at(Ft));
    std::vector<Polynomial> J0;
    for (const auto& g : Jt) {
        Polynomial s = at(g);
        if (!s.is_zero()) J0.push_back(std::move(s));
    }
    bool pure = true;
    int twist = xyz_degree(sections_t.front(), pure);
    SheafRep sheaf = SheafRep::make(std::move(C), twist, Ideal(3, std::move(J0)));
    std::vector<Polynomial> s0;
    for (const auto& s : sections_t) s0.push_back(at(s));
    return GenLinearSystem::make(std::move(sheaf), std::move(s0));
}

} // namespace

FamilySystem FamilySystem::make(Polynomial Ft, std::vector<Polynomial> Jt,
                                std::vector<Polynomial> sections_t) {
    if (Ft.arity() != 4 || Ft.is_zero()) throw input_error("not homogeneous");
    bool pure = true;
    xyz_degree(Ft, pure);
    if (!pure) throw input_error("not homogeneous");
    if (sections_t.empty()) throw input_error("no sections");
    int m = -1;
    for (const auto& s : sections_t) {
        if (s.arity() != 4 || s.is_zero()) throw input_error("section has wrong degree");
        bool spure = true;
        int d = xyz_degree(s, spure);
        if (!spure || (m != -1 && d != m)) throw input_error("section has wrong degree");
        m = d;
    }
    for (const auto& g : Jt) {
        bool gpure = true;
        if (g.arity() != 4) throw input_error("arity mismatch");
        xyz_degree(g, gpure);
        if (!gpure) throw input_error("ideal generator not homogeneous");
    }

    std::vector<Polynomial> membership = Jt;
    membership.push_back(Ft);
    GroebnerBasis gb = groebner(membership, MonomialOrder::degrevlex());
    for (const auto& s : sections_t)
        if (!gb.contains(s)) throw input_error("section not in sheaf");

    GenLinearSystem special = specialize_family(Ft, Jt, sections_t, Rat(0));
    if (!check_nondegenerate(special).strongly_nondegenerate)
        throw input_error("degenerate special fiber");
    return FamilySystem(std::move(Ft), std::move(Jt), std::move(sections_t), std::move(special));
}

GenLinearSystem FamilySystem::fiber(const Rat& t0) const {
    return specialize_family(Ft_, Jt_, sections_t_, t0);
}

Polynomial family_wronskian(const FamilySystem& fam, Chart which) {
    Polynomial ft = dehomogenize_family(fam.form(), which);
    GroebnerBasis gbF = groebner({ft}, MonomialOrder::degrevlex());
    Polynomial fu = ft.derivative(0), fv = ft.derivative(1);

    std::vector<Polynomial> current;
    for (const auto& s : fam.sections())
        current.push_back(normal_form(dehomogenize_family(s, which), gbF));
    std::vector<std::vector<Polynomial>> rows{current};
    for (int k = 1; k <= fam.rank(); ++k) {
        for (auto& f : current)
            f = normal_form(fv * f.derivative(0) - fu * f.derivative(1), gbF);
        rows.push_back(current);
    }
    Polynomial w = normal_form(poly_det(rows), gbF).primitive(MonomialOrder::degrevlex());
    if (w.is_zero()) throw input_error("degenerate special fiber");
    return w;
}

Ideal family_divisor_ideal(const FamilySystem& fam, Chart which) {
    return Ideal(3, {family_wronskian(fam, which), dehomogenize_family(fam.form(), which)});
}

LimitScheme flat_limit(const FamilySystem& fam, int sat_rounds) {
    int r = fam.rank();
    Ideal Jpow = ideal_power(Ideal(4, fam.J()), r + 1);

    LimitScheme out{{{Ideal(2), Ideal(2), Ideal(2)}}, {}};
    for (Chart which : all_charts) {
        Polynomial ft = dehomogenize_family(fam.form(), which);
        Ideal A(3, {family_wronskian(fam, which), ft});
        std::vector<Polynomial> bgens{ft};
        for (const auto& g : Jpow.generators())
            if (!g.is_zero()) bgens.push_back(dehomogenize_family(g, which));
        Ideal T = ideal_quotient(A, Ideal(3, std::move(bgens)));
        Ideal Tsat = saturate(T, Ideal::principal(Polynomial::variable(3, 2)), sat_rounds);
        out.ideals.charts[static_cast<std::size_t>(which)] = specialize(Tsat, 2, Rat(0));
    }
    try {
        out.cycle = divisor_cycle(out.ideals);
    } catch (const input_error&) {
        throw input_error("limit not finite");
    }
    return out;
}

LimitChecks limit_checks(const FamilySystem& fam) {
    LimitChecks out{true, false, {}, {}, flat_limit(fam), ""};
    IntrinsicScheme intr = intrinsic_scheme(fam.special());
    for (Chart which : all_charts) {
        const auto& gb = intr.ideals[which].basis();
        for (const auto& g : out.limit.ideals[which].generators())
            out.containment = out.containment && gb.contains(g);
    }
    out.limit_cycle = out.limit.cycle;
    out.special_weierstrass = weierstrass_cycle(fam.special());
    out.cycle_matches = out.limit_cycle == out.special_weierstrass;
    std::ostringstream os;
    os << "[W(s)] = " << out.limit_cycle.to_string()
       << "; R(I(0)) = " << out.special_weierstrass.to_string()
       << (out.containment ? "; W(s) contains Z(I(0))" : "; containment FAILED");
    out.detail = os.str();
    return out;
}

std::optional<std::pair<Rat, Rat>> node_limit_shape(const Ideal& limit_chart_ideal,
                                                    const Polynomial& special_chart_eq,
                                                    const std::array<Rat, 2>& point) {
    std::vector<Polynomial> images{
        Polynomial::variable(2, 0) + Polynomial::constant(2, point[0]),
        Polynomial::variable(2, 1) + Polynomial::constant(2, point[1])};
    Polynomial f0 = special_chart_eq.compose(images);
    std::vector<Polynomial> lgens;
    for (const auto& g : limit_chart_ideal.generators())
        if (!g.is_zero()) lgens.push_back(g.compose(images));
    Ideal L(2, lgens);

    Ideal Q = ideal_sum(maximal_power(2, 3), Ideal::principal(f0));
    const auto& gbQ = Q.basis();

    // image of L in the finite quotient: normal forms of g times the low
    // monomials span it
    std::vector<Polynomial> image;
    std::vector<Monomial> probes;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; a + b <= 2; ++b) probes.push_back(Monomial(std::vector<int>{a, b}));
    for (const auto& g : lgens)
        for (const auto& mu : probes) {
            Polynomial nf = normal_form(g.times_term(mu, Rat(1)), gbQ);
            if (!nf.is_zero()) image.push_back(std::move(nf));
        }
    if (image.empty()) return std::nullopt;

    // the image must be one line, spanned by a quadratic in uv and v^2
    Polynomial rep = image.front();
    auto [rm, rc] = rep.leading(MonomialOrder::degrevlex());
    for (const auto& p : image) {
        Polynomial diff = rc * p - p.coeff(rm) * rep;
        if (!diff.is_zero()) return std::nullopt;
    }
    Monomial uv(std::vector<int>{1, 1}), vv(std::vector<int>{0, 2});
    Rat a = rep.coeff(uv), b = rep.coeff(vv);
    Polynomial residue = rep - Polynomial::term(uv, a) - Polynomial::term(vv, b);
    if (!residue.is_zero() || (a == 0 && b == 0)) return std::nullopt;

    // confirm the ideal really is (a uv + b v^2) + (u,v)^3 + (f0)
    Polynomial quadratic = Polynomial::term(uv, a) + Polynomial::term(vv, b);
    Ideal candidate = ideal_sum(Ideal::principal(quadratic), Q);
    if (!ideal_equal(L, candidate)) return std::nullopt;

    if (b != 0) return std::make_pair(a / b, Rat(1));
    return std::make_pair(Rat(1), Rat(0));
}

} // namespace wlab
