#include "wlab/plane_curve.hpp"

#include "wlab/errors.hpp"
#include "wlab/univariate.hpp"

#include <cassert>

namespace wlab {

Polynomial dehomogenize(const Polynomial& F, Chart which) {
    assert(F.arity() == 3);
    Polynomial u = Polynomial::variable(2, 0);
    Polynomial v = Polynomial::variable(2, 1);
    Polynomial one = Polynomial::constant(2, Rat(1));
    switch (which) {
    case Chart::Z: return F.compose({u, v, one});
    case Chart::Y: return F.compose({u, one, v});
    case Chart::X: return F.compose({one, u, v});
    }
    return Polynomial(2);
}

Polynomial dehomogenize_family(const Polynomial& Ft, Chart which) {
    assert(Ft.arity() == 4);
    Polynomial u = Polynomial::variable(3, 0);
    Polynomial v = Polynomial::variable(3, 1);
    Polynomial t = Polynomial::variable(3, 2);
    Polynomial one = Polynomial::constant(3, Rat(1));
    switch (which) {
    case Chart::Z: return Ft.compose({u, v, one, t});
    case Chart::Y: return Ft.compose({u, one, v, t});
    case Chart::X: return Ft.compose({one, u, v, t});
    }
    return Polynomial(3);
}

std::optional<std::array<Rat, 2>> chart_coords(const ProjPoint& p, Chart which) {
    const Rat &x = p.x(), &y = p.y(), &z = p.z();
    switch (which) {
    case Chart::Z:
        if (z == 0) return std::nullopt;
        return std::array<Rat, 2>{x / z, y / z};
    case Chart::Y:
        if (y == 0) return std::nullopt;
        return std::array<Rat, 2>{x / y, z / y};
    case Chart::X:
        if (x == 0) return std::nullopt;
        return std::array<Rat, 2>{y / x, z / x};
    }
    return std::nullopt;
}

ProjPoint point_from_chart(Chart which, const Rat& u, const Rat& v) {
    switch (which) {
    case Chart::Z: return ProjPoint::make(u, v, Rat(1));
    case Chart::Y: return ProjPoint::make(u, Rat(1), v);
    case Chart::X: return ProjPoint::make(Rat(1), u, v);
    }
    return ProjPoint::make(Rat(0), Rat(0), Rat(1));
}

PlaneCurve PlaneCurve::make(const Polynomial& F, std::vector<Polynomial> components) {
    if (F.arity() != 3 || F.is_zero() || !F.is_homogeneous() || F.total_degree() < 1)
        throw input_error("not homogeneous");
    int e = F.total_degree();

    // square-free <=> the singular locus is finite, chart by chart
    for (Chart c : all_charts) {
        Polynomial f = dehomogenize(F, c);
        Ideal sing(2, {f, f.derivative(0), f.derivative(1)});
        if (!quotient_dim(sing)) throw input_error("not reduced");
    }

    if (components.empty()) {
        components.push_back(F);
    } else {
        Polynomial prod = Polynomial::constant(3, Rat(1));
        for (const auto& g : components) {
            if (g.arity() != 3 || g.is_zero() || !g.is_homogeneous() || g.total_degree() < 1)
                throw input_error("bad component list");
            prod = prod * g;
        }
        Polynomial diff = prod - F;
        if (!diff.is_zero()) {
            // allow a constant factor: prod = c*F
            bool scalar = prod.total_degree() == e && !prod.is_zero();
            if (scalar) {
                const auto& [m, c0] = *prod.terms().begin();
                Rat fm = F.coeff(m);
                scalar = fm != 0 && (prod - (c0 / fm) * F).is_zero();
            }
            if (!scalar) throw input_error("bad component list");
        }
    }
    return PlaneCurve(F, e, std::move(components));
}

AffineChart PlaneCurve::chart(Chart which) const {
    return AffineChart{which, dehomogenize(F_, which)};
}

int PlaneCurve::genus() const { return (degree_ - 1) * (degree_ - 2) / 2; }

int arithmetic_genus(const PlaneCurve& C) { return C.genus(); }

namespace {

// univariate gcd of the generators of a 2-variable ideal specialized at v = v0
UniPoly fiber_gcd(const std::vector<Polynomial>& gens, const Rat& v0) {
    UniPoly g;
    Polynomial value = Polynomial::constant(2, v0);
    for (const auto& p : gens) {
        Polynomial s = p.substitute(1, value).remove_variables(1, 1);
        if (s.is_zero()) continue;
        g = g.empty() ? uni_from(s) : uni_gcd(g, uni_from(s));
    }
    return g;
}

} // namespace

SingularLocus singular_points(const PlaneCurve& C) {
    SingularLocus out{};
    out.residual_degree = 0;

    // z != 0 stratum
    {
        Polynomial f = dehomogenize(C.form(), Chart::Z);
        Ideal sing(2, {f, f.derivative(0), f.derivative(1)});
        if (!sing.basis().is_trivial()) {
            Ideal elim = eliminate(sing, 1); // univariate in v
            if (elim.is_zero_ideal()) throw internal_error("singular locus not finite");
            UniPoly ev = uni_from(elim.basis().elements().front());
            RootExtraction roots = rational_roots(ev);
            out.residual_degree += uni_deg(roots.residual) > 0 ? uni_deg(roots.residual) : 0;
            for (const auto& [v0, mult] : roots.roots) {
                UniPoly g = fiber_gcd(sing.basis().elements(), v0);
                if (g.empty()) throw internal_error("singular locus not finite");
                RootExtraction uroots = rational_roots(g);
                out.residual_degree += uni_deg(uroots.residual) > 0 ? uni_deg(uroots.residual) : 0;
                for (const auto& [u0, umult] : uroots.roots)
                    out.points.push_back(point_from_chart(Chart::Z, u0, v0));
            }
        }
    }
    // z = 0, y != 0 stratum
    {
        Polynomial f = dehomogenize(C.form(), Chart::Y);
        std::vector<Polynomial> gens{f, f.derivative(0), f.derivative(1)};
        UniPoly h = fiber_gcd(gens, Rat(0));
        if (h.empty()) throw internal_error("singular locus not finite");
        RootExtraction roots = rational_roots(h);
        out.residual_degree += uni_deg(roots.residual) > 0 ? uni_deg(roots.residual) : 0;
        for (const auto& [u0, mult] : roots.roots)
            out.points.push_back(point_from_chart(Chart::Y, u0, Rat(0)));
    }
    // the point (1:0:0)
    {
        Polynomial f = dehomogenize(C.form(), Chart::X);
        std::vector<Rat> origin{Rat(0), Rat(0)};
        bool singular = f.evaluate(origin) == 0 && f.derivative(0).evaluate(origin) == 0 &&
                        f.derivative(1).evaluate(origin) == 0;
        if (singular) out.points.push_back(ProjPoint::make(Rat(1), Rat(0), Rat(0)));
    }
    return out;
}

Derivation::Derivation(AffineChart chart)
    : chart_(std::move(chart)), fu_(chart_.f.derivative(0)), fv_(chart_.f.derivative(1)) {}

Polynomial Derivation::operator()(const Polynomial& g) const {
    return fv_ * g.derivative(0) - fu_ * g.derivative(1);
}

Polynomial Derivation::apply_mod(const Polynomial& g, const GroebnerBasis& chart_eq) const {
    return normal_form((*this)(g), chart_eq);
}

Derivation dualizing_derivation(const PlaneCurve& C, Chart which) {
    return Derivation(C.chart(which));
}

} // namespace wlab
