#include "wlab/cycle.hpp"

#include "wlab/errors.hpp"
#include "wlab/univariate.hpp"

#include <cassert>
#include <sstream>

namespace wlab {

void Cycle::add(const ProjPoint& p, long mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries_.emplace(p, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

long Cycle::total_degree() const {
    long d = unresolved_;
    for (const auto& [p, m] : entries_) d += m;
    return d;
}

long Cycle::multiplicity_at(const ProjPoint& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

bool Cycle::effective() const {
    if (unresolved_ < 0) return false;
    for (const auto& [p, m] : entries_)
        if (m < 0) return false;
    return true;
}

Cycle Cycle::operator+(const Cycle& o) const {
    Cycle r(*this);
    for (const auto& [p, m] : o.entries_) r.add(p, m);
    r.unresolved_ += o.unresolved_;
    return r;
}

Cycle Cycle::operator-(const Cycle& o) const {
    Cycle r(*this);
    for (const auto& [p, m] : o.entries_) r.add(p, -m);
    r.unresolved_ -= o.unresolved_;
    return r;
}

Cycle Cycle::scaled(long k) const {
    Cycle r;
    if (k == 0) return r;
    for (const auto& [p, m] : entries_) r.add(p, k * m);
    r.unresolved_ = k * unresolved_;
    return r;
}

std::string Cycle::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << m << "*" << p.to_string();
    }
    if (unresolved_ != 0) {
        if (!first) os << " + ";
        os << "[unresolved " << unresolved_ << "]";
    }
    return os.str();
}

ChartIdeals chart_ideals_of_subscheme(const PlaneCurve& C, const Ideal& homogeneous) {
    ChartIdeals out{{Ideal(2), Ideal(2), Ideal(2)}};
    for (Chart which : all_charts) {
        std::vector<Polynomial> gens{dehomogenize(C.form(), which)};
        for (const auto& g : homogeneous.generators())
            if (!g.is_zero()) gens.push_back(dehomogenize(g, which));
        out.charts[static_cast<std::size_t>(which)] = Ideal(2, std::move(gens));
    }
    return out;
}

Cycle divisor_cycle(const ChartIdeals& ideals) {
    const Ideal& Iz = ideals[Chart::Z];
    const Ideal& Iy = ideals[Chart::Y];
    const Ideal& Ix = ideals[Chart::X];
    auto dz = quotient_dim(Iz);
    auto dy = quotient_dim(Iy);
    auto dx = quotient_dim(Ix);
    if (!dz || !dy || !dx) throw input_error("not finite");

    Cycle cycle;
    long located = 0;

    for (const auto& [u0, v0] : rational_points_2d(Iz)) {
        long m = local_multiplicity(Iz, {u0, v0});
        if (m == 0) continue;
        cycle.add(point_from_chart(Chart::Z, u0, v0), m);
        located += m;
    }
    cycle.add_unresolved(*dz - located);

    // points on z = 0 with y != 0 live in chart Y on the line v = 0
    long inf_total = multiplicity_along(Iy, 1);
    long inf_located = 0;
    {
        UniPoly g;
        Polynomial zero_v = Polynomial::constant(2, Rat(0));
        for (const auto& p : Iy.basis().elements()) {
            Polynomial s = p.substitute(1, zero_v).remove_variables(1, 1);
            if (s.is_zero()) continue;
            g = g.empty() ? uni_from(s) : uni_gcd(g, uni_from(s));
        }
        if (g.empty() && inf_total > 0) throw input_error("not finite");
        if (!g.empty()) {
            for (const auto& [u0, umult] : rational_roots(g).roots) {
                long m = local_multiplicity(Iy, {u0, Rat(0)});
                if (m == 0) continue;
                cycle.add(point_from_chart(Chart::Y, u0, Rat(0)), m);
                inf_located += m;
            }
        }
    }
    cycle.add_unresolved(inf_total - inf_located);

    long mx = local_multiplicity(Ix, {Rat(0), Rat(0)});
    if (mx > 0) cycle.add(ProjPoint::make(Rat(1), Rat(0), Rat(0)), mx);

    return cycle;
}

namespace {

ChartIdeals wronskian_chart_ideals(const WronskianResult& w) {
    ChartIdeals out{{Ideal(2), Ideal(2), Ideal(2)}};
    for (const auto& [chart, poly] : w.per_chart)
        out.charts[static_cast<std::size_t>(chart.which)] = Ideal(2, {poly, chart.f});
    return out;
}

} // namespace

Cycle weierstrass_cycle(const GenLinearSystem& sys) {
    WronskianResult w = wronskian(sys);
    Cycle divisor = divisor_cycle(wronskian_chart_ideals(w));
    Cycle Y = divisor_cycle(chart_ideals_of_subscheme(sys.sheaf().curve(), sys.sheaf().J()));
    int r = sys.rank();
    Cycle R = divisor - Y.scaled(r + 1);

    int d = sheaf_degree(sys.sheaf());
    int g = sys.sheaf().curve().genus();
    long expected = static_cast<long>(r + 1) * (d + static_cast<long>(r) * (g - 1));
    if (R.total_degree() != expected) throw internal_error("Pluecker degree mismatch");
    return R;
}

Cycle defect(const SheafRep& s, int n) {
    assert(n >= 1);
    Cycle Y = divisor_cycle(chart_ideals_of_subscheme(s.curve(), s.J()));
    Cycle Yn = divisor_cycle(chart_ideals_of_subscheme(s.curve(), ideal_power(s.J(), n)));
    return Yn - Y.scaled(n);
}

IntrinsicScheme intrinsic_scheme(const GenLinearSystem& sys) {
    WronskianResult w = wronskian(sys);
    const PlaneCurve& C = sys.sheaf().curve();
    int r = sys.rank();
    Ideal Jpow = ideal_power(sys.sheaf().J(), r + 1);

    IntrinsicScheme out{{{Ideal(2), Ideal(2), Ideal(2)}}, {}};
    for (const auto& [chart, poly] : w.per_chart) {
        Ideal A(2, {poly, chart.f});
        std::vector<Polynomial> bgens{chart.f};
        for (const auto& g : Jpow.generators())
            if (!g.is_zero()) bgens.push_back(dehomogenize(g, chart.which));
        Ideal B(2, std::move(bgens));
        out.ideals.charts[static_cast<std::size_t>(chart.which)] = ideal_quotient(A, B);
    }
    out.cycle = divisor_cycle(out.ideals);

    long degYr = divisor_cycle(chart_ideals_of_subscheme(C, Jpow)).total_degree();
    long degIr = static_cast<long>(C.degree()) * sys.sheaf().twist() * (r + 1) - degYr;
    long expected = degIr + static_cast<long>(r + 1) * r * (C.genus() - 1);
    if (out.cycle.total_degree() != expected)
        throw internal_error("intrinsic scheme degree mismatch");
    return out;
}

Verdict decomposition_identity_check(const GenLinearSystem& sys) {
    Cycle R = weierstrass_cycle(sys);
    Cycle Z = intrinsic_scheme(sys).cycle;
    Cycle D = defect(sys.sheaf(), sys.rank() + 1);
    Cycle rhs = Z + D;
    Verdict v;
    v.ok = R == rhs;
    v.lhs = R.to_string();
    v.rhs = rhs.to_string();
    v.detail = v.ok ? "R = [Z] + defect" : "decomposition identity failed";
    return v;
}

} // namespace wlab
