#include "wlab/linear_system.hpp"

#include "wlab/errors.hpp"

#include <cassert>
#include <sstream>

namespace wlab {

namespace {

// total degree of the finite subscheme of C cut by a homogeneous ideal,
// assembled from the standard decomposition of the plane:
// {z != 0} ⊔ {z = 0, y != 0} ⊔ {(1:0:0)}
long subscheme_degree(const PlaneCurve& C, const Ideal& J) {
    std::vector<Polynomial> gz{dehomogenize(C.form(), Chart::Z)};
    std::vector<Polynomial> gy{dehomogenize(C.form(), Chart::Y)};
    std::vector<Polynomial> gx{dehomogenize(C.form(), Chart::X)};
    for (const auto& g : J.generators()) {
        gz.push_back(dehomogenize(g, Chart::Z));
        gy.push_back(dehomogenize(g, Chart::Y));
        gx.push_back(dehomogenize(g, Chart::X));
    }
    Ideal Iz(2, gz), Iy(2, gy), Ix(2, gx);
    auto dz = quotient_dim(Iz);
    auto dy = quotient_dim(Iy);
    auto dx = quotient_dim(Ix);
    if (!dz || !dy || !dx) throw input_error("Y not finite");
    long total = *dz;
    total += multiplicity_along(Iy, 1);
    total += local_multiplicity(Ix, {Rat(0), Rat(0)});
    return total;
}

long rank_of(const std::vector<Polynomial>& polys) {
    // exact Gaussian elimination on the coefficient matrix
    std::vector<Monomial> cols;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) cols.push_back(m);
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    std::vector<std::vector<Rat>> rows;
    for (const auto& p : polys) {
        std::vector<Rat> row(cols.size(), Rat(0));
        for (std::size_t j = 0; j < cols.size(); ++j) row[j] = p.coeff(cols[j]);
        rows.push_back(std::move(row));
    }
    long rank = 0;
    std::size_t col = 0;
    while (col < cols.size() && rank < static_cast<long>(rows.size())) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) {
            ++col;
            continue;
        }
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<std::size_t>(rank) || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[static_cast<std::size_t>(rank)][col];
            for (std::size_t j = col; j < cols.size(); ++j)
                rows[i][j] -= f * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
        ++col;
    }
    return rank;
}

} // namespace

SheafRep SheafRep::make(PlaneCurve curve, int twist, Ideal J) {
    if (twist < 0) throw input_error("negative twist");
    if (J.arity() != 3) throw input_error("arity mismatch");
    for (const auto& g : J.generators())
        if (!g.is_homogeneous()) throw input_error("ideal generator not homogeneous");
    if (J.is_zero_ideal()) throw input_error("Y not finite");
    SheafRep s(std::move(curve), twist, std::move(J));
    subscheme_degree(s.curve_, s.J_); // throws "Y not finite" when infinite
    return s;
}

Ideal SheafRep::chart_ideal(Chart which) const {
    std::vector<Polynomial> gens{dehomogenize(curve_.form(), which)};
    for (const auto& g : J_.generators()) gens.push_back(dehomogenize(g, which));
    return Ideal(2, std::move(gens));
}

int sheaf_degree(const SheafRep& s) {
    long degY = subscheme_degree(s.curve(), s.J());
    return s.curve().degree() * s.twist() - static_cast<int>(degY);
}

GenLinearSystem GenLinearSystem::make(SheafRep sheaf, std::vector<Polynomial> sections) {
    if (sections.empty()) throw input_error("no sections");
    int m = sheaf.twist();
    std::vector<Polynomial> membership = sheaf.J().generators();
    membership.push_back(sheaf.curve().form());
    GroebnerBasis gb = groebner(membership, MonomialOrder::degrevlex());
    for (const auto& s : sections) {
        if (s.arity() != 3 || s.is_zero() || !s.is_homogeneous() || s.total_degree() != m)
            throw input_error("section has wrong degree");
        if (!gb.contains(s)) throw input_error("section not in sheaf");
    }
    return GenLinearSystem(std::move(sheaf), std::move(sections));
}

NondegeneracyReport check_nondegenerate(const GenLinearSystem& sys) {
    NondegeneracyReport rep{};
    long want = sys.rank() + 1;

    GroebnerBasis gbF = groebner({sys.sheaf().curve().form()}, MonomialOrder::degrevlex());
    std::vector<Polynomial> nf;
    for (const auto& s : sys.sections()) nf.push_back(normal_form(s, gbF));
    rep.nondegenerate = rank_of(nf) == want;
    if (!rep.nondegenerate) rep.detail = "sections dependent modulo the curve";

    rep.strongly_nondegenerate = rep.nondegenerate;
    if (rep.strongly_nondegenerate) {
        const auto& comps = sys.sheaf().curve().components();
        for (std::size_t k = 0; k < comps.size(); ++k) {
            GroebnerBasis gbG = groebner({comps[k]}, MonomialOrder::degrevlex());
            std::vector<Polynomial> nfk;
            for (const auto& s : sys.sections()) nfk.push_back(normal_form(s, gbG));
            if (rank_of(nfk) != want) {
                rep.strongly_nondegenerate = false;
                std::ostringstream os;
                os << "sections dependent on component " << (k + 1);
                rep.detail = os.str();
                break;
            }
        }
    }
    return rep;
}

WronskianResult wronskian(const GenLinearSystem& sys) {
    NondegeneracyReport rep = check_nondegenerate(sys);
    if (!rep.strongly_nondegenerate) throw input_error("degenerate system");

    const PlaneCurve& C = sys.sheaf().curve();
    int r = sys.rank();
    WronskianResult out;
    std::vector<bool> component_checked(C.components().size(), false);

    for (Chart which : all_charts) {
        AffineChart chart = C.chart(which);
        GroebnerBasis gbF = groebner({chart.f}, MonomialOrder::degrevlex());
        Derivation D(chart);

        std::vector<std::vector<Polynomial>> rows;
        std::vector<Polynomial> current;
        for (const auto& s : sys.sections())
            current.push_back(normal_form(dehomogenize(s, which), gbF));
        rows.push_back(current);
        for (int k = 1; k <= r; ++k) {
            for (auto& f : current) f = D.apply_mod(f, gbF);
            rows.push_back(current);
        }
        Polynomial w = normal_form(poly_det(rows), gbF).primitive(MonomialOrder::degrevlex());
        if (w.is_zero()) throw input_error("degenerate system");

        for (std::size_t k = 0; k < C.components().size(); ++k) {
            Polynomial g = dehomogenize(C.components()[k], which);
            if (g.is_constant()) continue;
            GroebnerBasis gbG = groebner({g}, MonomialOrder::degrevlex());
            if (normal_form(w, gbG).is_zero()) throw input_error("degenerate system");
            component_checked[k] = true;
        }
        out.per_chart.emplace_back(std::move(chart), std::move(w));
    }
    for (bool checked : component_checked)
        if (!checked) throw internal_error("component invisible in every chart");
    return out;
}

Ideal weierstrass_divisor_ideal(const GenLinearSystem& sys, Chart which) {
    WronskianResult w = wronskian(sys);
    const auto& entry = w.per_chart[static_cast<std::size_t>(which)];
    return Ideal(2, {entry.second, entry.first.f});
}

} // namespace wlab
