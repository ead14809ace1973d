#include "wlab/birational.hpp"

#include "wlab/errors.hpp"
#include "wlab/series.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wlab {

void P1Cycle::add(const P1Point& p, long mult) {
    if (mult == 0) return;
    auto [it, inserted] = entries_.emplace(p, mult);
    if (!inserted) {
        it->second += mult;
        if (it->second == 0) entries_.erase(it);
    }
}

long P1Cycle::total_degree() const {
    long d = unresolved_;
    for (const auto& [p, m] : entries_) d += m;
    return d;
}

std::string P1Cycle::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, m] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << m << "*(" << p.to_string() << ")";
    }
    if (unresolved_ != 0) {
        if (!first) os << " + ";
        os << "[unresolved " << unresolved_ << "]";
    }
    return os.str();
}

P1System pullback_system(const GenLinearSystem& sys, const Parameterization& b) {
    NondegeneracyReport rep = check_nondegenerate(sys);
    if (!rep.strongly_nondegenerate) throw input_error("degenerate system");

    int em = sys.sheaf().curve().degree() * sys.sheaf().twist();
    std::vector<Polynomial> pullbacks;
    for (const auto& s : sys.sections()) {
        Polynomial p = s.compose({b.maps()[0], b.maps()[1], b.maps()[2]});
        if (p.is_zero()) throw internal_error("all sections pull back to 0");
        pullbacks.push_back(std::move(p));
    }

    // The torsion of b^*I is the pullback of the colength scheme Y; its
    // divisor part is the gcd of the pulled-back ideal generators. Every
    // section pullback is divisible by it.
    std::vector<Polynomial> jb;
    for (const auto& g : sys.sheaf().J().generators()) {
        if (g.is_zero()) continue;
        Polynomial p = g.compose({b.maps()[0], b.maps()[1], b.maps()[2]});
        if (!p.is_zero()) jb.push_back(std::move(p));
    }
    if (jb.empty()) throw input_error("Y not finite");
    int base_degree = binary_gcd_degree(jb);
    UniPoly G;
    for (const auto& p : jb) {
        UniPoly u = dehomog_s(p);
        G = G.empty() ? u : uni_gcd(G, u);
    }

    P1System out;
    out.cap = em - base_degree;
    for (const auto& p : pullbacks) {
        auto [q, r] = uni_divmod(dehomog_s(p), G);
        if (!r.empty()) throw internal_error("base divisor does not divide a pullback");
        out.sections.push_back(uni_to_poly(q));
    }
    return out;
}

namespace {

long mat_rank(std::vector<std::vector<Rat>> rows) {
    if (rows.empty()) return 0;
    std::size_t cols = rows.front().size();
    long rank = 0;
    std::size_t col = 0;
    while (col < cols && rank < static_cast<long>(rows.size())) {
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
            for (std::size_t j = col; j < cols; ++j)
                rows[i][j] -= f * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
        ++col;
    }
    return rank;
}

UniPoly wronskian_of(const std::vector<UniPoly>& sections) {
    std::size_t n = sections.size();
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n));
    for (std::size_t j = 0; j < n; ++j) {
        UniPoly f = sections[j];
        for (std::size_t k = 0; k < n; ++k) {
            m[k][j] = uni_to_poly(f);
            f = uni_derivative(f);
        }
    }
    return uni_from(poly_det(m));
}

} // namespace

P1Cycle p1_weierstrass_cycle(const std::vector<Polynomial>& sections, int cap) {
    if (sections.empty()) throw input_error("no sections");
    int r = static_cast<int>(sections.size()) - 1;
    std::vector<UniPoly> u;
    std::vector<std::vector<Rat>> coeff_rows;
    for (const auto& s : sections) {
        if (s.arity() != 1) throw input_error("arity mismatch");
        UniPoly f = uni_from(s);
        if (uni_deg(f) > cap) throw input_error("section degree exceeds the cap");
        std::vector<Rat> row(static_cast<std::size_t>(cap + 1), Rat(0));
        for (std::size_t i = 0; i < f.size(); ++i) row[i] = f[i];
        coeff_rows.push_back(std::move(row));
        u.push_back(std::move(f));
    }
    if (mat_rank(coeff_rows) != r + 1) throw input_error("degenerate");

    UniPoly w = wronskian_of(u);
    if (w.empty()) throw input_error("degenerate");

    P1Cycle cycle;
    RootExtraction roots = rational_roots(w);
    for (const auto& [t0, mult] : roots.roots) cycle.add(P1Point::finite(t0), mult);
    cycle.add_unresolved(std::max(uni_deg(roots.residual), 0));

    // multiplicity at infinity on the flipped chart t -> 1/t
    std::vector<UniPoly> flipped;
    for (const auto& f : u) {
        UniPoly g(static_cast<std::size_t>(cap + 1), Rat(0));
        for (std::size_t i = 0; i < f.size(); ++i)
            g[static_cast<std::size_t>(cap) - i] = f[i];
        flipped.push_back(uni_normalize(std::move(g)));
    }
    UniPoly wf = wronskian_of(flipped);
    if (wf.empty()) throw internal_error("flipped system degenerate");
    long at_infinity = 0;
    while (at_infinity <= uni_deg(wf) && wf[static_cast<std::size_t>(at_infinity)] == 0)
        ++at_infinity;
    if (at_infinity > 0) cycle.add(P1Point::infinity(), at_infinity);

    long expected = static_cast<long>(r + 1) * (cap - r);
    if (cycle.total_degree() != expected)
        throw internal_error("Pluecker degree mismatch on the line");
    return cycle;
}

Cycle pushforward(const Parameterization& b, const P1Cycle& c) {
    Cycle out;
    for (const auto& [p, m] : c.entries()) out.add(b.image(p), m);
    out.add_unresolved(c.unresolved());
    return out;
}

namespace {

Series poly_to_series(const Polynomial& p, int precision) {
    assert(p.arity() == 1);
    Series s(precision);
    for (const auto& [m, c] : p.terms())
        if (m[0] < precision) s.coeff(m[0]) = c;
    return s;
}

// chart coordinates of one branch of the parameterization, as series in the
// local parameter at the given preimage
std::array<Series, 2> branch_series(const Parameterization& b, const P1Point& at, Chart chart,
                                    int precision) {
    Polynomial tau = Polynomial::variable(1, 0);
    Polynomial one = Polynomial::constant(1, Rat(1));
    std::vector<Polynomial> images;
    if (at.is_infinite())
        images = {tau, one}; // s = sigma, t = 1
    else
        images = {one, tau + Polynomial::constant(1, at.value())}; // s = 1, t = t0 + tau

    std::array<Series, 3> xyz{Series(precision), Series(precision), Series(precision)};
    for (int i = 0; i < 3; ++i)
        xyz[static_cast<std::size_t>(i)] =
            poly_to_series(b.maps()[static_cast<std::size_t>(i)].compose(images), precision);

    auto pick = [&](int num, int den) {
        Series d = xyz[static_cast<std::size_t>(den)];
        if (d.coeff(0) == 0) throw internal_error("branch leaves the chart");
        return xyz[static_cast<std::size_t>(num)] * d.inverse();
    };
    switch (chart) {
    case Chart::Z: return {pick(0, 2), pick(1, 2)};
    case Chart::Y: return {pick(0, 1), pick(2, 1)};
    case Chart::X: return {pick(1, 0), pick(2, 0)};
    }
    throw internal_error("bad chart");
}

std::vector<Rat> shifted_block(const Series& g, int shift, int branch, int branches) {
    int N = g.precision();
    std::vector<Rat> row(static_cast<std::size_t>(branches * N), Rat(0));
    for (int i = 0; i + shift < N; ++i)
        row[static_cast<std::size_t>(branch * N + i + shift)] = g.coeff(i);
    return row;
}

std::vector<Rat> concat_blocks(const std::vector<Series>& gs) {
    std::vector<Rat> row;
    for (const auto& g : gs)
        for (int i = 0; i < g.precision(); ++i) row.push_back(g.coeff(i));
    return row;
}

} // namespace

long rb_of_sheaf(const SheafRep& s, const Parameterization& b, const ProjPoint& point,
                 int start_precision, int precision_cap) {
    const SingularFiber* fiber = nullptr;
    for (const auto& f : b.fibers())
        if (f.point == point) fiber = &f;
    if (!fiber) throw input_error("point is not a listed singular fiber");

    Chart chart = Chart::Z;
    for (Chart c : all_charts)
        if (chart_coords(point, c)) {
            chart = c;
            break;
        }
    auto pc = chart_coords(point, chart);
    assert(pc);

    std::vector<Polynomial> gens;
    for (const auto& g : s.J().generators())
        if (!g.is_zero()) gens.push_back(dehomogenize(g, chart));
    if (gens.empty()) throw input_error("Y not finite");

    int branches = static_cast<int>(fiber->params.size());
    long prev = -1;
    for (int N = start_precision; N <= precision_cap; N *= 2) {
        std::vector<std::array<Series, 2>> uv;
        for (const auto& p : fiber->params) uv.push_back(branch_series(b, p, chart, N));

        // local-type sanity: branch orders at the point
        Series u0 = Series::constant(N, (*pc)[0]);
        Series v0 = Series::constant(N, (*pc)[1]);
        if (fiber->type == LocalType::Node) {
            std::array<std::array<Rat, 2>, 2> tangents;
            for (int i = 0; i < 2; ++i) {
                Series du = uv[static_cast<std::size_t>(i)][0] - u0;
                Series dv = uv[static_cast<std::size_t>(i)][1] - v0;
                if (std::min(du.order(), dv.order()) != 1)
                    throw input_error("unsupported singularity type");
                tangents[static_cast<std::size_t>(i)] = {du.coeff(1), dv.coeff(1)};
            }
            if (tangents[0][0] * tangents[1][1] - tangents[0][1] * tangents[1][0] == 0)
                throw input_error("unsupported singularity type");
        } else {
            Series du = uv[0][0] - u0;
            Series dv = uv[0][1] - v0;
            int a = du.order(), c = dv.order();
            if (std::min(a, c) != 2) throw input_error("unsupported singularity type");
            if (a != 3 && c != 3) {
                // both of order 2: a combination must reach order exactly 3
                Series lead2 = a == 2 ? du : dv;
                Series other = a == 2 ? dv : du;
                Series adj = other - lead2.scaled(other.coeff(2) / lead2.coeff(2));
                if (adj.order() != 3) throw input_error("unsupported singularity type");
            }
        }

        std::vector<std::vector<Rat>> urows, vrows;
        std::vector<std::vector<Series>> gseries; // per generator, per branch
        for (const auto& g : gens) {
            std::vector<Series> per_branch;
            for (int i = 0; i < branches; ++i)
                per_branch.push_back(Series::eval_poly2(g, uv[static_cast<std::size_t>(i)][0],
                                                        uv[static_cast<std::size_t>(i)][1]));
            gseries.push_back(std::move(per_branch));
        }
        for (const auto& per_branch : gseries) {
            for (int i = 0; i < branches; ++i)
                for (int j = 0; j < N; ++j)
                    urows.push_back(shifted_block(per_branch[static_cast<std::size_t>(i)], j, i,
                                                  branches));
            // O_C rows: constants agree across branches, higher jets free per
            // branch (node), or no linear jet at all (cusp)
            vrows.push_back(concat_blocks(per_branch));
            if (fiber->type == LocalType::Node) {
                for (int i = 0; i < branches; ++i)
                    for (int j = 1; j < N; ++j)
                        vrows.push_back(shifted_block(per_branch[static_cast<std::size_t>(i)], j,
                                                      i, branches));
            } else {
                for (int j = 2; j < N; ++j)
                    vrows.push_back(shifted_block(per_branch[0], j, 0, branches));
            }
        }
        long dim = mat_rank(urows) - mat_rank(vrows);
        if (dim == prev) return dim;
        prev = dim;
    }
    throw resource_error("precision cap exceeded");
}

BirationalComparison birational_comparison(const GenLinearSystem& sys, const Parameterization& b,
                                           int jet_start, int jet_cap) {
    const PlaneCurve& C = sys.sheaf().curve();
    SingularLocus sing = singular_points(C);
    if (sing.residual_degree != 0) throw input_error("unsupported singularity type");
    for (const auto& p : sing.points) {
        bool listed = false;
        for (const auto& f : b.fibers()) listed = listed || f.point == p;
        if (!listed) throw input_error("singular point not listed in fibers");
    }

    int r = sys.rank();
    Cycle R = weierstrass_cycle(sys);
    P1System ps = pullback_system(sys, b);
    P1Cycle rb_cycle = p1_weierstrass_cycle(ps.sections, ps.cap);
    Cycle pushed = pushforward(b, rb_cycle);
    Cycle lhs = R - pushed;

    Cycle delta, rbI;
    for (const auto& f : b.fibers()) {
        delta.add(f.point, 1); // delta = 1 at a node and at a cusp
        rbI.add(f.point, rb_of_sheaf(sys.sheaf(), b, f.point, jet_start, jet_cap));
    }
    Cycle rhs = delta.scaled(static_cast<long>(r + 1) * (r + 1)) - rbI.scaled(r + 1);

    BirationalComparison out{lhs == rhs, lhs, rhs, ""};
    std::ostringstream os;
    os << "R - b_*R(I^b) = " << lhs.to_string() << "; (r+1)^2 R_b - (r+1) R_b(I) = "
       << rhs.to_string();
    out.detail = os.str();
    return out;
}

} // namespace wlab
