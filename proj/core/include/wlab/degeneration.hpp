#pragma once

#include "wlab/cycle.hpp"

#include <optional>

namespace wlab {

// A one-parameter family over the ring in t: a form F_t in (x, y, z, t)
// homogeneous of fixed degree in (x, y, z), ideal generators J_t and r+1
// section forms of fixed (x, y, z)-degree, all with polynomial t-coefficients.
class FamilySystem {
public:
    static FamilySystem make(Polynomial Ft, std::vector<Polynomial> Jt,
                             std::vector<Polynomial> sections_t);

    const Polynomial& form() const { return Ft_; }
    const std::vector<Polynomial>& J() const { return Jt_; }
    const std::vector<Polynomial>& sections() const { return sections_t_; }
    const GenLinearSystem& special() const { return special_; }
    int rank() const { return static_cast<int>(sections_t_.size()) - 1; }

    // the fiber system at a nonzero rational parameter value
    GenLinearSystem fiber(const Rat& t0) const;

private:
    FamilySystem(Polynomial Ft, std::vector<Polynomial> Jt, std::vector<Polynomial> sections_t,
                 GenLinearSystem special)
        : Ft_(std::move(Ft)), Jt_(std::move(Jt)), sections_t_(std::move(sections_t)),
          special_(std::move(special)) {}
    Polynomial Ft_;
    std::vector<Polynomial> Jt_;
    std::vector<Polynomial> sections_t_;
    GenLinearSystem special_;
};

// Wronskian of the family on a chart, in (u, v, t): same determinant with the
// derivation D = (F_t)_v d_u - (F_t)_u d_v, t a constant of the derivation;
// reduced modulo F_t.
Polynomial family_wronskian(const FamilySystem& fam, Chart which);

// (w_t) + (F_t) on a chart — the relative Weierstrass-divisor ideal, used by
// the flatness probe (nearby fibers keep the full Pluecker degree).
Ideal family_divisor_ideal(const FamilySystem& fam, Chart which);

struct LimitScheme {
    ChartIdeals ideals; // the t = 0 fiber of the closed family, per chart
    Cycle cycle;
};

// Schematic closure of the generic-fiber Weierstrass schemes and its special
// fiber: per chart, the transporter ((w_t)+(F_t)) : (J_t^{r+1}+(F_t)) is
// saturated by (t) and then specialized at t = 0.
LimitScheme flat_limit(const FamilySystem& fam, int sat_rounds = 64);

struct LimitChecks {
    bool containment;           // limit ideal inside the intrinsic ideal
    bool cycle_matches;         // [W(s)] equals R(I(0), eps_0)
    Cycle limit_cycle;
    Cycle special_weierstrass;  // R of the special system
    LimitScheme limit;          // recorded for comparisons across families
    std::string detail;
};

LimitChecks limit_checks(const FamilySystem& fam);

// When the limit ideal at a chart-visible point has the shape
// (a*u*v + b*v^2) + (u,v)^3 modulo the special chart equation, report (a : b)
// normalized to b = 1 when b != 0, else (1 : 0).
std::optional<std::pair<Rat, Rat>> node_limit_shape(const Ideal& limit_chart_ideal,
                                                    const Polynomial& special_chart_eq,
                                                    const std::array<Rat, 2>& point);

} // namespace wlab
