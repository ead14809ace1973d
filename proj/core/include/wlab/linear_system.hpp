#pragma once

#include "wlab/ideal.hpp"
#include "wlab/plane_curve.hpp"

#include <string>
#include <vector>

namespace wlab {

// Fractional-ideal presentation I = I_{Y/C}(m) of a torsion-free rank-1
// sheaf: a twist m and a homogeneous ideal J cutting the finite subscheme Y
// on the curve. Invertible sheaves have J = (1).
class SheafRep {
public:
    // Validates that V(J) meets the curve in a finite subscheme.
    static SheafRep make(PlaneCurve curve, int twist, Ideal J);

    const PlaneCurve& curve() const { return curve_; }
    int twist() const { return twist_; }
    const Ideal& J() const { return J_; }

    // (J + (F)) dehomogenized on a chart
    Ideal chart_ideal(Chart which) const;

private:
    SheafRep(PlaneCurve curve, int twist, Ideal J)
        : curve_(std::move(curve)), twist_(twist), J_(std::move(J)) {}
    PlaneCurve curve_;
    int twist_;
    Ideal J_;
};

// deg I = e*m - deg[Y]
int sheaf_degree(const SheafRep& s);

// A generalized linear system: the sheaf plus r+1 degree-m forms that are
// genuine global sections (members of (J + (F))). Independence is not
// enforced here; check_nondegenerate reports on it.
class GenLinearSystem {
public:
    static GenLinearSystem make(SheafRep sheaf, std::vector<Polynomial> sections);

    const SheafRep& sheaf() const { return sheaf_; }
    const std::vector<Polynomial>& sections() const { return sections_; }
    int rank() const { return static_cast<int>(sections_.size()) - 1; }

private:
    GenLinearSystem(SheafRep sheaf, std::vector<Polynomial> sections)
        : sheaf_(std::move(sheaf)), sections_(std::move(sections)) {}
    SheafRep sheaf_;
    std::vector<Polynomial> sections_;
};

struct NondegeneracyReport {
    bool nondegenerate;          // sections independent modulo F
    bool strongly_nondegenerate; // independent modulo every declared component
    std::string detail;          // failing component, when any
};

NondegeneracyReport check_nondegenerate(const GenLinearSystem& sys);

struct WronskianResult {
    std::vector<std::pair<AffineChart, Polynomial>> per_chart; // all three charts
};

// Per chart: dehomogenize sections, stack rows D^k(f_i), take the
// determinant, reduce modulo the chart equation, strip content.
// Throws input_error("degenerate system") when the result dies on a
// component.
WronskianResult wronskian(const GenLinearSystem& sys);

// (w) + (F_aff) on the chart
Ideal weierstrass_divisor_ideal(const GenLinearSystem& sys, Chart which);

} // namespace wlab
