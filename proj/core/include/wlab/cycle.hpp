#pragma once

#include "wlab/linear_system.hpp"

#include <map>
#include <string>

namespace wlab {

// A finite formal sum of rational points plus an aggregate degree supported
// at non-rational points. Negative multiplicities only occur in formal
// differences (R is one); effective() reports whether any are present.
class Cycle {
public:
    Cycle() = default;

    void add(const ProjPoint& p, long mult);
    void add_unresolved(long d) { unresolved_ += d; }

    const std::map<ProjPoint, long>& entries() const { return entries_; }
    long unresolved() const { return unresolved_; }
    long total_degree() const;
    long multiplicity_at(const ProjPoint& p) const;
    bool is_zero() const { return entries_.empty() && unresolved_ == 0; }
    bool effective() const;

    Cycle operator+(const Cycle& o) const;
    Cycle operator-(const Cycle& o) const;
    Cycle scaled(long k) const;
    bool operator==(const Cycle& o) const = default;

    // "4*(0:0:1) + [unresolved 3]", "0" for the zero cycle
    std::string to_string() const;

private:
    std::map<ProjPoint, long> entries_;
    long unresolved_ = 0;
};

// The three chart ideals of one subscheme of the plane (curve equation
// included), indexed Z, Y, X.
struct ChartIdeals {
    std::array<Ideal, 3> charts;
    const Ideal& operator[](Chart c) const { return charts[static_cast<std::size_t>(c)]; }
};

ChartIdeals chart_ideals_of_subscheme(const PlaneCurve& C, const Ideal& homogeneous);

// Cycle of a finite subscheme from its chart ideals: lengths from the chart-Z
// quotient plus the z = 0 strata, rational support located by elimination and
// rational-root extraction, the rest aggregated as unresolved degree.
Cycle divisor_cycle(const ChartIdeals& ideals);

// R(I, eps) = [W(L, eps')] - (r+1)[Y]; checks the Plücker degree
// (r+1)(d + r(g-1)) and throws internal_error on mismatch.
Cycle weierstrass_cycle(const GenLinearSystem& sys);

// n-th defect [Y^n] - n[Y]
Cycle defect(const SheafRep& s, int n);

struct IntrinsicScheme {
    ChartIdeals ideals; // transporter ((w)+(F)) : (J^{r+1}+(F)) per chart
    Cycle cycle;
};

IntrinsicScheme intrinsic_scheme(const GenLinearSystem& sys);

struct Verdict {
    bool ok;
    std::string lhs, rhs;
    std::string detail;
};

// R = [Z] + Delta^{r+1}
Verdict decomposition_identity_check(const GenLinearSystem& sys);

} // namespace wlab
