#pragma once

#include "wlab/groebner.hpp"
#include "wlab/ideal.hpp"
#include "wlab/polynomial.hpp"
#include "wlab/projective.hpp"

#include <array>
#include <optional>
#include <vector>

namespace wlab {

// The three standard affine charts of the plane. Chart coordinates (u, v):
//   Z: u = x/z, v = y/z      Y: u = x/y, v = z/y      X: u = y/x, v = z/x
enum class Chart { Z = 0, Y = 1, X = 2 };

constexpr std::array<Chart, 3> all_charts{Chart::Z, Chart::Y, Chart::X};

struct AffineChart {
    Chart which;
    Polynomial f; // chart equation in (u, v)
};

// Set the chart variable to 1 in a ternary form; result lives in (u, v).
Polynomial dehomogenize(const Polynomial& F, Chart which);
// Same for a family form in (x, y, z, t); result lives in (u, v, t).
Polynomial dehomogenize_family(const Polynomial& Ft, Chart which);

// Chart coordinates of a point visible in the chart (nullopt otherwise).
std::optional<std::array<Rat, 2>> chart_coords(const ProjPoint& p, Chart which);
ProjPoint point_from_chart(Chart which, const Rat& u, const Rat& v);

// A reduced plane projective curve with user-declared components.
class PlaneCurve {
public:
    // Validates: homogeneous of positive degree in (x, y, z), square-free
    // (finite singular locus), and components multiplying back to F.
    static PlaneCurve make(const Polynomial& F, std::vector<Polynomial> components = {});

    const Polynomial& form() const { return F_; }
    int degree() const { return degree_; }
    int genus() const;
    const std::vector<Polynomial>& components() const { return components_; }
    int connected_components() const { return 1; } // plane curves are connected

    AffineChart chart(Chart which) const;

private:
    PlaneCurve(Polynomial F, int degree, std::vector<Polynomial> components)
        : F_(std::move(F)), degree_(degree), components_(std::move(components)) {}
    Polynomial F_;
    int degree_;
    std::vector<Polynomial> components_;
};

int arithmetic_genus(const PlaneCurve& C);

struct SingularLocus {
    std::vector<ProjPoint> points; // rational singular points
    long residual_degree;          // non-rational ones, by leftover eliminant degree
};
SingularLocus singular_points(const PlaneCurve& C);

// The operator D(g) = F_v g_u - F_u g_v on a chart; kills the chart equation,
// so it descends to the curve and trivializes the dualizing sheaf there.
class Derivation {
public:
    Derivation(AffineChart chart);
    const AffineChart& chart() const { return chart_; }
    Polynomial operator()(const Polynomial& g) const;
    // apply and reduce modulo the chart equation
    Polynomial apply_mod(const Polynomial& g, const GroebnerBasis& chart_eq) const;

private:
    AffineChart chart_;
    Polynomial fu_, fv_;
};

Derivation dualizing_derivation(const PlaneCurve& C, Chart which);

} // namespace wlab
