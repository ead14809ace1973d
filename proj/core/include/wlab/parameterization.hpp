#pragma once

#include "wlab/cycle.hpp"
#include "wlab/univariate.hpp"

#include <array>
#include <vector>

namespace wlab {

// Binary-form helpers (forms in (s, t); the affine parameter is t at s = 1).
UniPoly dehomog_s(const Polynomial& form);
int binary_gcd_degree(const std::vector<Polynomial>& forms);

// A point of the projective line: a rational parameter value or infinity.
class P1Point {
public:
    static P1Point finite(const Rat& t);
    static P1Point infinity();

    bool is_infinite() const { return infinite_; }
    const Rat& value() const { return t_; }

    bool operator==(const P1Point& o) const = default;
    bool operator<(const P1Point& o) const; // finite values first, infinity last

    std::string to_string() const; // "t=-1", "t=inf"

private:
    bool infinite_ = false;
    Rat t_ = Rat(0);
};

enum class LocalType { Node, Cusp };

struct SingularFiber {
    ProjPoint point;
    std::vector<P1Point> params; // two for a node, one for a cusp
    LocalType type;
};

// A birational map P^1 -> C given by three coprime binary forms of common
// degree equal to the curve degree, with the fibers over the singular points
// declared up front.
class Parameterization {
public:
    static Parameterization make(PlaneCurve curve, std::array<Polynomial, 3> maps,
                                 std::vector<SingularFiber> fibers);

    const PlaneCurve& curve() const { return curve_; }
    const std::array<Polynomial, 3>& maps() const { return maps_; }
    const std::vector<SingularFiber>& fibers() const { return fibers_; }

    ProjPoint image(const P1Point& p) const;

private:
    Parameterization(PlaneCurve curve, std::array<Polynomial, 3> maps,
                     std::vector<SingularFiber> fibers)
        : curve_(std::move(curve)), maps_(std::move(maps)), fibers_(std::move(fibers)) {}
    PlaneCurve curve_;
    std::array<Polynomial, 3> maps_;
    std::vector<SingularFiber> fibers_;
};

} // namespace wlab
