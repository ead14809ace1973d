#pragma once

#include "wlab/parameterization.hpp"

#include <map>

namespace wlab {

// The induced system on P^1: univariate sections inside O(cap), obtained by
// pulling sections back along the parameterization and dividing out the
// common base divisor (the gcd of the pullbacks).
struct P1System {
    std::vector<Polynomial> sections; // arity 1, degrees <= cap
    int cap;
};

P1System pullback_system(const GenLinearSystem& sys, const Parameterization& b);

class P1Cycle {
public:
    void add(const P1Point& p, long mult);
    void add_unresolved(long d) { unresolved_ += d; }
    const std::map<P1Point, long>& entries() const { return entries_; }
    long unresolved() const { return unresolved_; }
    long total_degree() const;
    bool is_zero() const { return entries_.empty() && unresolved_ == 0; }
    bool operator==(const P1Cycle& o) const = default;
    std::string to_string() const;

private:
    std::map<P1Point, long> entries_;
    long unresolved_ = 0;
};

// Classical Wronskian cycle of univariate sections of O(cap): rational zeros
// with multiplicity, multiplicity at infinity from the flipped chart, and the
// Plücker total (r+1)(cap - r) as a cross-check.
P1Cycle p1_weierstrass_cycle(const std::vector<Polynomial>& sections, int cap);

// Proper pushforward: parameter points map to their images, colliding fibers
// add up, unresolved degree passes through.
Cycle pushforward(const Parameterization& b, const P1Cycle& c);

// Local length of (J·O†)/(J·O_C) at a declared singular fiber, by linear
// algebra on jets truncated at increasing precision.
long rb_of_sheaf(const SheafRep& s, const Parameterization& b, const ProjPoint& point,
                 int start_precision = 4, int precision_cap = 64);

struct BirationalComparison {
    bool ok;
    Cycle lhs, rhs; // R - b_* R(I^b)  vs  (r+1)^2 R_b - (r+1) R_b(I)
    std::string detail;
};

BirationalComparison birational_comparison(const GenLinearSystem& sys, const Parameterization& b,
                                           int jet_start = 4, int jet_cap = 64);

} // namespace wlab
