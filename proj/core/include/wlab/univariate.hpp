#pragma once

#include "wlab/polynomial.hpp"

#include <utility>
#include <vector>

namespace wlab {

// Dense univariate polynomials over the rationals: coefficient of t^i at
// index i, no trailing zero (the zero polynomial is the empty vector).
using UniPoly = std::vector<Rat>;

UniPoly uni_normalize(UniPoly p);
int uni_deg(const UniPoly& p); // -1 for zero
UniPoly uni_from(const Polynomial& p); // pre: arity 1
Polynomial uni_to_poly(const UniPoly& p);
Rat uni_eval(const UniPoly& p, const Rat& x);
UniPoly uni_derivative(const UniPoly& p);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b);
UniPoly uni_gcd(UniPoly a, UniPoly b); // monic

struct RootExtraction {
    std::vector<std::pair<Rat, int>> roots; // sorted by value, with multiplicity
    UniPoly residual;                       // rational-root-free cofactor
};

// All rational roots with multiplicity (rational root theorem + trial
// division of integer endpoints).
RootExtraction rational_roots(const UniPoly& p);

} // namespace wlab
