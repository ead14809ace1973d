#pragma once

#include "wlab/polynomial.hpp"

#include <vector>

namespace wlab {

struct GroebnerOptions {
    long pair_cap = 200000; // aborts with "resource limit exceeded" when hit
};

// A reduced Groebner basis: monic elements, no element's term divisible by
// another element's leading term, sorted ascending by leading monomial.
// Reduced bases are unique per (ideal, order), so equality of bases is
// equality of ideals.
class GroebnerBasis {
public:
    GroebnerBasis(int arity, MonomialOrder order, std::vector<Polynomial> elements);

    int arity() const { return arity_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& elements() const { return elements_; }
    bool is_trivial() const; // the whole ring
    bool is_zero() const { return elements_.empty(); }
    bool contains(const Polynomial& p) const;
    bool operator==(const GroebnerBasis& o) const;

private:
    int arity_;
    MonomialOrder order_;
    std::vector<Polynomial> elements_;
};

// Buchberger with normal selection (sugar-degree pair ordering, lcm
// tie-break) and both classical criteria; returns the reduced basis.
GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder order,
                       const GroebnerOptions& opts = {});

// Unique remainder of p modulo the basis; zero iff p lies in the ideal.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);

} // namespace wlab
