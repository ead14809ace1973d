#pragma once

#include "wlab/groebner.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace wlab {

// An ideal given by generators, with lazily computed, shared Groebner bases
// (one per order requested so far). Value semantics; the cache is immutable
// once entries are appended, so sharing it across copies and threads is safe.
class Ideal {
public:
    explicit Ideal(int arity) : arity_(arity), cache_(std::make_shared<Cache>()) {}
    Ideal(int arity, std::vector<Polynomial> gens);

    static Ideal unit(int arity);
    static Ideal principal(const Polynomial& p);

    int arity() const { return arity_; }
    const std::vector<Polynomial>& generators() const { return gens_; }
    bool is_zero_ideal() const; // no nonzero generator

    const GroebnerBasis& basis(MonomialOrder order = MonomialOrder::degrevlex(),
                               const GroebnerOptions& opts = {}) const;

private:
    struct Cache {
        std::mutex mu;
        std::vector<std::shared_ptr<const GroebnerBasis>> entries;
    };
    int arity_;
    std::vector<Polynomial> gens_;
    std::shared_ptr<Cache> cache_;
};

bool ideal_contains(const Ideal& A, const Polynomial& p);
bool ideal_subset(const Ideal& A, const Ideal& B); // A subseteq B
bool ideal_equal(const Ideal& A, const Ideal& B);

Ideal ideal_sum(const Ideal& A, const Ideal& B);
Ideal ideal_product(const Ideal& A, const Ideal& B);
Ideal ideal_power(const Ideal& A, int n);

// (x_0,...,x_{arity-1})^n
Ideal maximal_power(int arity, int n);

Ideal intersect(const Ideal& A, const Ideal& B);

// (A : B) = { h : h*B subseteq A }, via intersection with principal ideals.
Ideal ideal_quotient(const Ideal& A, const Ideal& B);

// (A : B^inf); iterates ideal_quotient until two consecutive reduced bases
// agree. max_rounds guards against runaway input.
Ideal saturate(const Ideal& A, const Ideal& B, int max_rounds = 64);

// A ∩ k[x_count, ..., x_{arity-1}], returned in the smaller ring.
Ideal eliminate(const Ideal& A, int count);

// Dimension of ring/A as a rational vector space; nullopt when infinite.
std::optional<long> quotient_dim(const Ideal& A);

// Length of the local ring of ring/A at the given point, by m-adic
// stabilization; throws resource_error("not isolated") past the cap.
long local_multiplicity(const Ideal& A, const std::vector<Rat>& point, int madic_cap = 64);

// Total length of the part of the finite scheme V(A) supported on the
// hyperplane {x_var = 0}; pre: quotient_dim(A) finite.
long multiplicity_along(const Ideal& A, int var, int cap = 64);

// Rational points of a finite plane scheme: rational roots of the
// v-eliminant, then of the fiber gcd over each. pre: quotient_dim(A) finite.
std::vector<std::array<Rat, 2>> rational_points_2d(const Ideal& A);

// Reduced, integer-primitive, sorted generators; the canonical presentation
// used for printing and golden comparisons.
std::vector<Polynomial> canonical_generators(const Ideal& A);

// Substitute a value for one variable in every generator and drop it.
Ideal specialize(const Ideal& A, int var, const Rat& value);

} // namespace wlab
