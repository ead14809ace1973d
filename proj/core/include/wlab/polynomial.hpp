#pragma once

#include "wlab/monomial.hpp"
#include "wlab/order.hpp"
#include "wlab/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace wlab {

// Sparse multivariate polynomial over the rationals. Terms are kept in a
// structurally ordered map with no zero coefficients; equality is term-map
// equality. The arity is fixed at construction and all arguments must match.
class Polynomial {
public:
    Polynomial() = default; // zero in the 0-variable ring
    explicit Polynomial(int arity) : arity_(arity) {}

    static Polynomial zero(int arity) { return Polynomial(arity); }
    static Polynomial constant(int arity, const Rat& c);
    static Polynomial variable(int arity, int index);
    static Polynomial term(const Monomial& m, const Rat& c);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    int total_degree() const; // -1 for the zero polynomial
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    Rat coeff(const Monomial& m) const;
    bool is_constant() const;
    Rat constant_value() const; // pre: is_constant()

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator*(const Rat& c, const Polynomial& p);
    bool operator==(const Polynomial& o) const = default;

    Polynomial times_term(const Monomial& m, const Rat& c) const;
    Polynomial pow(int n) const;
    Polynomial derivative(int var) const;

    std::pair<Monomial, Rat> leading(const MonomialOrder& order) const; // pre: !is_zero()

    bool is_homogeneous() const; // zero counts as homogeneous

    // Substitute one variable by a polynomial of the same ring.
    Polynomial substitute(int var, const Polynomial& value) const;
    // Evaluate at a tuple of polynomials living in a common (other) ring.
    Polynomial compose(const std::vector<Polynomial>& images) const;
    Rat evaluate(const std::vector<Rat>& point) const;

    // Ring reshaping. remove_variables requires the removed variables unused.
    Polynomial insert_variables(int position, int count) const;
    Polynomial remove_variables(int position, int count) const;

    // Positive rational c with p = c * (integer-coprime-coefficient poly).
    Rat content() const;
    Polynomial primitive(const MonomialOrder& order) const; // content 1, leading coeff > 0
    Polynomial monic(const MonomialOrder& order) const;

    // Canonical rendering: terms in descending degrevlex.
    std::string to_string(const std::vector<std::string>& vars) const;

private:
    void add_term(const Monomial& m, const Rat& c);

    int arity_ = 0;
    std::map<Monomial, Rat> terms_;
};

// Determinant of a square matrix of polynomials, by Laplace expansion along
// the first column; adequate for the small Wronskian matrices used here.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

} // namespace wlab
