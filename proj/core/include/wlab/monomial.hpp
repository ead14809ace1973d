#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace wlab {

// Exponent vector of a monomial in a ring of fixed arity.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exponents);
    static Monomial one(int arity);
    static Monomial var(int arity, int index, int power = 1);

    int arity() const { return static_cast<int>(exp_.size()); }
    int degree() const;
    int operator[](int i) const { return exp_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& exponents() const { return exp_; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;          // this | o
    Monomial divided_into(const Monomial& o) const; // o / this, pre: divides(o)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime(const Monomial& o) const;

    // Structural order, used only as a container key.
    auto operator<=>(const Monomial& o) const = default;

private:
    std::vector<int> exp_;
};

} // namespace wlab
