#pragma once

#include "wlab/polynomial.hpp"

#include <vector>

namespace wlab {

// Power series in one local parameter, truncated at a fixed precision.
class Series {
public:
    explicit Series(int precision) : c_(static_cast<std::size_t>(precision), Rat(0)) {}
    static Series constant(int precision, const Rat& value);
    static Series var(int precision);

    int precision() const { return static_cast<int>(c_.size()); }
    const Rat& coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    Rat& coeff(int i) { return c_[static_cast<std::size_t>(i)]; }
    bool is_zero() const;
    int order() const; // valuation; precision() when zero

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series scaled(const Rat& f) const;
    Series inverse() const; // pre: coeff(0) != 0
    Series pow(int n) const;

    // g(U, V) for a 2-variable polynomial g
    static Series eval_poly2(const Polynomial& g, const Series& U, const Series& V);

private:
    std::vector<Rat> c_;
};

} // namespace wlab
