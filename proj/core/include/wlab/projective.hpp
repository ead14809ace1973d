#pragma once

#include "wlab/rational.hpp"

#include <array>
#include <string>

namespace wlab {

// A rational point of the projective plane, stored canonically: coprime
// integer coordinates with the first nonzero one positive.
class ProjPoint {
public:
    static ProjPoint make(const Rat& x, const Rat& y, const Rat& z);

    const std::array<Rat, 3>& coords() const { return c_; }
    const Rat& x() const { return c_[0]; }
    const Rat& y() const { return c_[1]; }
    const Rat& z() const { return c_[2]; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator<(const ProjPoint& o) const; // structural, for map keys

    std::string to_string() const; // "(0:0:1)"

private:
    std::array<Rat, 3> c_;
};

} // namespace wlab
