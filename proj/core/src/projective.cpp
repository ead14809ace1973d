#include "wlab/projective.hpp"

#include "wlab/errors.hpp"

#include <sstream>

namespace wlab {

ProjPoint ProjPoint::make(const Rat& x, const Rat& y, const Rat& z) {
    if (x == 0 && y == 0 && z == 0) throw input_error("projective point with all coordinates zero");
    ProjPoint p;
    p.c_ = {x, y, z};
    Int den = 1;
    for (const auto& c : p.c_) den = lcm(den, rat_den(c));
    Int g = 0;
    for (auto& c : p.c_) {
        c *= den;
        g = gcd(g, rat_num(c));
    }
    for (auto& c : p.c_) c /= g;
    for (const auto& c : p.c_) {
        if (c == 0) continue;
        if (c < 0)
            for (auto& d : p.c_) d = -d;
        break;
    }
    return p;
}

bool ProjPoint::operator<(const ProjPoint& o) const {
    for (int i = 0; i < 3; ++i) {
        if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)])
            return c_[static_cast<std::size_t>(i)] < o.c_[static_cast<std::size_t>(i)];
    }
    return false;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "(" << rat_to_string(c_[0]) << ":" << rat_to_string(c_[1]) << ":" << rat_to_string(c_[2])
       << ")";
    return os.str();
}

} // namespace wlab
