#include "wlab/series.hpp"

#include "wlab/errors.hpp"

#include <cassert>

namespace wlab {

Series Series::constant(int precision, const Rat& value) {
    Series s(precision);
    s.c_[0] = value;
    return s;
}

Series Series::var(int precision) {
    Series s(precision);
    if (precision > 1) s.c_[1] = Rat(1);
    return s;
}

bool Series::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

int Series::order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return precision();
}

Series Series::operator+(const Series& o) const {
    assert(precision() == o.precision());
    Series s(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] += o.c_[i];
    return s;
}

Series Series::operator-(const Series& o) const {
    assert(precision() == o.precision());
    Series s(*this);
    for (std::size_t i = 0; i < c_.size(); ++i) s.c_[i] -= o.c_[i];
    return s;
}

Series Series::operator*(const Series& o) const {
    assert(precision() == o.precision());
    Series s(precision());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; i + j < c_.size(); ++j) s.c_[i + j] += c_[i] * o.c_[j];
    }
    return s;
}

Series Series::scaled(const Rat& f) const {
    Series s(*this);
    for (auto& c : s.c_) c *= f;
    return s;
}

Series Series::inverse() const {
    if (c_[0] == 0) throw internal_error("series not invertible");
    Series b(precision());
    b.c_[0] = 1 / c_[0];
    for (std::size_t n = 1; n < c_.size(); ++n) {
        Rat acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += c_[k] * b.c_[n - k];
        b.c_[n] = -acc / c_[0];
    }
    return b;
}

Series Series::pow(int n) const {
    assert(n >= 0);
    Series r = Series::constant(precision(), Rat(1));
    Series base(*this);
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

Series Series::eval_poly2(const Polynomial& g, const Series& U, const Series& V) {
    assert(g.arity() == 2);
    Series total(U.precision());
    for (const auto& [m, c] : g.terms())
        total = total + (U.pow(m[0]) * V.pow(m[1])).scaled(c);
    return total;
}

} // namespace wlab
