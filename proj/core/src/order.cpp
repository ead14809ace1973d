#include "wlab/order.hpp"

#include <cassert>

namespace wlab {

namespace {

// a > b in degrevlex on the variable range [lo, hi)
bool degrevlex_greater(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a[i];
        db += b[i];
    }
    if (da != db) return da > db;
    // equal degree: the one with the smaller exponent on the last differing
    // variable is larger
    for (int i = hi - 1; i >= lo; --i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool lex_greater(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

} // namespace

bool MonomialOrder::greater(const Monomial& a, const Monomial& b) const {
    assert(a.arity() == b.arity());
    switch (kind_) {
    case Kind::Lex:
        return lex_greater(a, b);
    case Kind::Degrevlex:
        return degrevlex_greater(a, b, 0, a.arity());
    case Kind::Block: {
        assert(split_ > 0 && split_ < a.arity());
        bool agtb = degrevlex_greater(a, b, 0, split_);
        if (agtb || degrevlex_greater(b, a, 0, split_)) return agtb;
        return degrevlex_greater(a, b, split_, a.arity());
    }
    }
    return false;
}

} // namespace wlab
