#pragma once

#include "wlab/monomial.hpp"

namespace wlab {

// Monomial orders: degrevlex, lex, and a block order that makes the first
// `split` variables dominate (an elimination order for them).
class MonomialOrder {
public:
    enum class Kind { Degrevlex, Lex, Block };

    static MonomialOrder degrevlex() { return MonomialOrder(Kind::Degrevlex, 0); }
    static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
    static MonomialOrder block(int split) { return MonomialOrder(Kind::Block, split); }

    Kind kind() const { return kind_; }
    int split() const { return split_; }

    bool greater(const Monomial& a, const Monomial& b) const;
    bool operator==(const MonomialOrder& o) const = default;

private:
    MonomialOrder(Kind k, int s) : kind_(k), split_(s) {}
    Kind kind_;
    int split_;
};

} // namespace wlab
