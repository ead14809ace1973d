#include "wlab/monomial.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wlab {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
    for ([[maybe_unused]] int e : exp_) assert(e >= 0);
}

Monomial Monomial::one(int arity) {
    return Monomial(std::vector<int>(static_cast<std::size_t>(arity), 0));
}

Monomial Monomial::var(int arity, int index, int power) {
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(index)] = power;
    return Monomial(std::move(e));
}

int Monomial::degree() const {
    return std::accumulate(exp_.begin(), exp_.end(), 0);
}

Monomial Monomial::operator*(const Monomial& o) const {
    assert(arity() == o.arity());
    std::vector<int> e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += o.exp_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    assert(arity() == o.arity());
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > o.exp_[i]) return false;
    return true;
}

Monomial Monomial::divided_into(const Monomial& o) const {
    assert(divides(o));
    std::vector<int> e(o.exp_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= exp_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    assert(a.arity() == b.arity());
    std::vector<int> e(a.exp_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exp_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    assert(arity() == o.arity());
    for (std::size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > 0 && o.exp_[i] > 0) return false;
    return true;
}

} // namespace wlab
