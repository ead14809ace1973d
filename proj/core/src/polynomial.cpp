#include "wlab/polynomial.hpp"

#include "wlab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace wlab {

Polynomial Polynomial::constant(int arity, const Rat& c) {
    Polynomial p(arity);
    p.add_term(Monomial::one(arity), c);
    return p;
}

Polynomial Polynomial::variable(int arity, int index) {
    Polynomial p(arity);
    p.add_term(Monomial::var(arity, index), Rat(1));
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Rat& c) {
    Polynomial p(m.arity());
    p.add_term(m, c);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

Rat Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat Polynomial::constant_value() const {
    assert(is_constant());
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    assert(arity_ == o.arity_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    assert(arity_ == o.arity_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial p(*this);
    p += o;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    Polynomial p(*this);
    p -= o;
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    assert(arity_ == o.arity_);
    Polynomial p(arity_);
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) p.add_term(m1 * m2, c1 * c2);
    return p;
}

Polynomial operator*(const Rat& c, const Polynomial& p) {
    Polynomial q(p.arity_);
    if (c == 0) return q;
    for (const auto& [m, a] : p.terms_) q.terms_.emplace(m, c * a);
    return q;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rat& c) const {
    Polynomial q(arity_);
    if (c == 0) return q;
    for (const auto& [mm, a] : terms_) q.terms_.emplace(mm * m, c * a);
    return q;
}

Polynomial Polynomial::pow(int n) const {
    assert(n >= 0);
    Polynomial r = Polynomial::constant(arity_, Rat(1));
    Polynomial base(*this);
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    if (var >= arity_) throw input_error("arity mismatch");
    Polynomial p(arity_);
    for (const auto& [m, c] : terms_) {
        int e = m[var];
        if (e == 0) continue;
        std::vector<int> ex = m.exponents();
        ex[static_cast<std::size_t>(var)] = e - 1;
        p.add_term(Monomial(std::move(ex)), c * e);
    }
    return p;
}

std::pair<Monomial, Rat> Polynomial::leading(const MonomialOrder& order) const {
    assert(!is_zero());
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    assert(value.arity() == arity_);
    Polynomial result(arity_);
    // group by exponent of var to reuse powers
    std::map<int, Polynomial> by_exp;
    for (const auto& [m, c] : terms_) {
        std::vector<int> ex = m.exponents();
        int e = ex[static_cast<std::size_t>(var)];
        ex[static_cast<std::size_t>(var)] = 0;
        auto [it, ins] = by_exp.emplace(e, Polynomial(arity_));
        it->second.add_term(Monomial(std::move(ex)), c);
    }
    for (const auto& [e, part] : by_exp) result += part * value.pow(e);
    return result;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
    assert(static_cast<int>(images.size()) == arity_);
    int target = images.empty() ? 0 : images.front().arity();
    Polynomial result(target);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target, c);
        for (int i = 0; i < arity_; ++i)
            if (m[i] > 0) t = t * images[static_cast<std::size_t>(i)].pow(m[i]);
        result += t;
    }
    return result;
}

Rat Polynomial::evaluate(const std::vector<Rat>& point) const {
    assert(static_cast<int>(point.size()) == arity_);
    Rat total(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (int i = 0; i < arity_; ++i)
            for (int k = 0; k < m[i]; ++k) v *= point[static_cast<std::size_t>(i)];
        total += v;
    }
    return total;
}

Polynomial Polynomial::insert_variables(int position, int count) const {
    Polynomial p(arity_ + count);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e = m.exponents();
        e.insert(e.begin() + position, static_cast<std::size_t>(count), 0);
        p.terms_.emplace(Monomial(std::move(e)), c);
    }
    return p;
}

Polynomial Polynomial::remove_variables(int position, int count) const {
    Polynomial p(arity_ - count);
    for (const auto& [m, c] : terms_) {
        std::vector<int> e = m.exponents();
        for (int i = 0; i < count; ++i) assert(e[static_cast<std::size_t>(position + i)] == 0);
        e.erase(e.begin() + position, e.begin() + position + count);
        p.terms_.emplace(Monomial(std::move(e)), c);
    }
    return p;
}

Rat Polynomial::content() const {
    if (terms_.empty()) return Rat(0);
    Int den_lcm = 1;
    for (const auto& [m, c] : terms_) den_lcm = lcm(den_lcm, rat_den(c));
    Int num_gcd = 0;
    for (const auto& [m, c] : terms_) {
        Int scaled = rat_num(c) * (den_lcm / rat_den(c));
        num_gcd = gcd(num_gcd, scaled);
    }
    return Rat(num_gcd, den_lcm);
}

Polynomial Polynomial::primitive(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    Rat c = content();
    if (leading(order).second < 0) c = -c;
    return Rat(1 / c) * (*this);
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return Rat(1 / leading(order).second) * (*this);
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    std::size_t n = m.size();
    if (n == 1) return m[0][0];
    int arity = m[0][0].arity();
    Polynomial total(arity);
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i][0].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        minor.reserve(n - 1);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i) continue;
            minor.push_back(std::vector<Polynomial>(m[r].begin() + 1, m[r].end()));
        }
        Polynomial cof = m[i][0] * poly_det(minor);
        if (i % 2 == 0)
            total += cof;
        else
            total -= cof;
    }
    return total;
}

std::string Polynomial::to_string(const std::vector<std::string>& vars) const {
    assert(static_cast<int>(vars.size()) == arity_);
    if (terms_.empty()) return "0";
    // canonical display order: descending degrevlex
    std::vector<const std::pair<const Monomial, Rat>*> sorted;
    sorted.reserve(terms_.size());
    for (const auto& t : terms_) sorted.push_back(&t);
    MonomialOrder ord = MonomialOrder::degrevlex();
    std::sort(sorted.begin(), sorted.end(), [&](auto* a, auto* b) {
        if (a->first == b->first) return false;
        return ord.greater(a->first, b->first);
    });

    std::ostringstream os;
    bool first = true;
    for (auto* t : sorted) {
        const auto& [m, c] = *t;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool has_vars = m.degree() > 0;
        if (!has_vars || a != 1) {
            os << rat_to_string(a);
            if (has_vars) os << "*";
        }
        bool started = false;
        for (int i = 0; i < arity_; ++i) {
            if (m[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << vars[static_cast<std::size_t>(i)];
            if (m[i] > 1) os << "^" << m[i];
        }
    }
    return os.str();
}

} // namespace wlab
