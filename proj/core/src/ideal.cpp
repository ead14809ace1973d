#include "wlab/ideal.hpp"

#include "wlab/errors.hpp"
#include "wlab/univariate.hpp"

#include <algorithm>
#include <array>
#include <cassert>

namespace wlab {

Ideal::Ideal(int arity, std::vector<Polynomial> gens)
    : arity_(arity), gens_(std::move(gens)), cache_(std::make_shared<Cache>()) {
    for (const auto& g : gens_)
        if (g.arity() != arity_) throw input_error("arity mismatch");
}

Ideal Ideal::unit(int arity) {
    return Ideal(arity, {Polynomial::constant(arity, Rat(1))});
}

Ideal Ideal::principal(const Polynomial& p) {
    return Ideal(p.arity(), {p});
}

bool Ideal::is_zero_ideal() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_zero(); });
}

const GroebnerBasis& Ideal::basis(MonomialOrder order, const GroebnerOptions& opts) const {
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& e : cache_->entries)
        if (e->order() == order) return *e;
    auto computed = std::make_shared<const GroebnerBasis>(groebner(gens_, order, opts));
    cache_->entries.push_back(computed);
    return *computed;
}

bool ideal_contains(const Ideal& A, const Polynomial& p) {
    return A.basis().contains(p);
}

bool ideal_subset(const Ideal& A, const Ideal& B) {
    const auto& gb = B.basis();
    for (const auto& g : A.generators())
        if (!gb.contains(g)) return false;
    return true;
}

bool ideal_equal(const Ideal& A, const Ideal& B) {
    return A.basis() == B.basis();
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    assert(A.arity() == B.arity());
    std::vector<Polynomial> gens = A.generators();
    gens.insert(gens.end(), B.generators().begin(), B.generators().end());
    return Ideal(A.arity(), std::move(gens));
}

Ideal ideal_product(const Ideal& A, const Ideal& B) {
    assert(A.arity() == B.arity());
    std::vector<Polynomial> gens;
    for (const auto& a : A.generators())
        for (const auto& b : B.generators()) {
            Polynomial p = a * b;
            if (!p.is_zero()) gens.push_back(std::move(p));
        }
    return Ideal(A.arity(), std::move(gens));
}

Ideal ideal_power(const Ideal& A, int n) {
    assert(n >= 0);
    if (n == 0) return Ideal::unit(A.arity());
    Ideal r = A;
    for (int i = 1; i < n; ++i) r = ideal_product(r, A);
    return r;
}

Ideal maximal_power(int arity, int n) {
    assert(n >= 1);
    std::vector<Polynomial> gens;
    std::vector<int> e(static_cast<std::size_t>(arity), 0);
    // odometer over exponent tuples of total degree n
    auto emit = [&](auto&& self, int pos, int left) -> void {
        if (pos == arity - 1) {
            e[static_cast<std::size_t>(pos)] = left;
            gens.push_back(Polynomial::term(Monomial(e), Rat(1)));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1, left - k);
        }
    };
    emit(emit, 0, n);
    return Ideal(arity, std::move(gens));
}

Ideal intersect(const Ideal& A, const Ideal& B) {
    assert(A.arity() == B.arity());
    int n = A.arity();
    if (A.is_zero_ideal() || B.is_zero_ideal()) return Ideal(n);
    std::vector<Polynomial> gens;
    Polynomial w = Polynomial::variable(n + 1, 0);
    Polynomial one_minus_w = Polynomial::constant(n + 1, Rat(1)) - w;
    for (const auto& a : A.generators())
        if (!a.is_zero()) gens.push_back(w * a.insert_variables(0, 1));
    for (const auto& b : B.generators())
        if (!b.is_zero()) gens.push_back(one_minus_w * b.insert_variables(0, 1));
    return eliminate(Ideal(n + 1, std::move(gens)), 1);
}

namespace {

// quotient and remainder of g by a single divisor; remainder is the normal
// form of g modulo (b)
std::pair<Polynomial, Polynomial> divide_single(const Polynomial& g, const Polynomial& b) {
    MonomialOrder ord = MonomialOrder::degrevlex();
    auto [bm, bc] = b.leading(ord);
    Polynomial q(g.arity()), r(g.arity()), p = g;
    while (!p.is_zero()) {
        auto [m, c] = p.leading(ord);
        if (bm.divides(m)) {
            Monomial f = bm.divided_into(m);
            Rat cf = c / bc;
            q += Polynomial::term(f, cf);
            p -= b.times_term(f, cf);
        } else {
            Polynomial t = Polynomial::term(m, c);
            r += t;
            p -= t;
        }
    }
    return {q, r};
}

// (A : b) for a single nonzero b
Ideal quotient_by_element(const Ideal& A, const Polynomial& b) {
    if (b.is_constant()) return A;
    Ideal cap = intersect(A, Ideal::principal(b));
    std::vector<Polynomial> gens;
    for (const auto& g : cap.generators()) {
        if (g.is_zero()) continue;
        auto [q, r] = divide_single(g, b);
        if (!r.is_zero()) throw internal_error("intersection element not divisible");
        if (!q.is_zero()) gens.push_back(std::move(q));
    }
    return Ideal(A.arity(), std::move(gens));
}

} // namespace

Ideal ideal_quotient(const Ideal& A, const Ideal& B) {
    assert(A.arity() == B.arity());
    bool any = false;
    Ideal result = Ideal::unit(A.arity());
    for (const auto& b : B.generators()) {
        if (b.is_zero()) continue;
        Ideal q = quotient_by_element(A, b);
        result = any ? intersect(result, q) : q;
        any = true;
    }
    if (!any) return Ideal::unit(A.arity()); // (A : 0) is the whole ring
    return result;
}

Ideal saturate(const Ideal& A, const Ideal& B, int max_rounds) {
    Ideal prev = A;
    for (int round = 0; round < max_rounds; ++round) {
        Ideal next = ideal_quotient(prev, B);
        if (next.basis() == prev.basis()) return next;
        prev = next;
    }
    throw resource_error("saturation did not terminate");
}

Ideal eliminate(const Ideal& A, int count) {
    if (!(count > 0 && count < A.arity())) throw input_error("bad elimination count");
    const auto& gb = A.basis(MonomialOrder::block(count));
    std::vector<Polynomial> gens;
    for (const auto& g : gb.elements()) {
        bool pure = true;
        for (const auto& [m, c] : g.terms()) {
            for (int i = 0; i < count && pure; ++i)
                if (m[i] > 0) pure = false;
            if (!pure) break;
        }
        if (pure) gens.push_back(g.remove_variables(0, count));
    }
    return Ideal(A.arity() - count, std::move(gens));
}

std::optional<long> quotient_dim(const Ideal& A) {
    int n = A.arity();
    const auto& gb = A.basis();
    if (gb.is_trivial()) return 0;
    if (gb.is_zero()) return n == 0 ? std::optional<long>(1) : std::nullopt;

    std::vector<Monomial> lts;
    lts.reserve(gb.elements().size());
    for (const auto& g : gb.elements()) lts.push_back(g.leading(gb.order()).first);

    // finite iff some leading term is a pure power of each variable
    std::vector<int> bound(static_cast<std::size_t>(n), -1);
    for (const auto& m : lts) {
        int var = -1;
        bool pure = true;
        for (int i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            if (var != -1) {
                pure = false;
                break;
            }
            var = i;
        }
        if (pure && var != -1) {
            int& b = bound[static_cast<std::size_t>(var)];
            b = (b == -1) ? m[var] : std::min(b, m[var]);
        }
    }
    for (int i = 0; i < n; ++i)
        if (bound[static_cast<std::size_t>(i)] == -1) return std::nullopt;

    long count = 0;
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    auto walk = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            Monomial m{std::vector<int>(e)};
            for (const auto& lt : lts)
                if (lt.divides(m)) return;
            ++count;
            return;
        }
        for (int k = 0; k < bound[static_cast<std::size_t>(pos)]; ++k) {
            e[static_cast<std::size_t>(pos)] = k;
            self(self, pos + 1);
        }
    };
    walk(walk, 0);
    return count;
}

long local_multiplicity(const Ideal& A, const std::vector<Rat>& point, int madic_cap) {
    int n = A.arity();
    if (static_cast<int>(point.size()) != n) throw input_error("arity mismatch");
    std::vector<Polynomial> images;
    images.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        images.push_back(Polynomial::variable(n, i) +
                         Polynomial::constant(n, point[static_cast<std::size_t>(i)]));
    std::vector<Polynomial> translated;
    for (const auto& g : A.generators())
        if (!g.is_zero()) translated.push_back(g.compose(images));
    Ideal B(n, std::move(translated));

    long prev = -1;
    for (int N = 1; N <= madic_cap; ++N) {
        auto d = quotient_dim(ideal_sum(B, maximal_power(n, N)));
        if (!d) throw internal_error("m-primary quotient infinite");
        if (*d == prev) return prev;
        prev = *d;
    }
    throw resource_error("not isolated");
}

long multiplicity_along(const Ideal& A, int var, int cap) {
    int n = A.arity();
    long prev = -1;
    for (int N = 1; N <= cap; ++N) {
        Polynomial p = Polynomial::term(Monomial::var(n, var, N), Rat(1));
        auto d = quotient_dim(ideal_sum(A, Ideal::principal(p)));
        if (!d) throw input_error("not finite");
        if (*d == prev) return prev;
        prev = *d;
    }
    throw resource_error("multiplicity along hyperplane did not stabilize");
}

std::vector<std::array<Rat, 2>> rational_points_2d(const Ideal& A) {
    assert(A.arity() == 2);
    std::vector<std::array<Rat, 2>> points;
    const auto& gb = A.basis();
    if (gb.is_trivial()) return points;
    Ideal elim = eliminate(A, 1);
    if (elim.is_zero_ideal()) throw input_error("not finite");
    RootExtraction vroots = rational_roots(uni_from(elim.basis().elements().front()));
    for (const auto& [v0, vmult] : vroots.roots) {
        UniPoly g;
        Polynomial value = Polynomial::constant(2, v0);
        for (const auto& p : gb.elements()) {
            Polynomial s = p.substitute(1, value).remove_variables(1, 1);
            if (s.is_zero()) continue;
            g = g.empty() ? uni_from(s) : uni_gcd(g, uni_from(s));
        }
        if (g.empty()) throw input_error("not finite");
        for (const auto& [u0, umult] : rational_roots(g).roots)
            points.push_back({u0, v0});
    }
    return points;
}

std::vector<Polynomial> canonical_generators(const Ideal& A) {
    const auto& gb = A.basis();
    std::vector<Polynomial> out;
    out.reserve(gb.elements().size());
    for (const auto& g : gb.elements()) out.push_back(g.primitive(gb.order()));
    return out;
}

Ideal specialize(const Ideal& A, int var, const Rat& value) {
    std::vector<Polynomial> gens;
    Polynomial c = Polynomial::constant(A.arity(), value);
    for (const auto& g : A.generators()) {
        Polynomial s = g.substitute(var, c).remove_variables(var, 1);
        if (!s.is_zero()) gens.push_back(std::move(s));
    }
    return Ideal(A.arity() - 1, std::move(gens));
}

} // namespace wlab
