#include "wlab/univariate.hpp"

#include "wlab/errors.hpp"

#include <algorithm>
#include <cassert>

namespace wlab {

UniPoly uni_normalize(UniPoly p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

int uni_deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly uni_from(const Polynomial& p) {
    assert(p.arity() == 1);
    UniPoly u(static_cast<std::size_t>(p.total_degree() + 1), Rat(0));
    for (const auto& [m, c] : p.terms()) u[static_cast<std::size_t>(m[0])] = c;
    return uni_normalize(std::move(u));
}

Polynomial uni_to_poly(const UniPoly& p) {
    Polynomial q(1);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != 0) q += Polynomial::term(Monomial::var(1, 0, static_cast<int>(i)), p[i]);
    return q;
}

Rat uni_eval(const UniPoly& p, const Rat& x) {
    Rat v(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
    return v;
}

UniPoly uni_derivative(const UniPoly& p) {
    UniPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<int>(i));
    return uni_normalize(std::move(d));
}

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly c(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return uni_normalize(std::move(c));
}

std::pair<UniPoly, UniPoly> uni_divmod(const UniPoly& a, const UniPoly& b) {
    assert(!b.empty());
    UniPoly r = a, q;
    int db = uni_deg(b);
    if (uni_deg(a) >= db) q.assign(static_cast<std::size_t>(uni_deg(a) - db + 1), Rat(0));
    while (uni_deg(r) >= db) {
        int k = uni_deg(r) - db;
        Rat f = r.back() / b.back();
        q[static_cast<std::size_t>(k)] = f;
        for (int i = 0; i <= db; ++i)
            r[static_cast<std::size_t>(k + i)] -= f * b[static_cast<std::size_t>(i)];
        r = uni_normalize(std::move(r));
    }
    return {uni_normalize(std::move(q)), std::move(r)};
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    a = uni_normalize(std::move(a));
    b = uni_normalize(std::move(b));
    while (!b.empty()) {
        auto [q, r] = uni_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rat lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

namespace {

// positive divisors by trial division; guards against huge inputs
std::vector<Int> divisors(Int n) {
    if (n < 0) n = -n;
    assert(n != 0);
    std::vector<Int> small, large;
    long steps = 0;
    for (Int d = 1; d * d <= n; ++d) {
        if (++steps > 4000000) throw resource_error("root extraction overflow");
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

RootExtraction rational_roots(const UniPoly& p0) {
    UniPoly p = uni_normalize(p0);
    assert(!p.empty());
    RootExtraction out;

    // root 0 first
    std::size_t k = 0;
    while (k < p.size() && p[k] == 0) ++k;
    if (k > 0) {
        out.roots.push_back({Rat(0), static_cast<int>(k)});
        p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(k));
    }
    if (uni_deg(p) < 1) {
        out.residual = std::move(p);
        return out;
    }

    // clear denominators to coprime integer coefficients
    Int den = 1;
    for (const auto& c : p) den = lcm(den, rat_den(c));
    std::vector<Int> ic;
    ic.reserve(p.size());
    Int g = 0;
    for (const auto& c : p) {
        ic.push_back(rat_num(c) * (den / rat_den(c)));
        g = gcd(g, ic.back());
    }
    for (auto& c : ic) c /= g;

    std::vector<Rat> candidates;
    for (const Int& a : divisors(ic.front()))
        for (const Int& b : divisors(ic.back())) {
            if (gcd(a, b) != 1) continue;
            candidates.push_back(Rat(a, b));
            candidates.push_back(Rat(-a, b));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rat& r : candidates) {
        int mult = 0;
        while (uni_deg(p) >= 1 && uni_eval(p, r) == 0) {
            auto [q, rem] = uni_divmod(p, UniPoly{-r, Rat(1)});
            assert(rem.empty());
            p = std::move(q);
            ++mult;
        }
        if (mult > 0) out.roots.push_back({r, mult});
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.residual = std::move(p);
    return out;
}

} // namespace wlab
