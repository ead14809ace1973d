#include "oracles.hpp"

#include "wlab/errors.hpp"

#include <cassert>
#include <vector>

namespace wlab::oracle {

namespace {

// coefficients of p viewed in (Q[u])[v]
std::vector<UniPoly> v_coefficients(const Polynomial& p) {
    int dv = 0, du = 0;
    for (const auto& [m, c] : p.terms()) {
        dv = std::max(dv, m[1]);
        du = std::max(du, m[0]);
    }
    std::vector<UniPoly> out(static_cast<std::size_t>(dv + 1),
                             UniPoly(static_cast<std::size_t>(du + 1), Rat(0)));
    for (const auto& [m, c] : p.terms())
        out[static_cast<std::size_t>(m[1])][static_cast<std::size_t>(m[0])] = c;
    for (auto& q : out) q = uni_normalize(std::move(q));
    return out;
}

Rat det(std::vector<std::vector<Rat>> m) {
    std::size_t n = m.size();
    Rat d(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            d = -d;
        }
        d *= m[col][col];
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m[i][col] == 0) continue;
            Rat f = m[i][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
        }
    }
    return d;
}

} // namespace

UniPoly resultant_v(const Polynomial& F, const Polynomial& G) {
    assert(F.arity() == 2 && G.arity() == 2 && !F.is_zero() && !G.is_zero());
    std::vector<UniPoly> a = v_coefficients(F);
    std::vector<UniPoly> b = v_coefficients(G);
    int m = static_cast<int>(a.size()) - 1;
    int n = static_cast<int>(b.size()) - 1;
    if (m == 0) { // Res of a constant-in-v polynomial
        UniPoly r{Rat(1)};
        for (int i = 0; i < n; ++i) r = uni_mul(r, a[0]);
        return r;
    }
    if (n == 0) {
        UniPoly r{Rat(1)};
        for (int i = 0; i < m; ++i) r = uni_mul(r, b[0]);
        return r;
    }
    int size = m + n;
    // degree bound for interpolation
    int du = 0;
    for (const auto& q : a) du = std::max(du, uni_deg(q));
    int dgu = 0;
    for (const auto& q : b) dgu = std::max(dgu, uni_deg(q));
    int bound = n * du + m * dgu + 1;

    std::vector<Rat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        Rat x(k);
        std::vector<std::vector<Rat>> s(static_cast<std::size_t>(size),
                                        std::vector<Rat>(static_cast<std::size_t>(size), Rat(0)));
        for (int row = 0; row < n; ++row)
            for (int j = 0; j <= m; ++j)
                s[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] =
                    uni_eval(a[static_cast<std::size_t>(m - j)], x);
        for (int row = 0; row < m; ++row)
            for (int j = 0; j <= n; ++j)
                s[static_cast<std::size_t>(n + row)][static_cast<std::size_t>(row + j)] =
                    uni_eval(b[static_cast<std::size_t>(n - j)], x);
        xs.push_back(x);
        ys.push_back(det(std::move(s)));
    }
    // Lagrange interpolation
    UniPoly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) continue;
        UniPoly basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = uni_mul(basis, UniPoly{-xs[j], Rat(1)});
            denom *= xs[i] - xs[j];
        }
        Rat f = ys[i] / denom;
        if (result.size() < basis.size()) result.resize(basis.size(), Rat(0));
        for (std::size_t k = 0; k < basis.size(); ++k) result[k] += f * basis[k];
    }
    return uni_normalize(std::move(result));
}

long intersection_multiplicity(const Polynomial& F, const Polynomial& G) {
    for (int lam = 0; lam <= 24; ++lam) {
        Polynomial shear =
            Polynomial::variable(2, 0) + Rat(lam) * Polynomial::variable(2, 1);
        Polynomial Fs = F.substitute(0, shear);
        Polynomial Gs = G.substitute(0, shear);

        // v-regularity: the coefficient of v^deg must be a nonzero constant
        auto regular = [](const Polynomial& p) {
            int d = p.total_degree();
            return p.coeff(Monomial(std::vector<int>{0, d})) != 0;
        };
        if (!regular(Fs) || !regular(Gs)) continue;

        // only the origin may sit on the line u = 0
        Polynomial zero_u = Polynomial::constant(2, Rat(0));
        UniPoly f0 = uni_from(Fs.substitute(0, zero_u).remove_variables(0, 1));
        UniPoly g0 = uni_from(Gs.substitute(0, zero_u).remove_variables(0, 1));
        UniPoly g = uni_gcd(f0, g0);
        bool monomial_gcd = true;
        for (std::size_t i = 0; i + 1 < g.size(); ++i) monomial_gcd = monomial_gcd && g[i] == 0;
        if (!monomial_gcd) continue;

        UniPoly res = resultant_v(Fs, Gs);
        if (res.empty()) throw input_error("curves share a component");
        long ord = 0;
        while (ord <= uni_deg(res) && res[static_cast<std::size_t>(ord)] == 0) ++ord;
        return ord;
    }
    throw input_error("no shear places the pair in good position");
}

Polynomial hessian(const Polynomial& F) {
    assert(F.arity() == 3);
    std::vector<std::vector<Polynomial>> h(3, std::vector<Polynomial>(3, Polynomial(3)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            F.derivative(i).derivative(j);
    return poly_det(h);
}

} // namespace wlab::oracle
