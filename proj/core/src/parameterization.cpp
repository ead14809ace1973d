#include "wlab/parameterization.hpp"

#include "wlab/errors.hpp"
#include "wlab/univariate.hpp"

#include <algorithm>
#include <sstream>

namespace wlab {

P1Point P1Point::finite(const Rat& t) {
    P1Point p;
    p.t_ = t;
    return p;
}

P1Point P1Point::infinity() {
    P1Point p;
    p.infinite_ = true;
    return p;
}

bool P1Point::operator<(const P1Point& o) const {
    if (infinite_ != o.infinite_) return !infinite_;
    return t_ < o.t_;
}

std::string P1Point::to_string() const {
    if (infinite_) return "t=inf";
    return "t=" + rat_to_string(t_);
}

namespace {

int s_valuation(const Polynomial& form) {
    int v = form.total_degree() + 1;
    for (const auto& [m, c] : form.terms()) v = std::min(v, m[0]);
    return v;
}

} // namespace

UniPoly dehomog_s(const Polynomial& form) {
    Polynomial one = Polynomial::constant(1, Rat(1));
    Polynomial t = Polynomial::variable(1, 0);
    return uni_from(form.compose({one, t}));
}

// Degree of the gcd of nonzero binary forms: the common s-power plus the gcd
// of the dehomogenizations (which carries the common t-power already).
int binary_gcd_degree(const std::vector<Polynomial>& forms) {
    int mu = forms.front().total_degree() + 1;
    UniPoly g;
    for (const auto& f : forms) {
        mu = std::min(mu, s_valuation(f));
        UniPoly u = dehomog_s(f);
        g = g.empty() ? u : uni_gcd(g, u);
    }
    return mu + std::max(uni_deg(g), 0);
}

Parameterization Parameterization::make(PlaneCurve curve, std::array<Polynomial, 3> maps,
                                        std::vector<SingularFiber> fibers) {
    int e = curve.degree();
    for (const auto& m : maps) {
        if (m.arity() != 2) throw input_error("parameterization maps must be binary forms");
        if (!m.is_zero() && (!m.is_homogeneous() || m.total_degree() != e))
            throw input_error("parameterization maps must have the curve degree");
    }
    if (maps[0].is_zero() && maps[1].is_zero() && maps[2].is_zero())
        throw input_error("parameterization maps all zero");

    {
        std::vector<Polynomial> nz;
        for (const auto& m : maps)
            if (!m.is_zero()) nz.push_back(m);
        if (binary_gcd_degree(nz) > 0)
            throw input_error("parameterization maps share a common factor");
    }

    if (!curve.form().compose({maps[0], maps[1], maps[2]}).is_zero())
        throw input_error("maps do not land on the curve");

    Parameterization b(std::move(curve), std::move(maps), std::move(fibers));

    for (const auto& fiber : b.fibers_) {
        std::size_t expected = fiber.type == LocalType::Node ? 2 : 1;
        if (fiber.params.size() != expected) throw input_error("wrong fiber size for local type");
        for (const auto& p : fiber.params)
            if (!(b.image(p) == fiber.point)) throw input_error("fiber parameter misses its point");
        if (fiber.type == LocalType::Node && fiber.params[0] == fiber.params[1])
            throw input_error("node fiber parameters coincide");
    }

    // birationality probe: a generic rational point has a single preimage
    bool verified = false;
    for (int t0 : {2, 3, 5, 7, 11, 13}) {
        P1Point p = P1Point::finite(Rat(t0));
        bool listed = false;
        for (const auto& fiber : b.fibers_)
            for (const auto& q : fiber.params) listed = listed || q == p;
        if (listed) continue;
        ProjPoint P = b.image(p);
        bool singular = false;
        for (const auto& fiber : b.fibers_) singular = singular || fiber.point == P;
        if (singular) continue;
        std::vector<Polynomial> crosses;
        const auto& M = b.maps_;
        std::array<std::array<int, 2>, 3> idx{{{0, 1}, {0, 2}, {1, 2}}};
        for (const auto& [i, j] : idx) {
            Polynomial c = P.coords()[static_cast<std::size_t>(j)] * M[static_cast<std::size_t>(i)] -
                           P.coords()[static_cast<std::size_t>(i)] * M[static_cast<std::size_t>(j)];
            if (!c.is_zero()) crosses.push_back(std::move(c));
        }
        if (crosses.empty()) throw input_error("degenerate parameterization");
        if (binary_gcd_degree(crosses) != 1) throw input_error("map is not birational");
        verified = true;
        break;
    }
    if (!verified) throw input_error("no generic sample available for birationality check");
    return b;
}

ProjPoint Parameterization::image(const P1Point& p) const {
    std::vector<Rat> at = p.is_infinite() ? std::vector<Rat>{Rat(0), Rat(1)}
                                          : std::vector<Rat>{Rat(1), p.value()};
    return ProjPoint::make(maps_[0].evaluate(at), maps_[1].evaluate(at), maps_[2].evaluate(at));
}

} // namespace wlab
