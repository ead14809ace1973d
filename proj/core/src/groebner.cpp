#include "wlab/groebner.hpp"

#include "wlab/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace wlab {

namespace {

struct LeadCache {
    Monomial lm;
    Rat lc;
};

Polynomial reduce_full(Polynomial p, const std::vector<Polynomial>& gens,
                       const std::vector<LeadCache>& leads, const MonomialOrder& ord) {
    Polynomial r(p.arity());
    while (!p.is_zero()) {
        auto [m, c] = p.leading(ord);
        bool reduced = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (gens[k].is_zero()) continue;
            if (leads[k].lm.divides(m)) {
                p -= gens[k].times_term(leads[k].lm.divided_into(m), c / leads[k].lc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            Polynomial t = Polynomial::term(m, c);
            r += t;
            p -= t;
        }
    }
    return r;
}

} // namespace

GroebnerBasis::GroebnerBasis(int arity, MonomialOrder order, std::vector<Polynomial> elements)
    : arity_(arity), order_(order), elements_(std::move(elements)) {}

bool GroebnerBasis::is_trivial() const {
    return elements_.size() == 1 && elements_.front().is_constant() && !elements_.front().is_zero();
}

bool GroebnerBasis::contains(const Polynomial& p) const {
    return normal_form(p, *this).is_zero();
}

bool GroebnerBasis::operator==(const GroebnerBasis& o) const {
    return arity_ == o.arity_ && elements_ == o.elements_;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
    if (p.arity() != basis.arity()) throw input_error("arity mismatch");
    std::vector<LeadCache> leads;
    leads.reserve(basis.elements().size());
    for (const auto& g : basis.elements()) {
        auto [m, c] = g.leading(basis.order());
        leads.push_back({m, c});
    }
    return reduce_full(p, basis.elements(), leads, basis.order());
}

GroebnerBasis groebner(const std::vector<Polynomial>& gens, MonomialOrder order,
                       const GroebnerOptions& opts) {
    int arity = gens.empty() ? 0 : gens.front().arity();
    for (const auto& g : gens)
        if (g.arity() != arity) throw input_error("arity mismatch");

    std::vector<Polynomial> basis;
    std::vector<LeadCache> leads;
    std::vector<int> sugar;
    auto push = [&](const Polynomial& p, int su) {
        Polynomial q = p.primitive(order);
        auto [m, c] = q.leading(order);
        basis.push_back(std::move(q));
        leads.push_back({m, c});
        sugar.push_back(su);
    };
    for (const auto& g : gens)
        if (!g.is_zero()) push(g, g.total_degree());

    if (basis.empty()) return GroebnerBasis(arity, order, {});

    struct PairLess {
        const std::vector<int>* sugar;
        const std::vector<LeadCache>* leads;
        MonomialOrder ord;
        using Key = std::tuple<int, int, int>; // (sugar, i, j) with lcm compared via ord
        bool operator()(const Key& a, const Key& b) const {
            if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
            Monomial la = Monomial::lcm((*leads)[std::get<1>(a)].lm, (*leads)[std::get<2>(a)].lm);
            Monomial lb = Monomial::lcm((*leads)[std::get<1>(b)].lm, (*leads)[std::get<2>(b)].lm);
            if (la != lb) return ord.greater(lb, la); // smaller lcm first
            return std::tie(std::get<1>(a), std::get<2>(a)) < std::tie(std::get<1>(b), std::get<2>(b));
        }
    };
    PairLess less{&sugar, &leads, order};
    std::set<PairLess::Key, PairLess> pairs(less);
    std::set<std::pair<int, int>> treated;

    auto pair_sugar = [&](int i, int j) {
        Monomial L = Monomial::lcm(leads[i].lm, leads[j].lm);
        int si = sugar[i] - leads[i].lm.degree();
        int sj = sugar[j] - leads[j].lm.degree();
        return L.degree() + std::max(si, sj);
    };
    auto add_pairs_for = [&](int j) {
        for (int i = 0; i < j; ++i) pairs.insert({pair_sugar(i, j), i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) add_pairs_for(j);

    long processed = 0;
    while (!pairs.empty()) {
        auto key = *pairs.begin();
        pairs.erase(pairs.begin());
        auto [su, i, j] = key;
        treated.insert({i, j});
        if (++processed > opts.pair_cap) throw resource_error("resource limit exceeded");

        const Monomial& mi = leads[i].lm;
        const Monomial& mj = leads[j].lm;
        if (mi.coprime(mj)) continue; // product criterion
        Monomial L = Monomial::lcm(mi, mj);
        bool chain = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chain; ++k) {
            if (k == i || k == j) continue;
            if (!leads[k].lm.divides(L)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
                chain = true;
        }
        if (chain) continue;

        Polynomial s = basis[i].times_term(mi.divided_into(L), Rat(1) / leads[i].lc) -
                       basis[j].times_term(mj.divided_into(L), Rat(1) / leads[j].lc);
        Polynomial h = reduce_full(std::move(s), basis, leads, order);
        if (h.is_zero()) continue;
        push(h, std::max(su, h.total_degree()));
        add_pairs_for(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose leading monomial another one divides
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
        bool redundant = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !redundant; ++k) {
            if (k == i) continue;
            if (!leads[k].lm.divides(leads[i].lm)) continue;
            // on equal leading monomials keep the earlier element
            redundant = leads[k].lm != leads[i].lm || k < i;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> reduced;
    std::vector<LeadCache> rleads;
    for (int i : keep) {
        reduced.push_back(basis[i]);
        rleads.push_back(leads[i]);
    }
    // tail-reduce each element against the others; leading terms are pairwise
    // indivisible at this point, so one pass yields the reduced basis
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        std::vector<LeadCache> olds;
        for (std::size_t k = 0; k < reduced.size(); ++k) {
            if (k == i) continue;
            others.push_back(reduced[k]);
            olds.push_back(rleads[k]);
        }
        reduced[i] = reduce_full(reduced[i], others, olds, order);
    }
    for (auto& g : reduced) g = g.monic(order);
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        auto ma = a.leading(order).first;
        auto mb = b.leading(order).first;
        if (ma == mb) return false;
        return order.greater(mb, ma);
    });
    return GroebnerBasis(arity, order, std::move(reduced));
}

} // namespace wlab
