#include <benchmark/benchmark.h>

#include "wlab/cycle.hpp"
#include "wlab/degeneration.hpp"
#include "wlab/parser.hpp"

using namespace wlab;

namespace {

const std::vector<std::string> XYZ{"x", "y", "z"};
const std::vector<std::string> XYZT{"x", "y", "z", "t"};

GenLinearSystem nodal_system() {
    PlaneCurve C = PlaneCurve::make(parse_polynomial("y^2*z - x^2*z - x^3", XYZ));
    SheafRep sheaf = SheafRep::make(
        C, 1, Ideal(3, {parse_polynomial("x", XYZ), parse_polynomial("y", XYZ)}));
    return GenLinearSystem::make(sheaf,
                                 {parse_polynomial("x", XYZ), parse_polynomial("y", XYZ)});
}

} // namespace

static void BM_groebner_node(benchmark::State& state) {
    std::vector<Polynomial> gens{parse_polynomial("v^2 - u^2 - u^3", {"u", "v"}),
                                 parse_polynomial("u^3", {"u", "v"})};
    for (auto _ : state) benchmark::DoNotOptimize(groebner(gens, MonomialOrder::degrevlex()));
}
BENCHMARK(BM_groebner_node);

static void BM_weierstrass_cycle(benchmark::State& state) {
    GenLinearSystem sys = nodal_system();
    for (auto _ : state) benchmark::DoNotOptimize(weierstrass_cycle(sys));
}
BENCHMARK(BM_weierstrass_cycle);

static void BM_flat_limit_family1(benchmark::State& state) {
    FamilySystem fam = FamilySystem::make(
        parse_polynomial("y^2*z - x^3 - x^2*z - t^2*z^3", XYZT),
        {parse_polynomial("x", XYZT), parse_polynomial("y - t*z", XYZT)},
        {parse_polynomial("x", XYZT), parse_polynomial("y - t*z", XYZT)});
    for (auto _ : state) benchmark::DoNotOptimize(flat_limit(fam));
}
BENCHMARK(BM_flat_limit_family1);

BENCHMARK_MAIN();
