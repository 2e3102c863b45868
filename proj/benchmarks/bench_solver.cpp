#include <benchmark/benchmark.h>

#include "ceseplast/cese.hpp"
#include "ceseplast/cese_kernel.hpp"
#include "ceseplast/constitutive.hpp"
#include "ceseplast/scenario.hpp"

using namespace ceseplast;

namespace {

const MaterialProperties cu = MaterialProperties::copper();

NodeSolution node(const PrimitiveState& s, const Vec3& ux) { return {to_conserved(s), ux}; }

}  // namespace

static void BM_RadialReturn(benchmark::State& state) {
  const MaterialProperties m = multi_yield_copper(4);
  const PlasticState ps = PlasticState::initial(m);
  double s = 4e7;
  for (auto _ : state) {
    benchmark::DoNotOptimize(radial_return(s, ps, m));
    s = s > 4e8 ? 4e7 : s * 1.01;
  }
}
BENCHMARK(BM_RadialReturn);

static void BM_MarchNode(benchmark::State& state) {
  const ElastoplasticPhysics phys(cu);
  const ParentNode left{node({8935.0, 12.0, -1.5e6}, Vec3(-300.0, -9.0e6, 4.0e12)), {}};
  const ParentNode right{node({8931.0, 3.0, -4.0e5}, Vec3(-500.0, -1.2e7, 2.5e12)), {}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(march_node(phys, left, right, {}, {5e-3, 6e-7}, 1.0, 1e-10, 25));
  }
}
BENCHMARK(BM_MarchNode);

// One level of the 40 m/s impact at several resolutions.
static void BM_ImpactStep(benchmark::State& state) {
  ScenarioConfig c = find_builtin("impact40").config;
  const auto cells = static_cast<std::size_t>(state.range(0));
  c.time.dt *= 400.0 / static_cast<double>(cells);
  c.grid.cells = cells;
  MeshLevel lvl = build_impact_ic(c);
  for (int n = 0; n < 20; ++n) lvl = step(lvl, {}, c.solver_params(), c.material);
  for (auto _ : state) {
    benchmark::DoNotOptimize(step(lvl, {}, c.solver_params(), c.material));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(lvl.nodes.size()));
}
BENCHMARK(BM_ImpactStep)->Arg(400)->Arg(1600)->Arg(6400);

BENCHMARK_MAIN();
