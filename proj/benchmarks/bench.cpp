#include <benchmark/benchmark.h>

#include "cornerindex/cornermap.hpp"
#include "cornerindex/domains.hpp"
#include "cornerindex/spectral.hpp"

using namespace cornerindex;

namespace {

meshgen::SimplicialMesh annulus(double h) {
  meshgen::TriangulateOptions o;
  o.h = h;
  return meshgen::build_mesh(domains::corner_annulus(), o);
}

void BM_Mesh(benchmark::State& state) {
  const double h = 1.0 / static_cast<double>(state.range(0));
  std::size_t triangles = 0;
  for (auto _ : state) triangles = annulus(h).triangle_count();
  state.counters["triangles"] = static_cast<double>(triangles);
}
BENCHMARK(BM_Mesh)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_Assemble(benchmark::State& state) {
  const auto mesh = annulus(1.0 / static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dec::assemble(mesh, dec::BoundaryConditionSpec::minimal(0.1)));
  state.counters["edges"] = static_cast<double>(mesh.edge_count());
}
BENCHMARK(BM_Assemble)->Arg(5)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_LowSpectrum(benchmark::State& state) {
  const auto system = dec::assemble(annulus(1.0 / static_cast<double>(state.range(0))),
                                    dec::BoundaryConditionSpec::maximal());
  const auto pencil = dec::hodge_laplacian(system, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral::low_spectrum(pencil, {}));
  state.counters["dofs"] = static_cast<double>(pencil.size());
}
BENCHMARK(BM_LowSpectrum)->Args({5, 0})->Args({5, 1})->Args({10, 0})->Args({10, 1})->Unit(benchmark::kMillisecond);

void BM_CornerMap(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cornermap::build_counterexample_pair());
}
BENCHMARK(BM_CornerMap)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
