#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "razzaboni/gmc.hpp"
#include "razzaboni/surface.hpp"
#include "razzaboni/transform.hpp"

using namespace razzaboni;
using razzaboni::testing::constant_fields;
using razzaboni::testing::constant_mesh;

namespace {

void BM_SolveKappaBranch(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{0.0, 1.5, n, 0.0, 0.05, n / 4, false};
  BoundarySpec bc;
  bc.mode = BoundaryMode::GeneralODE;
  std::vector<double> init(grid.nodes_u());
  for (int i = 0; i < grid.nodes_u(); ++i) init[i] = 1.0 + 0.05 * std::sin(grid.u(i));
  for (auto _ : state) {
    GmcFields out = solve_gmc(init, grid, SignatureCase::case1(), {0.5, 0.5}, bc);
    benchmark::DoNotOptimize(out.kappa(1, 1));
  }
}
BENCHMARK(BM_SolveKappaBranch)->Arg(64)->Arg(128)->Arg(256);

void BM_Synthesize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{0.0, 1.5, n, 0.0, 0.4, n, false};
  const GmcFields f = constant_fields(SignatureCase::case1(), {0.5, 0.5}, grid, 1, 1, 1);
  const FrameTriple cf = canonical_frame(f.sig);
  const Frame fr{cf.t, cf.n, cf.b, f.sig};
  for (auto _ : state) {
    SurfaceMesh mesh = synthesize(f, fr, Vec3M{}, 1e-6);
    benchmark::DoNotOptimize(mesh.positions.back());
  }
}
BENCHMARK(BM_Synthesize)->Arg(64)->Arg(128);

void BM_TransformCertificate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{0.0, 1.5, n, 0.0, 0.4, n / 2, false};
  const SurfaceMesh mesh = constant_mesh(SignatureCase::case1(), {0.5, 0.5},
                                         grid, 1.0, 1.0, 1.0);
  for (auto _ : state) {
    const RazzaboniPair pair = razzaboni_transform(mesh, {0.5, 0.5});
    const VerificationReport rep = certificate(pair);
    benchmark::DoNotOptimize(rep.all_pass());
  }
}
BENCHMARK(BM_TransformCertificate)->Arg(64)->Arg(128);

void BM_GaussCurvatureMeasured(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const GridSpec grid{0.0, 1.5, n, 0.0, 0.4, n, false};
  const SurfaceMesh mesh = constant_mesh(SignatureCase::case1(), {0.5, 0.5},
                                         grid, 1.0, 1.0, 1.0);
  for (auto _ : state) {
    Array2 K = gauss_curvature_measured(mesh);
    benchmark::DoNotOptimize(K.max_abs());
  }
}
BENCHMARK(BM_GaussCurvatureMeasured)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
