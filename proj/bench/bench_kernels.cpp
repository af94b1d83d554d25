#include <benchmark/benchmark.h>

#include "checkerboard/arrival/decomposition.hpp"
#include "checkerboard/lattice/oracle.hpp"
#include "checkerboard/numerics/bessel.hpp"
#include "checkerboard/propagator/finite_n.hpp"
#include "checkerboard/propagator/interval.hpp"
#include "checkerboard/wavepacket/packet.hpp"

using namespace checkerboard;

namespace {

void BM_ArrivalDecomposition(benchmark::State& state) {
  const GaussianPacket p(-60.0, 6.0, 0.6, g_for_velocity(0.5));
  ArrivalOptions opt;
  opt.n_T = 64;
  opt.quad.n_points = 4001;
  opt.check_refinement = false;
  const auto exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(arrival_decomposition(p, 0.0, 400.0, opt, exec));
  }
  state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_ArrivalDecomposition)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_EnumeratePaths(benchmark::State& state) {
  const GridSpec g = GridSpec::from_displacement(20, 2);
  const auto exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_paths(g, 2, exec));
  state.SetLabel(exec == Execution::Serial ? "serial" : "parallel");
}
BENCHMARK(BM_EnumeratePaths)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_FiniteN(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto iv = snap_to_lattice(make_interval(1.0, 2.0), n).interval;
  for (auto _ : state) {
    benchmark::DoNotOptimize(k_finite_n(Component::PlusMinus, iv, n, FiniteVariant::First));
  }
}
BENCHMARK(BM_FiniteN)->Arg(4096)->Arg(65536)->Unit(benchmark::kMicrosecond);

void BM_BesselJ012(benchmark::State& state) {
  double z = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bessel_j012(z));
    z += 1e-3;
  }
}
BENCHMARK(BM_BesselJ012)->Arg(5)->Arg(1000)->Arg(10000000);

}  // namespace

BENCHMARK_MAIN();
