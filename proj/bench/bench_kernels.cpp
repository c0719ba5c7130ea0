// Serial reference kernels against their OpenMP counterparts.

#include <random>

#include <benchmark/benchmark.h>

#include "alfvac/electrostatics.hpp"
#include "alfvac/verify.hpp"

namespace es = alfvac::electrostatics;

namespace {

es::Execution execution(const benchmark::State& state) {
  return state.range(0) ? es::Execution::parallel : es::Execution::serial;
}

es::ChargeSystem random_system(int n) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<es::PointCharge> charges;
  charges.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) charges.push_back({{u(rng), u(rng), u(rng)}, u(rng)});
  return es::ChargeSystem(std::move(charges));
}

void BM_VerifyNodes(benchmark::State& state) {
  auto cases = alfvac::verify::enumerate_cases(alfvac::verify::Suite::nodes, 14);
  for (auto _ : state) {
    auto r = state.range(0) ? alfvac::verify::run_cases_parallel(cases) : alfvac::verify::run_cases_serial(cases);
    benchmark::DoNotOptimize(r);
  }
}

void BM_MultipoleScalar(benchmark::State& state) {
  auto sys = random_system(20000);
  es::ExpansionOptions opt{es::Constants::dimensionless(), es::LegendreSource::ladder, execution(state)};
  es::FieldPoint p(4.0, 1.0, 0.3);
  es::legendre_basis(20, opt.source);  // one-time basis construction stays out of the timing
  for (auto _ : state) benchmark::DoNotOptimize(es::multipole_scalar(sys, p, 20, opt));
}

void BM_DirectCoulomb(benchmark::State& state) {
  auto sys = random_system(200000);
  es::ExpansionOptions opt{es::Constants::dimensionless(), es::LegendreSource::ladder, execution(state)};
  es::FieldPoint p(4.0, 1.0, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(es::direct_coulomb(sys, p, opt));
}

void BM_LoopExpansion(benchmark::State& state) {
  es::CurrentLoop loop(1.0, 1.0);
  es::ExpansionOptions opt{es::Constants::dimensionless(), es::LegendreSource::ladder, execution(state)};
  es::FieldPoint p(5.0, 1.0, 0.2);
  es::legendre_basis(40, opt.source);
  for (auto _ : state) benchmark::DoNotOptimize(es::multipole_vector_loop(loop, p, 40, 8192, opt));
}

}  // namespace

BENCHMARK(BM_VerifyNodes)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MultipoleScalar)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DirectCoulomb)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LoopExpansion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
