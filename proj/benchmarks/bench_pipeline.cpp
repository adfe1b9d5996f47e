#include <benchmark/benchmark.h>

#include <random>

#include "pidel/channel.hpp"
#include "pidel/codes.hpp"
#include "pidel/encdec.hpp"

namespace {

static void BM_ApplyDeletion(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  pidel::CodeSpec code = pidel::special_shifted_code(g);
  pidel::SymmetricDensity rho = pidel::apply_deletion(code.zero_L, 0);
  int t = code.distance - 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pidel::apply_deletion(rho, t));
  }
}
BENCHMARK(BM_ApplyDeletion)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

static void BM_ErasureCheck(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  pidel::CodeSpec code = pidel::special_shifted_code(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pidel::erasure_correctable(code, code.distance - 1));
  }
}
BENCHMARK(BM_ErasureCheck)->Arg(2)->Arg(3)->Arg(5)->Arg(8);

static void BM_EncodeDeleteDecode(benchmark::State& state) {
  int g = static_cast<int>(state.range(0));
  pidel::CodeSpec code = pidel::special_shifted_code(g);
  int t = code.distance - 1;
  std::mt19937_64 rng(12345);
  std::normal_distribution<double> gauss;
  for (auto _ : state) {
    pidel::Complex a(gauss(rng), gauss(rng)), b(gauss(rng), gauss(rng));
    double norm = std::sqrt(std::norm(a) + std::norm(b));
    a /= norm;
    b /= norm;
    auto enc = pidel::encode(code, a, b, std::nullopt, &rng);
    auto rho = pidel::apply_deletion(enc.state, t);
    auto dec = pidel::full_decode(rho, code, t, std::nullopt, std::nullopt, &rng);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(BM_EncodeDeleteDecode)->Arg(2)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
