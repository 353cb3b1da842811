#include <asymcoh/core/sampling.hpp>
#include <asymcoh/flag/flag.hpp>

#include <benchmark/benchmark.h>

#include <array>
#include <string_view>

using namespace asymcoh;
using namespace asymcoh::flag;

namespace {

constexpr std::array<std::string_view, 7> kChamberTypes = {"A1", "A2", "B2", "G2", "A3", "B3", "C3"};

}  // namespace

static void BM_EnumerateChambers(benchmark::State& state) {
  const std::string_view type = kChamberTypes[static_cast<std::size_t>(state.range(0))];
  const RootSystem rs = RootSystem::parse(type);
  state.SetLabel(std::string(type));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_chambers(rs));
}
BENCHMARK(BM_EnumerateChambers)->DenseRange(0, static_cast<int>(kChamberTypes.size()) - 1);

static void BM_FlagAsymH(benchmark::State& state) {
  const RootSystem rs = RootSystem::parse(state.range(0) == 0 ? "A2" : "E8");
  RationalSampler sampler(3);
  const Weight alpha = sampler.next_class(rs.rank(), 10, 4);
  state.SetLabel(state.range(0) == 0 ? "A2" : "E8");
  for (auto _ : state) benchmark::DoNotOptimize(flag_asym_h(rs, alpha));
}
BENCHMARK(BM_FlagAsymH)->Arg(0)->Arg(1);

static void BM_WeylDimension(benchmark::State& state) {
  const RootSystem rs = RootSystem::parse("E8");
  Weight lambda = Weight::zero(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) lambda[i] = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_dim(rs, lambda));
}
BENCHMARK(BM_WeylDimension)->Arg(1)->Arg(10)->Arg(100);
