#include <asymcoh/core/sampling.hpp>
#include <asymcoh/surface/zariski.hpp>

#include <benchmark/benchmark.h>

#include <vector>

using namespace asymcoh;
using namespace asymcoh::surface;

namespace {

std::vector<DivisorClass> sample_classes(std::size_t rank, std::size_t count) {
  RationalSampler sampler(17);
  std::vector<DivisorClass> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(sampler.next_class(rank, 10, 4));
  return out;
}

}  // namespace

static void BM_ZariskiDecompose(benchmark::State& state) {
  const SurfaceModel model = blowup_plane(static_cast<unsigned>(state.range(0)));
  const auto classes = sample_classes(model.rank(), 64);
  std::size_t i = 0;
  for (auto _ : state) {
    const DivisorClass& d = classes[i++ % classes.size()];
    if (is_pseff(model, d)) benchmark::DoNotOptimize(zariski_decompose(model, d));
  }
}
BENCHMARK(BM_ZariskiDecompose)->Arg(1)->Arg(2);

static void BM_SurfaceAsymH(benchmark::State& state) {
  const SurfaceModel model = state.range(0) == 0 ? elliptic_square() : blowup_plane(static_cast<unsigned>(state.range(0)));
  const auto classes = sample_classes(model.rank(), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(surface_asym_h(model, classes[i++ % classes.size()]));
}
BENCHMARK(BM_SurfaceAsymH)->Arg(0)->Arg(1)->Arg(2);

static void BM_EnumerateZariskiChambers(benchmark::State& state) {
  const SurfaceModel model = blowup_plane(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zariski_chambers(model));
}
BENCHMARK(BM_EnumerateZariskiChambers)->Arg(1)->Arg(2);
