#include <benchmark/benchmark.h>

#include "collapse_lab/criteria.hpp"
#include "collapse_lab/ssclass.hpp"

using namespace clab;

namespace {

std::shared_ptr<const GroupHandle> psl2(std::uint64_t q) {
  const CentralQuotient quo(std::make_shared<const GroupHandle>(sl_group(2, q)));
  return std::make_shared<const GroupHandle>(quo.image());
}

std::shared_ptr<const ConjClass> involutions(const GroupHandle& g) {
  return std::make_shared<const ConjClass>(
      conj_class(g, g.ctx()->canon(companion(g.ctx()->field(), Poly({1, 0, 1})))));
}

}  // namespace

static void BM_GroupClosureSL(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sl_group(2, q).size());
}
BENCHMARK(BM_GroupClosureSL)->Arg(7)->Arg(13)->Arg(23)->Unit(benchmark::kMillisecond);

static void BM_ClassOrbit(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  const auto f = Field::of_order(q);
  const auto ctx = GroupContext::projective(f, 2);
  const auto gens = sl_generators(*f, 2);
  const Matrix x = ctx->canon(companion(*f, Poly({1, 0, 1})));
  for (auto _ : state) benchmark::DoNotOptimize(conj_class(ctx, gens, x).size());
}
BENCHMARK(BM_ClassOrbit)->Arg(11)->Arg(23)->Arg(47)->Unit(benchmark::kMicrosecond);

static void BM_TypeDScan(benchmark::State& state) {
  const auto g = psl2(static_cast<std::uint64_t>(state.range(0)));
  const Rack rack = Rack::from_class(involutions(*g));
  SearchBounds b;
  b.threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    BoundsRecord rec;
    benchmark::DoNotOptimize(check_type_d(rack, b, rec));
  }
}
BENCHMARK(BM_TypeDScan)->Args({7, 1})->Args({7, 4})->Args({23, 1})->Args({23, 4})->Unit(benchmark::kMillisecond);

static void BM_TypeCLattice(benchmark::State& state) {
  const auto g = psl2(7);
  const Rack rack = Rack::from_class(involutions(*g));
  for (auto _ : state) {
    BoundsRecord rec;
    benchmark::DoNotOptimize(check_type_c(rack, {}, rec, g.get()));
  }
}
BENCHMARK(BM_TypeCLattice)->Unit(benchmark::kMillisecond);

static void BM_AustereCheck(benchmark::State& state) {
  const auto g = psl2(static_cast<std::uint64_t>(state.range(0)));
  const Field& f = g->ctx()->field();
  const Matrix x = g->ctx()->canon(enum_irreducible_labels(2, f.q()).back().representative);
  const Rack rack = Rack::from_class(std::make_shared<const ConjClass>(conj_class(*g, x)));
  for (auto _ : state) benchmark::DoNotOptimize(austere_check(rack).pass);
}
BENCHMARK(BM_AustereCheck)->Arg(13)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
