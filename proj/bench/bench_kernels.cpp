// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include "fixtures.hpp"
#include "gpi/kernels.hpp"

namespace {

const gpi::Grading& grading_for(int which) {
  static const auto z4 = fixtures::z4();
  static const auto z6 = fixtures::z6();
  return which == 0 ? z4 : z6;
}

constexpr std::size_t kCap = 50'000'000;

void BM_EnumerateSerial(benchmark::State& state) {
  const auto& gr = grading_for(static_cast<int>(state.range(0)));
  const auto degree = static_cast<std::size_t>(state.range(1));
  std::size_t n = 0;
  for (auto _ : state) {
    auto words = gpi::kernels::enumerate_identities_serial(gr, degree, true, kCap);
    n = words.size();
    benchmark::DoNotOptimize(words.data());
  }
  state.counters["words"] = static_cast<double>(n);
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto& gr = grading_for(static_cast<int>(state.range(0)));
  const auto degree = static_cast<std::size_t>(state.range(1));
  std::size_t n = 0;
  for (auto _ : state) {
    auto words = gpi::kernels::enumerate_identities_parallel(gr, degree, true, kCap);
    n = words.size();
    benchmark::DoNotOptimize(words.data());
  }
  state.counters["words"] = static_cast<double>(n);
  state.counters["threads"] = gpi::kernels::max_threads();
}

// All signed words of the given length over the support.
std::vector<gpi::SignedWord> all_words(const gpi::Grading& gr, std::size_t length) {
  std::vector<gpi::SignedWord> out{{}};
  for (std::size_t k = 0; k < length; ++k) {
    std::vector<gpi::SignedWord> next;
    for (const auto& w : out)
      for (const auto g : gr.support())
        for (const bool star : {false, true}) {
          auto v = w;
          v.push_back({g, star});
          next.push_back(std::move(v));
        }
    out = std::move(next);
  }
  return out;
}

template <bool Parallel>
void BM_Verdicts(benchmark::State& state) {
  const auto& gr = grading_for(static_cast<int>(state.range(0)));
  const auto words = all_words(gr, static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) {
    auto v = Parallel ? gpi::kernels::monomial_verdicts_parallel(gr, words)
                      : gpi::kernels::monomial_verdicts_serial(gr, words);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * words.size()));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Args({0, 8})->Args({1, 8})->Args({1, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Args({0, 8})->Args({1, 8})->Args({1, 9})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verdicts<false>)->Args({0, 6})->Args({1, 7})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Verdicts<true>)->Args({0, 6})->Args({1, 7})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
