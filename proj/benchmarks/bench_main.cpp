// Microbenchmarks for the headline space/time comparisons. Every iteration
// uses a fresh arena so allocation counters describe exactly one run; the
// stream_cells counter reports the last iteration's stream-cell total.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "knot/arena.hpp"
#include "knot/bfs.hpp"
#include "knot/knots.hpp"
#include "knot/selfref.hpp"
#include "knot/stream.hpp"

namespace {

using i64 = std::int64_t;

knot::GenSpec counting_spec(i64 count) {
  knot::GenSpec spec;
  spec.seed = 0;
  spec.step = [](i64 y) { return y + 1; };
  spec.emit = [](i64 y) { return y; };
  spec.stop = [count](i64 y) { return y >= count; };
  return spec;
}

std::vector<i64> cycling_input(std::size_t len, i64 distinct) {
  std::vector<i64> xs(len);
  for (std::size_t j = 0; j < len; ++j) xs[j] = static_cast<i64>(j) % distinct;
  return xs;
}

void report_stream_cells(benchmark::State& state, std::uint64_t cells) {
  state.counters["stream_cells"] = static_cast<double>(cells);
}

void BM_ones_take(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    benchmark::DoNotOptimize(knot::take(knot::ones(a), k));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(k));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_ones_take)->Arg(1000)->Arg(100000);

void BM_circ_take(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    benchmark::DoNotOptimize(knot::take(knot::circ(a, counting_spec(15)), k));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(k));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_circ_take)->Arg(1000)->Arg(100000);

void BM_uncirc_take(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    benchmark::DoNotOptimize(knot::take(knot::uncirc(a, counting_spec(15)), k));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(k));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_uncirc_take)->Arg(1000)->Arg(100000);

void BM_double_list_round_trip(benchmark::State& state) {
  const i64 len = state.range(0);
  for (auto _ : state) {
    knot::Arena a;
    auto first = knot::double_list(a, counting_spec(len));
    benchmark::DoNotOptimize(knot::dbl_forward(first));
    benchmark::DoNotOptimize(knot::dbl_backward(first));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_double_list_round_trip)->Arg(256)->Arg(4096);

void BM_threaded_walk(benchmark::State& state) {
  const i64 n = state.range(0);
  std::vector<i64> xs(static_cast<std::size_t>(n));
  // balanced-ish insertion order: strided odd hops over [0, n)
  for (i64 i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = (i * 2654435761u) % n;
  for (auto _ : state) {
    knot::Arena a;
    auto root = knot::thread_tree(a, xs);
    benchmark::DoNotOptimize(knot::threaded_walk(root));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_threaded_walk)->Arg(256)->Arg(4096);

void BM_bfirst_infinite(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    benchmark::DoNotOptimize(knot::take(knot::bfirst(knot::heap_indexed_tree(a)), k));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(k));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_bfirst_infinite)->Arg(1000)->Arg(10000);

void BM_unique(benchmark::State& state) {
  const auto xs = cycling_input(static_cast<std::size_t>(state.range(0)), 50);
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    auto input = knot::stream_of<i64>(a, xs);
    const auto base = a.stats(knot::CellTag::stream_node).cells_allocated;
    benchmark::DoNotOptimize(knot::take(knot::unique(a, input), xs.size() + 1));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated - base;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_unique)->Arg(250)->Arg(1000)->Arg(4000);

void BM_unique_filtered(benchmark::State& state) {
  const auto xs = cycling_input(static_cast<std::size_t>(state.range(0)), 50);
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    auto input = knot::stream_of<i64>(a, xs);
    const auto base = a.stats(knot::CellTag::stream_node).cells_allocated;
    benchmark::DoNotOptimize(knot::take(knot::unique_filtered(input), xs.size() + 1));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated - base;
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_unique_filtered)->Arg(250)->Arg(1000)->Arg(4000);

void BM_unique_backpatch(benchmark::State& state) {
  const auto xs = cycling_input(static_cast<std::size_t>(state.range(0)), 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(knot::unique_backpatch(xs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_unique_backpatch)->Arg(250)->Arg(1000)->Arg(4000);

void BM_sieve_baseline(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    benchmark::DoNotOptimize(knot::take(knot::sieve_baseline(a), k));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(k));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_sieve_baseline)->Arg(100)->Arg(500);

void BM_primes_circular(benchmark::State& state) {
  const std::size_t k = static_cast<std::size_t>(state.range(0));
  std::uint64_t cells = 0;
  for (auto _ : state) {
    knot::Arena a;
    benchmark::DoNotOptimize(knot::take(knot::primes_circular(a), k));
    cells = a.stats(knot::CellTag::stream_node).cells_allocated;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(k));
  report_stream_cells(state, cells);
}
BENCHMARK(BM_primes_circular)->Arg(100)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
