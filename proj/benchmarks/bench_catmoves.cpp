#include <benchmark/benchmark.h>

#include "catmoves/enumeration.hpp"
#include "catmoves/movegraph.hpp"
#include "catmoves/moves.hpp"

namespace {

using namespace catmoves;

void BM_UnrankTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::uint64_t count = count_trees(n);
  std::uint64_t rank = 0;
  for (auto _ : state) {
    PlaneTree tree = unrank_tree(TreeIndex{n, rank});
    benchmark::DoNotOptimize(tree);
    rank = (rank + 7919) % count;
  }
}
BENCHMARK(BM_UnrankTree)->Arg(8)->Arg(12)->Arg(16);

void BM_EnumerateTrees(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    TreeStream stream(n);
    std::uint64_t seen = 0;
    while (auto tree = stream.next()) ++seen;
    benchmark::DoNotOptimize(seen);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(count_trees(n)));
}
BENCHMARK(BM_EnumerateTrees)->Arg(8)->Arg(10);

void BM_SiTreeSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<PlaneTree> trees = all_trees(n);
  for (auto _ : state) {
    std::uint64_t moved = 0;
    for (const PlaneTree& tree : trees) {
      for (int i = 1; i < 2 * n; ++i) {
        moved += s_i_tree(tree, i) == tree ? 0 : 1;
      }
    }
    benchmark::DoNotOptimize(moved);
  }
}
BENCHMARK(BM_SiTreeSweep)->Arg(6)->Arg(8);

void BM_BuildTypeA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  BuildOptions options;
  options.workers = static_cast<int>(state.range(1));
  for (auto _ : state) {
    MoveGraph graph = build_graph(GraphKind::TypeA, n, options);
    benchmark::DoNotOptimize(graph);
  }
}
BENCHMARK(BM_BuildTypeA)->Args({8, 1})->Args({8, 2})->Args({10, 1})->Args({10, 2});

void BM_GradingReport(benchmark::State& state) {
  const MoveGraph graph = build_graph(GraphKind::TypeA, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    GradingReport report = grading_report(graph);
    benchmark::DoNotOptimize(report);
  }
}
BENCHMARK(BM_GradingReport)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
