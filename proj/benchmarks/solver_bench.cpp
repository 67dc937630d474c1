#include <benchmark/benchmark.h>

#include <random>

#include "leaderline/fixtures.hpp"
#include "leaderline/pqtree.hpp"
#include "leaderline/sliding.hpp"
#include "leaderline/solver.hpp"
#include "leaderline/verify.hpp"

namespace {

using namespace leaderline;

Instance cities(int n, ObjectiveKind objective) {
  CitiesLikeOptions opt;
  opt.sites = n;
  opt.groups = n / 2;
  opt.seed = 3;
  opt.objective = objective;
  return gen_cities_like(opt);
}

void BM_SolveFixedLength(benchmark::State& state) {
  Instance inst = cities(static_cast<int>(state.range(0)), ObjectiveKind::Length);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fixed(inst));
}
BENCHMARK(BM_SolveFixedLength)->Arg(10)->Arg(15)->Arg(20)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_SolveFixedBends(benchmark::State& state) {
  Instance inst = cities(static_cast<int>(state.range(0)), ObjectiveKind::Bends);
  for (auto _ : state) benchmark::DoNotOptimize(solve_fixed(inst));
}
BENCHMARK(BM_SolveFixedBends)->Arg(10)->Arg(25)->Unit(benchmark::kMillisecond);

void BM_SolveSliding(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Instance inst;
  inst.mode = CandidateMode::Sliding;
  inst.objective = ObjectiveKind::Bends;
  inst.boundary = Boundary{0, 4 * n + 4, 0, 4 * n + 4};
  for (int i = 0; i < n; ++i) inst.sites.push_back(Site{i, 4 * i + 2, 2 * i + 1 + fraction(i, n + 1), 1});
  for (auto _ : state) benchmark::DoNotOptimize(solve_sliding(inst));
}
BENCHMARK(BM_SolveSliding)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BuildPQTree(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(7);
  std::vector<std::vector<int>> groups;
  for (int g = 0; g < n / 2; ++g) {
    const int start = static_cast<int>(rng() % (n - 3));
    groups.push_back({start, start + 1, start + 2, start + 3});
  }
  for (auto _ : state) benchmark::DoNotOptimize(PQTree::build(n, groups));
}
BENCHMARK(BM_BuildPQTree)->Arg(25)->Arg(100)->Arg(400);

void BM_Verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  Instance inst;
  inst.boundary = Boundary{0, 10 * n, 0, 10 * n};
  std::vector<int> ys(10 * n - 1);
  for (size_t i = 0; i < ys.size(); ++i) ys[i] = static_cast<int>(i) + 1;
  std::shuffle(ys.begin(), ys.end(), rng);
  for (int i = 0; i < n; ++i) {
    inst.sites.push_back(Site{i, 10 * i + 5, ys[i], 1});
    inst.candidates.push_back(Candidate{i, i % 2 ? Side::Left : Side::Right, ys[i]});
  }
  for (int g = 0; g + 4 < n; g += 8) inst.constraints.groups.push_back({g, g + 1, g + 2, g + 3});
  std::vector<int> assignment(n);
  for (int i = 0; i < n; ++i) assignment[i] = i;
  Labeling lab = labeling_from_assignment(inst, assignment);
  for (auto _ : state) benchmark::DoNotOptimize(verify(inst, lab));
}
BENCHMARK(BM_Verify)->Arg(50)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
