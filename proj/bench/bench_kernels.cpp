// Compares the OpenMP kernels against the serial reference implementations.
// The two paths are bit-identical by construction; this target measures the
// speedup only. Run: ./build/bench/bench_kernels

#include <benchmark/benchmark.h>

#include <set>
#include <utility>

#include "nagc/core.hpp"
#include "nagc/dataset.hpp"
#include "nagc/kernels.hpp"
#include "nagc/rng.hpp"

namespace {

using nagc::DenseMatrix;
using nagc::SparseSymGraph;

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  nagc::Rng rng(seed);
  DenseMatrix m(rows, cols);
  for (std::size_t i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform_open0_closed1();
  return m;
}

SparseSymGraph random_graph(std::size_t n, std::size_t edges_per_vertex, std::uint64_t seed) {
  nagc::Rng rng(seed);
  std::vector<SparseSymGraph::Edge> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (edges.size() < n * edges_per_vertex) {
    std::size_t i = rng.below(n), j = rng.below(n);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (seen.emplace(i, j).second) edges.push_back({i, j, 1.0});
  }
  return SparseSymGraph(n, std::move(edges));
}

constexpr std::size_t kN = 4000;
constexpr std::size_t kK = 8;

void bm_sigmoid_omp(benchmark::State& state) {
  nagc::set_parallel_kernels(true);
  const DenseMatrix m = random_matrix(kN, 256, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::sigmoid_map(m));
}
BENCHMARK(bm_sigmoid_omp);

void bm_sigmoid_serial(benchmark::State& state) {
  const DenseMatrix m = random_matrix(kN, 256, 7);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::reference::sigmoid_map(m));
}
BENCHMARK(bm_sigmoid_serial);

void bm_spmm_omp(benchmark::State& state) {
  nagc::set_parallel_kernels(true);
  const SparseSymGraph s = random_graph(kN, 16, 11);
  const DenseMatrix u = random_matrix(kN, kK, 13);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::sparse_dense_mul(s, u));
}
BENCHMARK(bm_spmm_omp);

void bm_spmm_serial(benchmark::State& state) {
  const SparseSymGraph s = random_graph(kN, 16, 11);
  const DenseMatrix u = random_matrix(kN, kK, 13);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::reference::sparse_dense_mul(s, u));
}
BENCHMARK(bm_spmm_serial);

void bm_masked_gram_omp(benchmark::State& state) {
  nagc::set_parallel_kernels(true);
  const SparseSymGraph s = random_graph(kN, 16, 11);
  const DenseMatrix u = random_matrix(kN, kK, 13);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::masked_gram_times(u, s));
}
BENCHMARK(bm_masked_gram_omp);

void bm_masked_gram_serial(benchmark::State& state) {
  const SparseSymGraph s = random_graph(kN, 16, 11);
  const DenseMatrix u = random_matrix(kN, kK, 13);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::reference::masked_gram_times(u, s));
}
BENCHMARK(bm_masked_gram_serial);

void bm_complement_gram_omp(benchmark::State& state) {
  nagc::set_parallel_kernels(true);
  const SparseSymGraph s = random_graph(kN, 16, 11);
  const DenseMatrix u = random_matrix(kN, kK, 13);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::complement_gram_times(u, s));
}
BENCHMARK(bm_complement_gram_omp);

void bm_complement_gram_serial(benchmark::State& state) {
  const SparseSymGraph s = random_graph(kN, 16, 11);
  const DenseMatrix u = random_matrix(kN, kK, 13);
  for (auto _ : state) benchmark::DoNotOptimize(nagc::reference::complement_gram_times(u, s));
}
BENCHMARK(bm_complement_gram_serial);

void bm_update_u_omp(benchmark::State& state) {
  nagc::set_parallel_kernels(true);
  const auto ds = nagc::generate_planted({1000, 4, 0.05, 0.005, 256, 0.8, 0.05, {}, 3});
  nagc::Hyperparams hp;
  hp.k1 = 4;
  hp.k2 = 4;
  const nagc::FactorModel model = nagc::init_random(1000, 256, hp);
  for (auto _ : state)
    benchmark::DoNotOptimize(nagc::update_u(ds.graph, ds.attributes, model, hp));
}
BENCHMARK(bm_update_u_omp);

void bm_update_u_serial(benchmark::State& state) {
  nagc::set_parallel_kernels(false);
  const auto ds = nagc::generate_planted({1000, 4, 0.05, 0.005, 256, 0.8, 0.05, {}, 3});
  nagc::Hyperparams hp;
  hp.k1 = 4;
  hp.k2 = 4;
  const nagc::FactorModel model = nagc::init_random(1000, 256, hp);
  for (auto _ : state)
    benchmark::DoNotOptimize(nagc::update_u(ds.graph, ds.attributes, model, hp));
  nagc::set_parallel_kernels(true);
}
BENCHMARK(bm_update_u_serial);

}  // namespace

BENCHMARK_MAIN();
