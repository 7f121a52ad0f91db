#include "flexcat/catalysis.hpp"
#include "flexcat/gmultiset.hpp"
#include "flexcat/majorization.hpp"
#include "flexcat/polynomial.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

using namespace flexcat;

namespace {

GMultiset random_zvec(std::size_t support, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coord(-50, 50), mult(1, 9);
  std::vector<GMultiset::Entry> es;
  for (std::size_t i = 0; i < support; ++i)
    es.emplace_back(GroupElement::zvec({Integer(coord(rng)), Integer(coord(rng))}), Integer(mult(rng)));
  return GMultiset::from_entries(GroupKind::zvec, 2, es);
}

ProbVector random_prob(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> w(1, 100);
  std::vector<Rational> ws;
  for (std::size_t i = 0; i < n; ++i) ws.emplace_back(w(rng));
  return ProbVector::from_weights(ws);
}

IntPolynomial y_poly() { return IntPolynomial::univariate({2, 2, -1, 2, 2}); }

void BM_msum(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const auto a = random_zvec(st.range(0), rng), b = random_zvec(st.range(0), rng);
  for (auto _ : st) benchmark::DoNotOptimize(msum(a, b));
}
BENCHMARK(BM_msum)->Arg(8)->Arg(32)->Arg(128);

void BM_poly_pow(benchmark::State& st) {
  const auto p = y_poly();
  for (auto _ : st) benchmark::DoNotOptimize(poly_pow(p, st.range(0)));
}
BENCHMARK(BM_poly_pow)->Arg(8)->Arg(32)->Arg(128);

void BM_negativity(benchmark::State& st) {
  const auto p = construct_negativity_n(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(negativity(p, st.range(0) + 1));
}
BENCHMARK(BM_negativity)->DenseRange(2, 8, 3);

void BM_majorizes(benchmark::State& st) {
  std::mt19937_64 rng(2);
  const auto u = random_prob(st.range(0), rng), v = random_prob(st.range(0), rng);
  for (auto _ : st) benchmark::DoNotOptimize(check_majorization(u, v));
}
BENCHMARK(BM_majorizes)->Arg(16)->Arg(256)->Arg(4096);

void BM_flex_cycle_search(benchmark::State& st) {
  const auto tt = TTInstance::majorization();
  const State a = ProbVector({Rational(2, 5), Rational(2, 5), Rational(1, 10), Rational(1, 10)});
  const State b = ProbVector({Rational(1, 2), Rational(29, 100), Rational(21, 100)});
  std::mt19937_64 rng(3);
  std::vector<State> cats{a, b};
  while (cats.size() < static_cast<std::size_t>(st.range(0))) cats.push_back(random_prob(4, rng));
  for (auto _ : st) benchmark::DoNotOptimize(flex_cycle_search(tt, a, b, cats, false));
}
BENCHMARK(BM_flex_cycle_search)->Arg(2)->Arg(6)->Arg(12);

void BM_tensor_factorizations(benchmark::State& st) {
  std::mt19937_64 rng(4);
  const auto u = tensor(random_prob(st.range(0), rng), random_prob(st.range(0), rng));
  for (auto _ : st) benchmark::DoNotOptimize(tensor_factorizations(u));
}
BENCHMARK(BM_tensor_factorizations)->Arg(2)->Arg(3)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
