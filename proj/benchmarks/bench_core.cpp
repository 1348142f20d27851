#include <benchmark/benchmark.h>

#include <random>

#include "coxfree/basis_builder.hpp"
#include "coxfree/certification.hpp"
#include "coxfree/connection.hpp"
#include "coxfree/poly_matrix.hpp"

using namespace coxfree;

static Polynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned degree, std::size_t terms) {
  std::vector<Term> out;
  const auto monos = monomials_of_degree(n, degree);
  for (std::size_t t = 0; t < terms; ++t) {
    out.push_back(Term{monos[rng() % monos.size()], Scalar(static_cast<long>(rng() % 19) - 9, 1 + rng() % 4)});
  }
  return Polynomial::from_terms(n, std::move(out));
}

static void BM_PolynomialMultiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto terms = static_cast<std::size_t>(state.range(0));
  const auto p = random_poly(rng, 3, 8, terms);
  const auto q = random_poly(rng, 3, 8, terms);
  for (auto _ : state) benchmark::DoNotOptimize(p * q);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PolynomialMultiply)->RangeMultiplier(2)->Range(8, 64)->Complexity();

static void BM_Determinant(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  PolyMatrix m(n, n, 3);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = random_poly(rng, 3, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(m));
}
BENCHMARK(BM_Determinant)->DenseRange(2, 5);

static void BM_GroupAndInvariants(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(make_coxeter_system("B3"));
}
BENCHMARK(BM_GroupAndInvariants)->Unit(benchmark::kMillisecond);

static void BM_UniversalField(benchmark::State& state) {
  const auto sys = make_coxeter_system("B3");
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(universal_field(k, sys.invariants, sys.group));
}
BENCHMARK(BM_UniversalField)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_BuildBasis(benchmark::State& state) {
  const auto sys = make_coxeter_system("A3");
  BasisRequest req;
  req.multiplicity = Multiplicity::constant(sys.arrangement, 1);
  req.k = static_cast<unsigned>(state.range(0));
  req.source = BaseSource::Gradient;
  for (auto _ : state) benchmark::DoNotOptimize(build_basis(req, sys));
}
BENCHMARK(BM_BuildBasis)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

static void BM_GradedDimension(benchmark::State& state) {
  const auto sys = make_coxeter_system("B2");
  const auto m = Multiplicity::constant(sys.arrangement, 3);
  const auto d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(graded_dimension(m, d, sys.arrangement));
}
BENCHMARK(BM_GradedDimension)->DenseRange(4, 12, 4);

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
