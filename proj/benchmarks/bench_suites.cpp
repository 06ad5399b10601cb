#include <benchmark/benchmark.h>

#include "relplectic/linf_poly.hpp"
#include "relplectic/moment.hpp"

using namespace relp;

static void BM_ConeDifferential(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  const RelForm a{random_form(rng, 2, s.m_vars(), 2, 3),
                  random_form(rng, 3, s.n_vars(), 2, 3)};
  for (auto _ : state) benchmark::DoNotOptimize(rel_d(s.F, a));
}
BENCHMARK(BM_ConeDifferential);

static void BM_CartanSuitePoly(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  const RelForm a{random_form(rng, 2, s.m_vars(), 2, 2),
                  random_form(rng, 3, s.n_vars(), 2, 2)};
  const RelVec x = random_related_pair(s, rng);
  const RelVec y{random_vec(rng, s.m_vars(), 2, 2), random_vec(rng, s.n_vars(), 2, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(cartan_suite(s.F, x, y, a).max());
}
BENCHMARK(BM_CartanSuitePoly);

static void BM_GenJacobi(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  const LInfAlgebra A = build_Ham_inf(s);
  std::vector<GradedElement> xs;
  for (int i = 0; i < static_cast<int>(state.range(0)); ++i)
    xs.push_back(random_graded_element(s, 0, rng));
  for (auto _ : state) benchmark::DoNotOptimize(gen_jacobi_residual(A, xs));
}
BENCHMARK(BM_GenJacobi)->Arg(2)->Arg(3)->Arg(4);

static void BM_QHamAxioms(benchmark::State& state) {
  static const LieAlgebra su2 = LieAlgebra::su2();
  static const LieAlgebra so3 = LieAlgebra::so3();
  std::mt19937_64 rng(4);
  const QHamSpace sp = preset_space("double-su2", su2, so3, -1.0);
  for (auto _ : state) benchmark::DoNotOptimize(axioms_check(sp, rng, 10).max());
}
BENCHMARK(BM_QHamAxioms);

static void BM_ConeCartanGroup(benchmark::State& state) {
  static const LieAlgebra su2 = LieAlgebra::su2();
  static const LieAlgebra so3 = LieAlgebra::so3();
  static const QHamSpace sp = preset_space("conj-su2", su2, so3, -1.0);
  std::mt19937_64 rng(5);
  const GRelStructure st = grel_structure(sp);
  for (auto _ : state)
    benchmark::DoNotOptimize(grel_cartan_suite(st, 1, rng, 2).max());
}
BENCHMARK(BM_ConeCartanGroup);

static void BM_MomentCheck(benchmark::State& state) {
  static const LieAlgebra su2 = LieAlgebra::su2();
  static const LieAlgebra so3 = LieAlgebra::so3();
  static const QHamSpace sp = preset_space("double-su2", su2, so3, -1.0);
  std::mt19937_64 rng(6);
  const GRelStructure st = grel_structure(sp);
  for (auto _ : state) benchmark::DoNotOptimize(moment_check(st, rng, 2).max());
}
BENCHMARK(BM_MomentCheck);

BENCHMARK_MAIN();
