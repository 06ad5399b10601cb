#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relplectic/linf_poly.hpp"

using namespace relp;

TEST_CASE("generalized Jacobi identity vanishes for every arity") {
  std::mt19937_64 rng(31);
  for (const char* name : {"poly-n3", "poly-n3-degenerate"}) {
    const RelPlecticStructure s = poly_fixture(name);
    const LInfAlgebra A = build_Ham_inf(s);
    for (int arity = 1; arity <= s.n() + 1; ++arity) {
      for (int t = 0; t < 4; ++t) {
        std::vector<GradedElement> xs;
        for (int i = 0; i < arity; ++i) {
          const int deg = (rng() % 3 == 0) ? static_cast<int>(rng() % 3) : 0;
          xs.push_back(random_graded_element(s, deg, rng));
        }
        CHECK(gen_jacobi_residual(A, xs) == 0.0);
      }
    }
  }
}

TEST_CASE("higher brackets vanish on tuples of positive total degree") {
  std::mt19937_64 rng(32);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  const LInfAlgebra A = build_Ham_inf(s);
  for (int t = 0; t < 10; ++t) {
    std::vector<GradedElement> xs = {random_graded_element(s, 0, rng),
                                     random_graded_element(s, 1 + static_cast<int>(rng() % 2), rng)};
    if (rng() % 2 == 0) xs.push_back(random_graded_element(s, 0, rng));
    CHECK(A.bracket(xs).payload.is_zero());
  }
}

TEST_CASE("multibrackets are graded skew symmetric") {
  std::mt19937_64 rng(33);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  const LInfAlgebra A = build_Ham_inf(s);
  for (int t = 0; t < 10; ++t) {
    const int k = 2 + static_cast<int>(rng() % 3);
    std::vector<GradedElement> xs;
    for (int i = 0; i < k; ++i) xs.push_back(random_graded_element(s, 0, rng));
    CHECK(skew_symmetry_residual(A, xs, rng) == 0.0);
  }
}

TEST_CASE("kernel perturbation of a witness leaves every bracket unchanged") {
  std::mt19937_64 rng(34);
  const RelPlecticStructure s = poly_fixture("poly-n3-degenerate");
  const LInfAlgebra A = build_pre_Linf(s);
  PolyVec kern = PolyVec::zero(s.m_vars());
  kern.comps[6] = PolyScalar::constant(s.m_vars(), 1);
  for (int t = 0; t < 8; ++t) {
    std::vector<GradedElement> xs = {random_graded_element(s, 0, rng),
                                     random_graded_element(s, 0, rng),
                                     random_graded_element(s, 0, rng)};
    CHECK(witness_independence_residual(A, xs, kern) == 0.0);
  }
}

TEST_CASE("witness-free variant solves witnesses on the nondegenerate fixture") {
  std::mt19937_64 rng(35);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  const LInfAlgebra A = build_Linf(s);
  const LInfAlgebra H = build_Ham_inf(s);
  for (int t = 0; t < 5; ++t) {
    GradedElement a = random_graded_element(s, 0, rng);
    GradedElement b = random_graded_element(s, 0, rng);
    std::vector<GradedElement> with = {a, b};
    a.witness.reset();
    b.witness.reset();
    std::vector<GradedElement> without = {a, b};
    CHECK((A.bracket(without).payload - H.bracket(with).payload).is_zero());
  }
}

TEST_CASE("dg-Leibniz equations hold for all degree patterns") {
  std::mt19937_64 rng(36);
  for (const char* name : {"poly-n3", "poly-r4-r3"}) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int dy = 0; dy < std::min(2, s.n()); ++dy)
      for (int dz = 0; dz < std::min(2, s.n()); ++dz)
        for (int t = 0; t < 3; ++t) {
          const GradedElement x = random_graded_element(s, 0, rng);
          const GradedElement y = random_graded_element(s, dy, rng);
          const GradedElement z = random_graded_element(s, dz, rng);
          CHECK(leibniz_check(s, x, y, z).max() == 0.0);
        }
  }
}

TEST_CASE("comparison maps intertwine strictly on the nondegenerate fixture") {
  std::mt19937_64 rng(37);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  for (int t = 0; t < 5; ++t) CHECK(quasi_iso_check(s, rng).max() == 0.0);
}
