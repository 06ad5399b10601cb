#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>

#include "relplectic/group_forms.hpp"

using namespace relp;

#ifndef RELPLECTIC_TEST_FIXTURES
#define RELPLECTIC_TEST_FIXTURES "fixtures"
#endif

namespace {
std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("structure constants pass the algebra sanity residuals") {
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    CHECK(g.antisymmetry_residual() < 1e-14);
    CHECK(g.jacobi_residual() < 1e-14);
    CHECK(g.ad_invariance_residual() < 1e-14);
    CHECK(g.matrix_compat_residual() < 1e-12);
  }
}

TEST_CASE("matrix exponential lands in the group and matches Ad") {
  std::mt19937_64 rng(41);
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    for (int t = 0; t < 20; ++t) {
      const GroupElt a = g.random_group_elt(rng);
      CHECK(g.group_membership_residual(a) < 1e-12);
      // Ad is a homomorphism into orthogonal matrices for these presets.
      const GroupElt b = g.random_group_elt(rng);
      CHECK((g.Ad(a * b) - g.Ad(a) * g.Ad(b)).norm() < 1e-12);
      CHECK((g.Ad(a) * g.Ad(a).transpose() -
             Eigen::MatrixXd::Identity(g.dim(), g.dim()))
                .norm() < 1e-12);
    }
  }
}

TEST_CASE("Maurer-Cartan structure equations") {
  std::mt19937_64 rng(42);
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    CHECK(maurer_cartan_residual_L(g, rng, 100) < 1e-10);
    CHECK(maurer_cartan_residual_R(g, rng, 100) < 1e-10);
  }
}

TEST_CASE("the bi-invariant 3-form is closed") {
  std::mt19937_64 rng(43);
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    CHECK(eta_closed_residual(g, rng, 100) < 1e-10);
  }
}

TEST_CASE("golden value on the orthonormal basis") {
  const LieAlgebra g = LieAlgebra::su2();
  const GForm eta = cartan_eta(g);
  GroupManifold m(&g);
  std::mt19937_64 rng(44);
  std::vector<J2Vec> args;
  for (int i = 0; i < 3; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(3);
    e(i) = 1;
    args.push_back(J2Vec::constant(e));
  }
  for (int t = 0; t < 5; ++t) {
    const GPoint p = m.random_point(rng);
    CHECK(std::abs(eta.eval(p, args).v - 0.5) < 1e-12);
  }
  // cross-check against 1/2 <x, [y, z]> on random triples
  for (int t = 0; t < 10; ++t) {
    const AlgVec x = g.random_alg_vec(rng), y = g.random_alg_vec(rng), z = g.random_alg_vec(rng);
    const GPoint p = m.random_point(rng);
    const double v = eta.eval(p, {J2Vec::constant(x), J2Vec::constant(y), J2Vec::constant(z)}).v;
    CHECK(std::abs(v - 0.5 * g.inner(x, g.bracket(y, z))) < 1e-12);
  }
}

TEST_CASE("3-form matches its Maurer-Cartan cubic expansion") {
  std::mt19937_64 rng(45);
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    const GForm eta = cartan_eta(g);
    const GForm eta2 = cartan_eta_expansion(g);
    GroupManifold m(&g);
    for (int t = 0; t < 10; ++t) {
      const GPoint p = m.random_point(rng);
      std::vector<J2Vec> args;
      for (int i = 0; i < 3; ++i) args.push_back(J2Vec::constant(g.random_alg_vec(rng)));
      CHECK(std::abs(eta.eval(p, args).v - eta2.eval(p, args).v) < 1e-12);
    }
  }
}

TEST_CASE("contraction and equivariance lemmas for the conjugation field") {
  std::mt19937_64 rng(46);
  // These group-level lemmas hold for the standard generating-field sign.
  const double orient = 1.0;
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    const AlgVec x = g.random_alg_vec(rng);
    const AlgVec y = g.random_alg_vec(rng);
    const AlgVec z = g.random_alg_vec(rng);
    CHECK(eta_contraction_residual(g, x, orient, rng, 30) < 1e-10);
    CHECK(equivariant_extension_residual(g, x, orient, rng, 30) < 1e-10);
    CHECK(theta_sum_fundamental_residual(g, x, orient, rng, 30) < 1e-10);
    CHECK(key_identity_residual(g, x, y, orient, rng, 30) < 1e-10);
    CHECK(f2_lie_derivative_residual(g, z, y, x, orient, rng, 30) < 1e-10);
    CHECK(eta_contraction_formula_residual(g, rng, 30) < 1e-10);
  }
}

TEST_CASE("triple contraction matches a consistent sign pattern") {
  std::mt19937_64 rng(47);
  for (const LieAlgebra& g : {LieAlgebra::su2(), LieAlgebra::so3()}) {
    const TripleContractionMatch m = triple_contraction_match(g, 1.0, rng, 20, 1e-9);
    CHECK(m.pattern >= 0);
    CHECK(m.residual < 1e-9);
  }
}

TEST_CASE("algebra JSON fixtures reproduce the builtins") {
  std::mt19937_64 rng(48);
  const std::string dir = RELPLECTIC_TEST_FIXTURES;
  const std::pair<std::string, LieAlgebra> cases[] = {
      {dir + "/su2.json", LieAlgebra::su2()}, {dir + "/so3.json", LieAlgebra::so3()}};
  for (const auto& [path, builtin] : cases) {
    const LieAlgebra loaded = LieAlgebra::from_json(slurp(path));
    CHECK(loaded.dim() == builtin.dim());
    CHECK((loaded.inner_product() - builtin.inner_product()).norm() == 0.0);
    for (int t = 0; t < 10; ++t) {
      const AlgVec x = builtin.random_alg_vec(rng), y = builtin.random_alg_vec(rng);
      CHECK((loaded.bracket(x, y) - builtin.bracket(x, y)).norm() < 1e-14);
      CHECK((loaded.exp(x) - builtin.exp(x)).norm() < 1e-12);
    }
  }
}
