#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relplectic/cone_group.hpp"

using namespace relp;

namespace {
const char* kPresets[] = {"conj-su2", "conj-so3", "double-su2", "double-so3"};

struct Ctx {
  LieAlgebra su2 = LieAlgebra::su2();
  LieAlgebra so3 = LieAlgebra::so3();

  QHamSpace make(const std::string& name, std::mt19937_64& rng) const {
    const double orient = detect_orientation(
        [&](double s) { return preset_space(name, su2, so3, s); }, rng, 8, 1e-10);
    return preset_space(name, su2, so3, orient);
  }
};
}  // namespace

TEST_CASE("moment-map axioms hold on every preset") {
  Ctx ctx;
  std::mt19937_64 rng(51);
  for (const char* name : kPresets) {
    const QHamSpace sp = ctx.make(name, rng);
    const QHamAxiomsResult r = axioms_check(sp, rng, 50);
    INFO(name);
    CHECK(r.axiom1 < 1e-10);
    CHECK(r.axiom2 < 1e-10);
    CHECK(r.equivariance < 1e-10);
    CHECK(r.invariance < 1e-10);
    CHECK(r.kernel_trivial);
  }
}

TEST_CASE("a consistent generating-field orientation exists and is shared") {
  Ctx ctx;
  std::mt19937_64 rng(52);
  double first = 0;
  for (const char* name : kPresets) {
    const double orient = detect_orientation(
        [&](double s) { return preset_space(name, ctx.su2, ctx.so3, s); }, rng, 8, 1e-10);
    if (first == 0) first = orient;
    CHECK(orient == first);
  }
}

TEST_CASE("cone Cartan identities on the group-built structures") {
  Ctx ctx;
  std::mt19937_64 rng(53);
  for (const char* name : {"conj-su2", "double-su2"}) {
    const QHamSpace sp = ctx.make(name, rng);
    const GRelStructure st = grel_structure(sp);
    for (int deg = 0; deg <= 2; ++deg) {
      INFO(name << " degree " << deg);
      CHECK(grel_cartan_suite(st, deg, rng, 6).max() < 1e-10);
    }
  }
}

TEST_CASE("the relative 3-form is cone-closed") {
  Ctx ctx;
  std::mt19937_64 rng(54);
  for (const char* name : kPresets) {
    const QHamSpace sp = ctx.make(name, rng);
    const GRelStructure st = grel_structure(sp);
    CHECK(grel_form_max(st, grel_d(st, st.omega), rng, 10) < 1e-10);
  }
}

TEST_CASE("fundamental pairs are map-related") {
  Ctx ctx;
  std::mt19937_64 rng(55);
  for (const char* name : kPresets) {
    const QHamSpace sp = ctx.make(name, rng);
    const GRelStructure st = grel_structure(sp);
    for (int t = 0; t < 5; ++t) {
      const GRelVec v = fundamental_pair(st, sp.g->random_alg_vec(rng));
      CHECK(grel_related_residual(st, v, rng, 10) < 1e-10);
    }
  }
}

TEST_CASE("moment cochains and cone-exact elements are Hamiltonian") {
  Ctx ctx;
  std::mt19937_64 rng(56);
  for (const char* name : {"conj-su2", "double-so3"}) {
    const QHamSpace sp = ctx.make(name, rng);
    const GRelStructure st = grel_structure(sp);
    for (int t = 0; t < 5; ++t) {
      const GHamElement m = moment_element(st, sp.g->random_alg_vec(rng));
      CHECK(grel_hamiltonian_residual(st, m, rng, 8) < 1e-10);
      const GHamElement e = exact_element(st, rng);
      CHECK(grel_hamiltonian_residual(st, e, rng, 8) < 1e-10);
    }
  }
}
