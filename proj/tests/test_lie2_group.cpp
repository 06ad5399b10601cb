#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relplectic/moment.hpp"

using namespace relp;

namespace {
struct Ctx {
  LieAlgebra su2 = LieAlgebra::su2();
  LieAlgebra so3 = LieAlgebra::so3();

  GRelStructure make(const std::string& name, std::mt19937_64& rng) const {
    const double orient = detect_orientation(
        [&](double s) { return preset_space(name, su2, so3, s); }, rng, 8, 1e-10);
    static std::vector<QHamSpace> keep;  // spaces must outlive the structures
    keep.push_back(preset_space(name, su2, so3, orient));
    return grel_structure(keep.back());
  }
};
}  // namespace

TEST_CASE("two-term algebra axioms, both bracket variants") {
  Ctx ctx;
  std::mt19937_64 rng(61);
  for (const char* name : {"conj-su2", "double-su2"}) {
    const GRelStructure st = ctx.make(name, rng);
    INFO(name);
    CHECK(lie2_axiom_suite(build_lie2_semi(st), rng, 8).max() < 1e-10);
    CHECK(lie2_axiom_suite(build_lie2_hemi(st), rng, 8).max() < 1e-10);
  }
}

TEST_CASE("hemi minus semi is the differential of a contraction") {
  Ctx ctx;
  std::mt19937_64 rng(62);
  for (const char* name : {"conj-so3", "double-su2"}) {
    const GRelStructure st = ctx.make(name, rng);
    for (int t = 0; t < 6; ++t) {
      const GHamElement a = random_l0_element(st, rng);
      const GHamElement b = random_l0_element(st, rng);
      const GRelForm lhs = grel_hemi(st, a.witness, b.form) -
                           grel_semi(st, a.witness, b.witness) -
                           grel_d(st, grel_iota(a.witness, b.form));
      CHECK(grel_form_max(st, lhs, rng, 6) < 1e-10);
    }
  }
}

TEST_CASE("dg-Leibniz equations, group backend") {
  Ctx ctx;
  std::mt19937_64 rng(63);
  for (const char* name : {"conj-su2", "double-so3"}) {
    const GRelStructure st = ctx.make(name, rng);
    CHECK(leibniz_group_check(st, rng, 10).max() < 1e-10);
  }
}

TEST_CASE("vector-field two-term algebra") {
  Ctx ctx;
  std::mt19937_64 rng(64);
  for (const char* name : {"conj-su2", "double-su2"}) {
    const GRelStructure st = ctx.make(name, rng);
    CHECK(atiyah_check(st, rng, 10).max() < 1e-10);
  }
}

TEST_CASE("Courant-style axioms with the detected twist sign") {
  Ctx ctx;
  std::mt19937_64 rng(65);
  for (const char* name : {"conj-su2", "double-su2"}) {
    const GRelStructure st = ctx.make(name, rng);
    const double twist = courant_detect_twist(st, rng, 6);
    INFO(name);
    CHECK(std::abs(twist) == 1.0);
    CHECK(courant_check(build_courant(st, twist), rng, 8).max() < 1e-10);
  }
}

TEST_CASE("morphism sequence: observables into pairs into fields") {
  Ctx ctx;
  std::mt19937_64 rng(66);
  for (const char* name : {"conj-so3", "double-su2"}) {
    const GRelStructure st = ctx.make(name, rng);
    const double twist = courant_detect_twist(st, rng, 6);
    const MorphismResiduals r =
        morphism_check(build_lie2_semi(st), build_courant(st, twist), rng, 8);
    INFO(name);
    CHECK(r.max() < 1e-10);
  }
}

TEST_CASE("homotopy lift of the infinitesimal action") {
  Ctx ctx;
  std::mt19937_64 rng(67);
  for (const char* name : {"double-su2", "conj-su2"}) {
    const GRelStructure st = ctx.make(name, rng);
    const MomentResiduals r = moment_check(st, rng, 10);
    INFO(name);
    CHECK(r.f1_hamiltonian < 1e-10);
    CHECK(r.f2_skew < 1e-10);
    CHECK(r.f2_formula < 1e-10);
    CHECK(r.cond1 < 1e-10);
    CHECK(r.cond2 < 1e-10);
    CHECK(r.pi_action < 1e-10);
  }
}
