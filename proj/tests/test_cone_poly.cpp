#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relplectic/cone_poly.hpp"

using namespace relp;

namespace {
const char* kFixtures[] = {"poly-n3", "poly-n3-degenerate", "poly-r4-r3"};
}

TEST_CASE("cone differential squares to zero, including the degree-1 edge") {
  std::mt19937_64 rng(21);
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int deg = 1; deg <= s.n() + 1; ++deg) {
      for (int t = 0; t < 5; ++t) {
        const RelForm a{random_form(rng, deg - 1, s.m_vars(), 2, 3),
                        random_form(rng, deg, s.n_vars(), 2, 3)};
        CHECK(rel_d(s.F, rel_d(s.F, a)).is_zero());
      }
    }
  }
}

TEST_CASE("relative structure is closed and fixture shapes are sane") {
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    CHECK(rel_d(s.F, s.omega).is_zero());
    CHECK(s.omega.degree() == s.n() + 1);
    CHECK(s.omega.alpha.num_vars() == s.m_vars());
    CHECK(s.omega.beta.num_vars() == s.n_vars());
  }
}

TEST_CASE("relative Cartan identities hold exactly on all fixtures") {
  std::mt19937_64 rng(22);
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int t = 0; t < 8; ++t) {
      const int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.n() + 1));
      const RelForm a{random_form(rng, deg - 1, s.m_vars(), 2, 2),
                      random_form(rng, deg, s.n_vars(), 2, 2)};
      const RelVec x = random_related_pair(s, rng);
      CHECK(f_related_residual(s.F, x) == 0.0);
      const RelVec y{random_vec(rng, s.m_vars(), 2, 2), random_vec(rng, s.n_vars(), 2, 2)};
      CHECK(cartan_suite(s.F, x, y, a).max() == 0.0);
    }
  }
}

TEST_CASE("random Hamiltonian elements satisfy the defining equation") {
  std::mt19937_64 rng(23);
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int t = 0; t < 6; ++t) {
      const HamElement e = random_ham_element(s, rng);
      CHECK(hamiltonian_residual(s, e) == 0.0);
      CHECK(f_related_residual(s.F, e.witness) == 0.0);
    }
  }
}

TEST_CASE("semi bracket: antisymmetry, Hamiltonian witness, Jacobi up to exact") {
  std::mt19937_64 rng(24);
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int t = 0; t < 5; ++t) {
      const HamElement a = random_ham_element(s, rng);
      const HamElement b = random_ham_element(s, rng);
      const HamElement c = random_ham_element(s, rng);
      const RelForm br = semi_bracket(s, a.witness, b.witness);
      CHECK((br + semi_bracket(s, b.witness, a.witness)).is_zero());
      // the bracket of witnesses witnesses the bracket
      CHECK(hamiltonian_residual(
                s, {br, rel_vec_bracket(a.witness, b.witness)}) == 0.0);
      CHECK(jacobi_up_to_exact_check(s, a.witness, b.witness, c.witness) == 0.0);
    }
  }
}

TEST_CASE("hemi bracket: strict Jacobi and exact antisymmetry defect") {
  std::mt19937_64 rng(25);
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int t = 0; t < 5; ++t) {
      const HamElement a = random_ham_element(s, rng);
      const HamElement b = random_ham_element(s, rng);
      const HamElement c = random_ham_element(s, rng);
      const RelVec ab = rel_vec_bracket(a.witness, b.witness);
      CHECK((hemi_bracket(s, a.witness, hemi_bracket(s, b.witness, c.form)) -
             hemi_bracket(s, ab, c.form) -
             hemi_bracket(s, b.witness, hemi_bracket(s, a.witness, c.form)))
                .is_zero());
      const RelForm S = rel_iota(a.witness, b.form) + rel_iota(b.witness, a.form);
      CHECK((hemi_bracket(s, a.witness, b.form) + hemi_bracket(s, b.witness, a.form) -
             rel_d(s.F, S))
                .is_zero());
    }
  }
}

TEST_CASE("hemi and semi brackets differ by the differential of a contraction") {
  std::mt19937_64 rng(26);
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    for (int t = 0; t < 5; ++t) {
      const HamElement a = random_ham_element(s, rng);
      const HamElement b = random_ham_element(s, rng);
      CHECK((hemi_bracket(s, a.witness, b.form) - semi_bracket(s, a.witness, b.witness) -
             rel_d(s.F, rel_iota(a.witness, b.form)))
                .is_zero());
    }
  }
}

TEST_CASE("Hamiltonian solving agrees with carried witnesses on the nondegenerate fixture") {
  std::mt19937_64 rng(27);
  const RelPlecticStructure s = poly_fixture("poly-n3");
  for (int t = 0; t < 5; ++t) {
    const HamElement e = random_ham_element(s, rng);
    const auto sol = hamiltonian_solve(s, e.form);
    REQUIRE(sol.has_value());
    CHECK(hamiltonian_residual(s, {e.form, sol->witness}) == 0.0);
  }
}

TEST_CASE("nondegeneracy probe separates the fixtures") {
  const std::vector<Rational> origin6(6, Rational(0));
  const std::vector<Rational> origin7(7, Rational(0));
  CHECK(nondeg_check(poly_fixture("poly-n3"), origin6));
  CHECK_FALSE(nondeg_check(poly_fixture("poly-n3-degenerate"), origin7));
}

TEST_CASE("relative structure JSON round trip") {
  for (const char* name : kFixtures) {
    const RelPlecticStructure s = poly_fixture(name);
    const RelPlecticStructure r = rel_structure_from_json(rel_structure_to_json(s));
    CHECK(r.omega == s.omega);
    CHECK(r.F.comps.size() == s.F.comps.size());
    for (size_t i = 0; i < r.F.comps.size(); ++i) CHECK(r.F.comps[i] == s.F.comps[i]);
  }
}
