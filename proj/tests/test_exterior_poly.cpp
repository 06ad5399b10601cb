#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "relplectic/fixtures_poly.hpp"

using namespace relp;

namespace {
std::mt19937_64 rng_for(int salt) { return std::mt19937_64(1000 + salt); }
}  // namespace

TEST_CASE("wedge is graded commutative and associative") {
  auto rng = rng_for(1);
  for (int t = 0; t < 20; ++t) {
    const int m = 4 + static_cast<int>(rng() % 3);
    const int ka = static_cast<int>(rng() % 3), kb = static_cast<int>(rng() % 3);
    const PolyForm a = random_form(rng, ka, m, 2, 3);
    const PolyForm b = random_form(rng, kb, m, 2, 3);
    const PolyForm c = random_form(rng, 1, m, 2, 3);
    const Rational sign = (ka * kb) % 2 == 0 ? 1 : -1;
    CHECK((wedge(a, b) - wedge(b, a) * sign).is_zero());
    CHECK((wedge(wedge(a, b), c) - wedge(a, wedge(b, c))).is_zero());
  }
}

TEST_CASE("d is a square-zero antiderivation") {
  auto rng = rng_for(2);
  for (int t = 0; t < 20; ++t) {
    const int m = 4 + static_cast<int>(rng() % 3);
    const int ka = static_cast<int>(rng() % 3);
    const PolyForm a = random_form(rng, ka, m, 3, 3);
    const PolyForm b = random_form(rng, static_cast<int>(rng() % 3), m, 3, 3);
    CHECK(d(d(a)).is_zero());
    const Rational sign = ka % 2 == 0 ? 1 : -1;
    CHECK((d(wedge(a, b)) - wedge(d(a), b) - wedge(a, d(b)) * sign).is_zero());
  }
}

TEST_CASE("iota squares to zero and is an antiderivation") {
  auto rng = rng_for(3);
  for (int t = 0; t < 20; ++t) {
    const int m = 5;
    const int ka = 1 + static_cast<int>(rng() % 2);
    const PolyForm a = random_form(rng, ka, m, 2, 3);
    const PolyForm b = random_form(rng, 1 + static_cast<int>(rng() % 2), m, 2, 3);
    const PolyVec v = random_vec(rng, m, 2, 3);
    CHECK(iota(v, iota(v, wedge(a, b))).is_zero());
    const Rational sign = ka % 2 == 0 ? 1 : -1;
    CHECK((iota(v, wedge(a, b)) - wedge(iota(v, a), b) - wedge(a, iota(v, b)) * sign)
              .is_zero());
  }
}

TEST_CASE("Cartan magic formula and Lie bracket compatibility") {
  auto rng = rng_for(4);
  for (int t = 0; t < 15; ++t) {
    const int m = 4;
    const PolyForm a = random_form(rng, 2, m, 2, 3);
    const PolyVec u = random_vec(rng, m, 2, 3);
    const PolyVec v = random_vec(rng, m, 2, 3);
    CHECK((lie(u, a) - iota(u, d(a)) - d(iota(u, a))).is_zero());
    CHECK((lie(u, lie(v, a)) - lie(v, lie(u, a)) - lie(vec_bracket(u, v), a)).is_zero());
    CHECK((lie(u, iota(v, a)) - iota(v, lie(u, a)) - iota(vec_bracket(u, v), a)).is_zero());
  }
}

TEST_CASE("Poincare homotopy inverts d on positive degrees") {
  auto rng = rng_for(5);
  for (int t = 0; t < 15; ++t) {
    const int m = 4 + static_cast<int>(rng() % 2);
    const int k = 1 + static_cast<int>(rng() % 3);
    const PolyForm a = random_form(rng, k, m, 3, 3);
    CHECK((d(poincare_h(a)) + poincare_h(d(a)) - a).is_zero());
  }
}

TEST_CASE("pullback commutes with wedge and d") {
  auto rng = rng_for(6);
  for (int t = 0; t < 15; ++t) {
    const int m = 4, p = 3;
    PolyMap F;
    for (int i = 0; i < p; ++i) F.comps.push_back(random_poly(rng, m, 2, 3));
    const PolyForm a = random_form(rng, 1, p, 2, 3);
    const PolyForm b = random_form(rng, static_cast<int>(rng() % 2) + 1, p, 2, 3);
    CHECK((pullback(F, wedge(a, b)) - wedge(pullback(F, a), pullback(F, b))).is_zero());
    CHECK((pullback(F, d(a)) - d(pullback(F, a))).is_zero());
  }
}

TEST_CASE("form JSON round trip") {
  auto rng = rng_for(7);
  for (int t = 0; t < 10; ++t) {
    const PolyForm a = random_form(rng, 2, 5, 3, 4);
    CHECK(form_from_json(form_to_json(a)) == a);
  }
}

TEST_CASE("scalar invariant separates the three linear types") {
  const PolyForm vol = PolyForm::monomial(6, {1, 2, 3, 4, 5, 6}, PolyScalar::constant(6, 1));
  CHECK(hitchin_lambda(rep3form_positive(), vol) > 0);
  CHECK(hitchin_lambda(rep3form_negative(), vol) < 0);
  CHECK(hitchin_lambda(rep3form_null(), vol) == 0);
  CHECK(classify_3form(rep3form_positive()) == LinearType3Form::TypePositive);
  CHECK(classify_3form(rep3form_negative()) == LinearType3Form::TypeNegative);
  CHECK(classify_3form(rep3form_null()) == LinearType3Form::TypeNull);
}

TEST_CASE("invariant sign does not depend on the volume scale") {
  const PolyForm vol = PolyForm::monomial(6, {1, 2, 3, 4, 5, 6}, PolyScalar::constant(6, 1));
  const PolyForm vol2 = vol * Rational(3, 7);
  const Rational l1 = hitchin_lambda(rep3form_negative(), vol);
  const Rational l2 = hitchin_lambda(rep3form_negative(), vol2);
  CHECK(l1 < 0);
  CHECK(l2 < 0);
}
