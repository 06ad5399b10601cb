// Acceptance gate: one machine-checked criterion per line; exit 0 iff all
// pass.  Each criterion states its own tolerance and runtime budget.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "relplectic/linf_poly.hpp"
#include "relplectic/moment.hpp"

using namespace relp;

namespace {

int g_failures = 0;

void criterion(int num, const std::string& what, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string err;
  try {
    ok = body();
  } catch (const std::exception& e) {
    err = e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++g_failures;
  std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", num, ok ? "PASS" : "FAIL",
              what.c_str(), secs, err.empty() ? "" : " exception: ", err.c_str());
  std::fflush(stdout);
}

bool within(double secs_budget, const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() <
         secs_budget;
}

PolyForm form_at_point(const PolyForm& a, const std::vector<Rational>& pt) {
  PolyForm r(a.degree(), a.num_vars());
  for (const auto& [idx, c] : a.comps())
    r.add_component(idx, PolyScalar::constant(a.num_vars(), c.eval(pt)));
  return r;
}

int rational_sign(const Rational& r) { return r == 0 ? 0 : (r > 0 ? 1 : -1); }

struct GroupCtx {
  LieAlgebra su2 = LieAlgebra::su2();
  LieAlgebra so3 = LieAlgebra::so3();

  QHamSpace space(const std::string& name, std::mt19937_64& rng) const {
    const double orient = detect_orientation(
        [&](double s) { return preset_space(name, su2, so3, s); }, rng, 8, 1e-10);
    return preset_space(name, su2, so3, orient);
  }
};

}  // namespace

int main() {
  std::setbuf(stdout, nullptr);
  GroupCtx ctx;

  criterion(1, "cone differential squares to zero on random polynomial data", [] {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(101);
    for (int t = 0; t < 100; ++t) {
      const int m = 2 + static_cast<int>(rng() % 4);  // m <= 5
      const int p = 1 + static_cast<int>(rng() % 4);  // p <= 4
      const int n = 1 + static_cast<int>(rng() % 4);  // n <= 4
      PolyMap F;
      for (int i = 0; i < p; ++i) F.comps.push_back(random_poly(rng, m, 2, 2));
      const int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(n + 1));
      const RelForm a{random_form(rng, deg - 1, m, 2, 2), random_form(rng, deg, p, 2, 2)};
      if (!rel_d(F, rel_d(F, a)).is_zero()) return false;
    }
    return within(5.0, t0);
  });

  criterion(2, "relative Cartan identities, exact and group backends", [&ctx] {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(102);
    int done = 0;
    for (const char* name : {"poly-n3", "poly-n3-degenerate", "poly-r4-r3"}) {
      const RelPlecticStructure s = poly_fixture(name);
      for (int t = 0; t < 17; ++t, ++done) {
        const int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.n() + 1));
        const RelForm a{random_form(rng, deg - 1, s.m_vars(), 2, 2),
                        random_form(rng, deg, s.n_vars(), 2, 2)};
        const RelVec x = random_related_pair(s, rng);
        const RelVec y{random_vec(rng, s.m_vars(), 2, 2),
                       random_vec(rng, s.n_vars(), 2, 2)};
        if (cartan_suite(s.F, x, y, a).max() != 0.0) return false;
      }
    }
    if (done < 50) return false;
    for (const char* name : {"conj-su2", "double-su2"}) {
      const QHamSpace sp = ctx.space(name, rng);
      const GRelStructure st = grel_structure(sp);
      for (int deg = 0; deg <= 2; ++deg)
        if (grel_cartan_suite(st, deg, rng, 17).max() >= 1e-10) return false;
    }
    return within(30.0, t0);
  });

  criterion(3, "Maurer-Cartan structure equations and closedness of the 3-form",
            [&ctx] {
              const auto t0 = std::chrono::steady_clock::now();
              std::mt19937_64 rng(103);
              for (const LieAlgebra* g : {&ctx.su2, &ctx.so3}) {
                if (maurer_cartan_residual_L(*g, rng, 100) >= 1e-10) return false;
                if (maurer_cartan_residual_R(*g, rng, 100) >= 1e-10) return false;
                if (eta_closed_residual(*g, rng, 100) >= 1e-10) return false;
              }
              return within(10.0, t0);
            });

  criterion(4, "golden value of the 3-form on the orthonormal basis", [&ctx] {
    std::mt19937_64 rng(104);
    const GForm eta = cartan_eta(ctx.su2);
    GroupManifold m(&ctx.su2);
    std::vector<J2Vec> args;
    for (int i = 0; i < 3; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(3);
      e(i) = 1;
      args.push_back(J2Vec::constant(e));
    }
    for (int t = 0; t < 10; ++t) {
      const GPoint p = m.random_point(rng);
      if (std::abs(eta.eval(p, args).v - 0.5) >= 1e-12) return false;
    }
    const AlgVec x = ctx.su2.random_alg_vec(rng), y = ctx.su2.random_alg_vec(rng),
                 z = ctx.su2.random_alg_vec(rng);
    const double v = eta.eval(m.random_point(rng),
                              {J2Vec::constant(x), J2Vec::constant(y), J2Vec::constant(z)})
                         .v;
    return std::abs(v - 0.5 * ctx.su2.inner(x, ctx.su2.bracket(y, z))) < 1e-12;
  });

  criterion(5, "moment-map axioms with kernel test at 100 points", [&ctx] {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(105);
    for (const char* name : {"conj-su2", "double-su2"}) {
      const QHamSpace sp = ctx.space(name, rng);
      const QHamAxiomsResult r = axioms_check(sp, rng, 100);
      if (r.max() >= 1e-8 || !r.kernel_trivial) return false;
    }
    return within(60.0, t0);
  });

  criterion(6, "generalized Jacobi identity, every arity and degree pattern", [] {
    std::mt19937_64 rng(106);
    const RelPlecticStructure s = poly_fixture("poly-n3");
    const LInfAlgebra A = build_Ham_inf(s);
    int tuples = 0;
    for (int arity = 1; arity <= 4; ++arity) {
      // sweep degree patterns: degrees 0..2, capped count so patterns with
      // positive entries are also hit
      const int reps = arity <= 2 ? 9 : 6;
      for (int t = 0; t < reps; ++t, ++tuples) {
        std::vector<GradedElement> xs;
        for (int i = 0; i < arity; ++i) {
          const int deg = (t + i) % 3 == 2 ? ((t + i) / 2) % 2 + 1 : 0;
          xs.push_back(random_graded_element(s, deg > s.n() - 1 ? 0 : deg, rng));
        }
        if (gen_jacobi_residual(A, xs) != 0.0) return false;
      }
    }
    if (tuples < 30) return false;
    // explicit positive-total-degree vanishing branch
    for (int t = 0; t < 10; ++t) {
      std::vector<GradedElement> xs = {random_graded_element(s, 0, rng),
                                       random_graded_element(s, 1, rng),
                                       random_graded_element(s, 0, rng)};
      if (!A.bracket(xs).payload.is_zero()) return false;
    }
    return true;
  });

  criterion(7, "two-term algebra: semi Jacobi up to exact, hemi strict, difference",
            [&ctx] {
              std::mt19937_64 rng(107);
              for (const char* name : {"conj-su2", "double-su2"}) {
                const QHamSpace sp = ctx.space(name, rng);
                const GRelStructure st = grel_structure(sp);
                if (lie2_axiom_suite(build_lie2_semi(st), rng, 10).max() >= 1e-8)
                  return false;
                if (lie2_axiom_suite(build_lie2_hemi(st), rng, 10).max() >= 1e-8)
                  return false;
                for (int t = 0; t < 8; ++t) {
                  const GHamElement a = random_l0_element(st, rng);
                  const GHamElement b = random_l0_element(st, rng);
                  const GRelForm diff = grel_hemi(st, a.witness, b.form) -
                                        grel_semi(st, a.witness, b.witness) -
                                        grel_d(st, grel_iota(a.witness, b.form));
                  if (grel_form_max(st, diff, rng, 6) >= 1e-8) return false;
                }
              }
              return true;
            });

  criterion(8, "differential graded Leibniz equations", [&ctx] {
    std::mt19937_64 rng(108);
    for (const char* name : {"conj-su2", "double-su2"}) {
      const QHamSpace sp = ctx.space(name, rng);
      const GRelStructure st = grel_structure(sp);
      if (leibniz_group_check(st, rng, 12).max() >= 1e-8) return false;
    }
    return true;
  });

  criterion(9, "homotopy lift of the action: morphism equations and projection",
            [&ctx] {
              const auto t0 = std::chrono::steady_clock::now();
              std::mt19937_64 rng(109);
              const QHamSpace sp = ctx.space("double-su2", rng);
              const GRelStructure st = grel_structure(sp);
              const MomentResiduals r = moment_check(st, rng, 12);
              if (r.max() >= 1e-8) return false;
              return within(60.0, t0);
            });

  criterion(10, "linear-type classification, exact rational arithmetic", [] {
    const PolyForm vol =
        PolyForm::monomial(6, {1, 2, 3, 4, 5, 6}, PolyScalar::constant(6, 1));
    if (!(hitchin_lambda(rep3form_positive(), vol) > 0)) return false;
    if (!(hitchin_lambda(rep3form_negative(), vol) < 0)) return false;
    if (hitchin_lambda(rep3form_null(), vol) != 0) return false;
    if (classify_3form(rep3form_positive()) != LinearType3Form::TypePositive) return false;
    if (classify_3form(rep3form_negative()) != LinearType3Form::TypeNegative) return false;
    if (classify_3form(rep3form_null()) != LinearType3Form::TypeNull) return false;
    // sign(lambda(omega_f at p)) = sign(f(p)) for f = x2, 20 points incl. origin
    const PolyForm omega_f = ryvkin_form(PolyScalar::variable(6, 2));
    std::mt19937_64 rng(110);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> pt(6, Rational(0));
      if (t > 0)
        for (int i = 0; i < 6; ++i) pt[static_cast<size_t>(i)] = Rational(num(rng), 1 + t % 3);
      const Rational f_val = pt[1];
      const Rational lam = hitchin_lambda(form_at_point(omega_f, pt), vol);
      if (rational_sign(lam) != rational_sign(f_val)) return false;
    }
    return true;
  });

  criterion(11, "bracket outputs are independent of the witness choice", [] {
    std::mt19937_64 rng(111);
    const RelPlecticStructure s = poly_fixture("poly-n3-degenerate");
    const LInfAlgebra A = build_pre_Linf(s);
    PolyVec kern = PolyVec::zero(s.m_vars());
    kern.comps[6] = PolyScalar::constant(s.m_vars(), 1);
    for (int t = 0; t < 10; ++t) {
      std::vector<GradedElement> xs = {random_graded_element(s, 0, rng),
                                       random_graded_element(s, 0, rng),
                                       random_graded_element(s, 0, rng)};
      if (witness_independence_residual(A, xs, kern) >= 1e-10) return false;
    }
    return true;
  });

  criterion(12, "comparison maps intertwine brackets strictly", [] {
    std::mt19937_64 rng(112);
    const RelPlecticStructure s = poly_fixture("poly-n3");
    for (int t = 0; t < 8; ++t)
      if (quasi_iso_check(s, rng).max() >= 1e-9) return false;
    return true;
  });

  if (g_failures == 0) {
    std::printf("acceptance: all 12 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
  return 1;
}
