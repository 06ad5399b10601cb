#include "relplectic/qham_models.hpp"

#include <cmath>
#include <stdexcept>

namespace relp {

GVec QHamSpace::fundamental(const AlgVec& x) const {
  GVec v;
  auto f = fund_impl;
  v.eval = [f, x](const GPoint& p) { return f(p, x); };
  return v;
}

QHamSpace conj_class_space(const LieAlgebra* g, const GroupElt& h0, double orientation) {
  QHamSpace sp;
  sp.g = g;
  sp.model = std::make_shared<ConjClassModel>(g, h0, orientation);
  sp.orientation = orientation;
  sp.name = "conj-" + g->name();

  const Eigen::MatrixXd ip = g->inner_product();
  sp.omega.degree = 2;
  sp.omega.eval = [ip](const GPoint& p, const std::vector<J2Vec>& args) {
    const J2Vec ax = p.ad[0] * args[0];
    const J2Vec ay = p.ad[0] * args[1];
    return (j2_inner(ip, args[1], ax) - j2_inner(ip, args[0], ay)) * 0.5;
  };

  sp.dphi = [orientation](const GPoint& p, const J2Vec& xi) {
    return (xi - p.ad[0].inverse() * xi) * orientation;
  };
  sp.phi_ad = [](const GPoint& p) { return p.ad[0]; };
  sp.fund_impl = [](const GPoint&, const AlgVec& x) { return J2Vec::constant(x); };
  sp.frame_realization = [orientation](const GPoint& p) {
    const int n = static_cast<int>(p.ad[0].v.rows());
    return Eigen::MatrixXd(
        orientation * (Eigen::MatrixXd::Identity(n, n) - p.ad[0].v.inverse()));
  };
  return sp;
}

QHamSpace double_space(const LieAlgebra* g, double orientation) {
  QHamSpace sp;
  sp.g = g;
  sp.model = std::make_shared<DoubleModel>(g, orientation);
  sp.orientation = orientation;
  sp.name = "double-" + g->name();

  const int n = g->dim();
  const Eigen::MatrixXd ip = g->inner_product();
  auto split = [n](const J2Vec& xi) {
    J2Vec a = J2Vec::zero(n), b = J2Vec::zero(n);
    a.v = xi.v.head(n);
    a.d1 = xi.d1.head(n);
    a.d2 = xi.d2.head(n);
    a.d12 = xi.d12.head(n);
    b.v = xi.v.tail(n);
    b.d1 = xi.d1.tail(n);
    b.d2 = xi.d2.tail(n);
    b.d12 = xi.d12.tail(n);
    return std::make_pair(a, b);
  };
  auto join = [n](const J2Vec& a, const J2Vec& b) {
    J2Vec r = J2Vec::zero(2 * n);
    r.v << a.v, b.v;
    r.d1 << a.d1, b.d1;
    r.d2 << a.d2, b.d2;
    r.d12 << a.d12, b.d12;
    return r;
  };

  // Internally fused double: the base pairing of left/right Maurer-Cartan
  // pullbacks plus the fusion cross-term <mu1*thetaL ^ mu2*thetaR> for the
  // partial moments mu1 = ab, mu2 = a^-1 b^-1.  Left-trivialized throughout.
  sp.omega.degree = 2;
  sp.omega.eval = [ip, split](const GPoint& p, const std::vector<J2Vec>& args) {
    auto [x1, y1] = split(args[0]);
    auto [x2, y2] = split(args[1]);
    const J2Mat& A = p.ad[0];
    const J2Mat& B = p.ad[1];
    const J2 base = j2_inner(ip, x1, B * y2) - j2_inner(ip, x2, B * y1) +
                    j2_inner(ip, A * x1, y2) - j2_inner(ip, A * x2, y1);
    const J2Vec m1a = B.inverse() * x1 + y1;
    const J2Vec m1b = B.inverse() * x2 + y2;
    const J2Vec m2a = (x1 + A.inverse() * y1) * -1.0;
    const J2Vec m2b = (x2 + A.inverse() * y2) * -1.0;
    const J2 fus = j2_inner(ip, m1a, m2b) - j2_inner(ip, m1b, m2a);
    return (base + fus) * 0.5;
  };

  // Phi(a,b) = a b a^{-1} b^{-1}; left-trivialized differential at (a,b):
  // dPhi(xi,zeta) = B[(A B^{-1} - A) xi + (A - 1) zeta].
  sp.dphi = [split](const GPoint& p, const J2Vec& t) {
    auto [xi, zeta] = split(t);
    const J2Mat& A = p.ad[0];
    const J2Mat& B = p.ad[1];
    const J2Vec part1 = A * (B.inverse() * xi) - A * xi;
    const J2Vec part2 = A * zeta - zeta;
    return B * (part1 + part2);
  };
  sp.phi_ad = [](const GPoint& p) {
    return p.ad[0] * p.ad[1] * p.ad[0].inverse() * p.ad[1].inverse();
  };
  sp.fund_impl = [join, orientation](const GPoint& p, const AlgVec& x) {
    const J2Vec cx = J2Vec::constant(x);
    return join((cx - p.ad[0].inverse() * cx) * orientation,
                (cx - p.ad[1].inverse() * cx) * orientation);
  };
  sp.frame_realization = [n](const GPoint&) {
    return Eigen::MatrixXd(Eigen::MatrixXd::Identity(2 * n, 2 * n));
  };
  return sp;
}

QHamSpace preset_space(const std::string& name, const LieAlgebra& su2, const LieAlgebra& so3,
                       double orientation) {
  auto near_identity = [](const LieAlgebra& g) {
    AlgVec x = AlgVec::Zero(g.dim());
    x(0) = 0.7;
    x(1) = -0.3;
    x(2) = 1.1;
    return g.exp(x);
  };
  if (name == "conj-su2") return conj_class_space(&su2, near_identity(su2), orientation);
  if (name == "conj-so3") return conj_class_space(&so3, near_identity(so3), orientation);
  if (name == "double-su2") return double_space(&su2, orientation);
  if (name == "double-so3") return double_space(&so3, orientation);
  throw std::invalid_argument("unknown space preset: " + name);
}

GForm phi_pullback(const QHamSpace& sp, const GForm& beta_on_group) {
  GForm r;
  r.degree = beta_on_group.degree;
  auto pad = sp.phi_ad;
  auto dphi = sp.dphi;
  auto b = beta_on_group;
  r.eval = [pad, dphi, b](const GPoint& p, const std::vector<J2Vec>& args) {
    GPoint q;
    q.ad.push_back(pad(p));
    q.slots = p.slots;
    std::vector<J2Vec> pushed;
    pushed.reserve(args.size());
    for (const auto& a : args) pushed.push_back(dphi(p, a));
    return b.eval(q, pushed);
  };
  return r;
}

GForm phi_pullback_scalar_pair(const QHamSpace& sp, const AlgVec& x) {
  return phi_pullback(sp, theta_sum_pair(*sp.g, x));
}

GVec infinitesimal_action(const QHamSpace& sp, const AlgVec& x) { return sp.fundamental(x); }

double QHamAxiomsResult::max() const {
  double m = std::fmax(axiom1, axiom2);
  m = std::fmax(m, equivariance);
  m = std::fmax(m, invariance);
  if (!kernel_trivial) m = std::fmax(m, 1.0);
  return m;
}

QHamAxiomsResult axioms_check(const QHamSpace& sp, std::mt19937_64& rng, int samples) {
  QHamAxiomsResult out;
  const GModel& m = *sp.model;
  const int t = m.tdim();
  const LieAlgebra& g = *sp.g;

  const GForm domega = d_model(m, sp.omega);
  const GForm pulled_eta = phi_pullback(sp, cartan_eta(g));

  auto rand_arg = [&](std::mt19937_64& r) {
    Eigen::VectorXd x(t);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < t; ++i) x(i) = u(r);
    return J2Vec::constant(x);
  };

  for (int s = 0; s < samples; ++s) {
    const GPoint p = m.random_point(rng);
    std::vector<J2Vec> a3 = {rand_arg(rng), rand_arg(rng), rand_arg(rng)};
    out.axiom1 = std::fmax(
        out.axiom1, std::fabs((domega.eval(p, a3) + pulled_eta.eval(p, a3)).v));

    const AlgVec x = g.random_alg_vec(rng);
    const GVec vx = sp.fundamental(x);
    const GForm lhs2 = iota_model(vx, sp.omega);
    const GForm rhs2 = phi_pullback_scalar_pair(sp, x) * 0.5;
    const std::vector<J2Vec> a1 = {rand_arg(rng)};
    out.axiom2 =
        std::fmax(out.axiom2, std::fabs((lhs2.eval(p, a1) - rhs2.eval(p, a1)).v));

    const J2Vec lhs_eq = sp.dphi(p, sp.fund_impl(p, x));
    const J2Mat aphi = sp.phi_ad(p);
    const J2Vec rhs_eq =
        (J2Vec::constant(x) - aphi.inverse() * J2Vec::constant(x)) * sp.orientation;
    out.equivariance = std::fmax(out.equivariance, (lhs_eq.v - rhs_eq.v).cwiseAbs().maxCoeff());

    const GForm lw = lie_model(m, vx, sp.omega);
    const std::vector<J2Vec> a2 = {rand_arg(rng), rand_arg(rng)};
    out.invariance = std::fmax(out.invariance, std::fabs(lw.eval(p, a2).v));

    // Non-degeneracy: parameter directions killed by both omega and dPhi
    // must already vanish as tangent vectors.
    Eigen::MatrixXd K1(t, t);
    std::vector<J2Vec> frame;
    for (int i = 0; i < t; ++i) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(t);
      e(i) = 1.0;
      frame.push_back(J2Vec::constant(e));
    }
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) K1(i, j) = sp.omega.eval(p, {frame[i], frame[j]}).v;
    const int n = g.dim();
    Eigen::MatrixXd K2(n, t);
    for (int i = 0; i < t; ++i) K2.col(i) = sp.dphi(p, frame[i]).v;
    Eigen::MatrixXd stacked(t + n, t);
    stacked << K1, K2;
    Eigen::FullPivLU<Eigen::MatrixXd> lu(stacked);
    lu.setThreshold(1e-9);
    const Eigen::MatrixXd ker = lu.kernel();
    const Eigen::MatrixXd V = sp.frame_realization(p);
    if (lu.dimensionOfKernel() > 0) {
      for (int c = 0; c < ker.cols(); ++c) {
        const double vn = (V * ker.col(c)).norm();
        if (vn > 1e-8 * ker.col(c).norm()) out.kernel_trivial = false;
      }
    }
  }
  return out;
}

double detect_orientation(const std::function<QHamSpace(double)>& make, std::mt19937_64& rng,
                          int samples, double tol) {
  for (double s : {1.0, -1.0}) {
    const QHamSpace sp = make(s);
    QHamAxiomsResult r = axioms_check(sp, rng, samples);
    if (r.max() < tol) return s;
  }
  throw std::runtime_error("no generating-field convention satisfies the moment-map axioms");
}

}  // namespace relp
