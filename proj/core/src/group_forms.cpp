#include "relplectic/group_forms.hpp"

#include <cmath>
#include <stdexcept>

namespace relp {

J2Mat j2_ad(const LieAlgebra& g, const J2Vec& xi) {
  const int n = g.dim();
  J2Mat m = J2Mat::zero(n, n);
  for (int i = 0; i < n; ++i) {
    AlgVec ei = AlgVec::Zero(n);
    ei(i) = 1.0;
    const Eigen::MatrixXd adi = g.ad(ei);
    m.v += xi.v(i) * adi;
    m.d1 += xi.d1(i) * adi;
    m.d2 += xi.d2(i) * adi;
    m.d12 += xi.d12(i) * adi;
  }
  return m;
}

J2 extract_inner(const J2& x, int outer_slots) {
  if (outer_slots == 0) return {x.d1, 0, 0, 0};
  if (outer_slots == 1) return {x.d2, x.d12, 0, 0};
  throw std::runtime_error("extract_inner: jet depth exceeded");
}

J2Vec extract_inner(const J2Vec& x, int outer_slots) {
  const int n = x.size();
  J2Vec r = J2Vec::zero(n);
  if (outer_slots == 0) {
    r.v = x.d1;
  } else if (outer_slots == 1) {
    r.v = x.d2;
    r.d1 = x.d12;
  } else {
    throw std::runtime_error("extract_inner: jet depth exceeded");
  }
  return r;
}

namespace {

GPoint with_derivative(const GPoint& p, const std::vector<J2Mat>& D) {
  if (p.slots >= 2) throw std::runtime_error("GPoint: jet depth exceeded");
  GPoint r = p;
  for (size_t i = 0; i < r.ad.size(); ++i) {
    if (p.slots == 0) {
      r.ad[i].d1 = D[i].v;
    } else {
      r.ad[i].d2 = D[i].v;
      r.ad[i].d12 = D[i].d1;
    }
  }
  r.slots = p.slots + 1;
  return r;
}

}  // namespace

GPoint GroupManifold::random_point(std::mt19937_64& rng) const {
  GPoint p;
  p.ad.push_back(J2Mat::constant(g_->Ad(g_->random_group_elt(rng))));
  return p;
}

GPoint GroupManifold::flow(const GPoint& p, const J2Vec& xi) const {
  const J2Mat D = p.ad[0] * j2_ad(*g_, xi);
  return with_derivative(p, {D});
}

J2Vec GroupManifold::frame_bracket(const J2Vec& a, const J2Vec& b) const {
  return j2_ad(*g_, a) * b;
}

GPoint ConjClassModel::random_point(std::mt19937_64& rng) const {
  const GroupElt g = g_->random_group_elt(rng);
  GPoint p;
  p.ad.push_back(J2Mat::constant(g_->Ad(g * h0_ * g.inverse())));
  return p;
}

GPoint ConjClassModel::flow(const GPoint& p, const J2Vec& xi) const {
  // Frame field for coefficient x is conjugation by exp(-orient * t * x);
  // this matches the left-trivialized realization orient * (1 - Ad^{-1}) x.
  const J2Mat adx = j2_ad(*g_, xi);
  J2Mat D = p.ad[0] * adx - adx * p.ad[0];
  D.v *= orient_;
  D.d1 *= orient_;
  D.d2 *= orient_;
  D.d12 *= orient_;
  return with_derivative(p, {D});
}

J2Vec ConjClassModel::frame_bracket(const J2Vec& a, const J2Vec& b) const {
  // Left-action fundamental fields reverse the bracket; the extra flow sign
  // flips it back.
  return (j2_ad(*g_, a) * b) * orient_;
}

GPoint DoubleModel::random_point(std::mt19937_64& rng) const {
  GPoint p;
  p.ad.push_back(J2Mat::constant(g_->Ad(g_->random_group_elt(rng))));
  p.ad.push_back(J2Mat::constant(g_->Ad(g_->random_group_elt(rng))));
  p.slots = 0;
  return p;
}

namespace {
std::pair<J2Vec, J2Vec> split_pair(const J2Vec& xi, int n) {
  J2Vec a = J2Vec::zero(n), b = J2Vec::zero(n);
  a.v = xi.v.head(n);
  a.d1 = xi.d1.head(n);
  a.d2 = xi.d2.head(n);
  a.d12 = xi.d12.head(n);
  b.v = xi.v.tail(n);
  b.d1 = xi.d1.tail(n);
  b.d2 = xi.d2.tail(n);
  b.d12 = xi.d12.tail(n);
  return {a, b};
}

J2Vec join_pair(const J2Vec& a, const J2Vec& b) {
  const int n = a.size();
  J2Vec r = J2Vec::zero(2 * n);
  r.v << a.v, b.v;
  r.d1 << a.d1, b.d1;
  r.d2 << a.d2, b.d2;
  r.d12 << a.d12, b.d12;
  return r;
}
}  // namespace

GPoint DoubleModel::flow(const GPoint& p, const J2Vec& xi) const {
  const int n = g_->dim();
  auto [x1, x2] = split_pair(xi, n);
  const J2Mat Da = p.ad[0] * j2_ad(*g_, x1);
  const J2Mat Db = p.ad[1] * j2_ad(*g_, x2);
  return with_derivative(p, {Da, Db});
}

J2Vec DoubleModel::frame_bracket(const J2Vec& a, const J2Vec& b) const {
  const int n = g_->dim();
  auto [a1, a2] = split_pair(a, n);
  auto [b1, b2] = split_pair(b, n);
  return join_pair(j2_ad(*g_, a1) * b1, j2_ad(*g_, a2) * b2);
}

GForm GForm::zero(int degree) {
  GForm f;
  f.degree = degree;
  f.eval = [](const GPoint&, const std::vector<J2Vec>&) { return J2(0.0); };
  return f;
}

GForm GForm::operator+(const GForm& o) const {
  if (degree != o.degree) throw std::invalid_argument("GForm +: degree mismatch");
  GForm r;
  r.degree = degree;
  auto a = eval, b = o.eval;
  r.eval = [a, b](const GPoint& p, const std::vector<J2Vec>& args) {
    return a(p, args) + b(p, args);
  };
  return r;
}

GForm GForm::operator-(const GForm& o) const { return *this + (o * -1.0); }

GForm GForm::operator*(double c) const {
  GForm r;
  r.degree = degree;
  auto a = eval;
  r.eval = [a, c](const GPoint& p, const std::vector<J2Vec>& args) { return a(p, args) * c; };
  return r;
}

GVec GVec::constant_frame(const Eigen::VectorXd& x) {
  GVec v;
  v.eval = [x](const GPoint&) { return J2Vec::constant(x); };
  return v;
}

GVec GVec::operator+(const GVec& o) const {
  auto a = eval, b = o.eval;
  GVec r;
  r.eval = [a, b](const GPoint& p) { return a(p) + b(p); };
  return r;
}

GVec GVec::operator*(double c) const {
  auto a = eval;
  GVec r;
  r.eval = [a, c](const GPoint& p) { return a(p) * c; };
  return r;
}

GForm d_model(const GModel& m, const GForm& beta) {
  GForm r;
  r.degree = beta.degree + 1;
  const GModel* mp = &m;
  auto b = beta;
  r.eval = [mp, b](const GPoint& p, const std::vector<J2Vec>& args) {
    const int k1 = b.degree + 1;
    J2 total(0.0);
    for (int i = 0; i < k1; ++i) {
      const GPoint p2 = mp->flow(p, args[static_cast<size_t>(i)]);
      std::vector<J2Vec> rest;
      for (int t = 0; t < k1; ++t)
        if (t != i) rest.push_back(args[static_cast<size_t>(t)]);
      const J2 der = extract_inner(b.eval(p2, rest), p.slots);
      total += ((i % 2 == 0) ? 1.0 : -1.0) * der;
    }
    for (int i = 0; i < k1; ++i) {
      for (int j = i + 1; j < k1; ++j) {
        std::vector<J2Vec> a2;
        a2.push_back(mp->frame_bracket(args[static_cast<size_t>(i)], args[static_cast<size_t>(j)]));
        for (int t = 0; t < k1; ++t)
          if (t != i && t != j) a2.push_back(args[static_cast<size_t>(t)]);
        total += (((i + j) % 2 == 0) ? 1.0 : -1.0) * b.eval(p, a2);
      }
    }
    return total;
  };
  return r;
}

GForm iota_model(const GVec& v, const GForm& beta) {
  if (beta.degree == 0) return GForm::zero(0);
  GForm r;
  r.degree = beta.degree - 1;
  auto ve = v.eval;
  auto b = beta;
  r.eval = [ve, b](const GPoint& p, const std::vector<J2Vec>& args) {
    std::vector<J2Vec> a2;
    a2.push_back(ve(p));
    a2.insert(a2.end(), args.begin(), args.end());
    return b.eval(p, a2);
  };
  return r;
}

GForm lie_model(const GModel& m, const GVec& v, const GForm& beta) {
  if (beta.degree == 0) return iota_model(v, d_model(m, beta));
  return iota_model(v, d_model(m, beta)) + d_model(m, iota_model(v, beta));
}

GVec field_bracket(const GModel& m, const GVec& x, const GVec& y) {
  const GModel* mp = &m;
  auto xe = x.eval, ye = y.eval;
  GVec r;
  r.eval = [mp, xe, ye](const GPoint& p) {
    const J2Vec xv = xe(p);
    const J2Vec yv = ye(p);
    const J2Vec dy = extract_inner(ye(mp->flow(p, xv)), p.slots);
    const J2Vec dx = extract_inner(xe(mp->flow(p, yv)), p.slots);
    return dy - dx + mp->frame_bracket(xv, yv);
  };
  return r;
}

GVForm theta_L(const LieAlgebra& g) {
  GVForm f;
  f.degree = 1;
  f.eval = [](const GPoint&, const std::vector<J2Vec>& args) { return args[0]; };
  return f;
}

GVForm theta_R(const LieAlgebra& g) {
  GVForm f;
  f.degree = 1;
  f.eval = [](const GPoint& p, const std::vector<J2Vec>& args) { return p.ad[0] * args[0]; };
  return f;
}

GForm theta_sum_pair(const LieAlgebra& g, const AlgVec& x) {
  GForm f;
  f.degree = 1;
  const Eigen::MatrixXd ip = g.inner_product();
  f.eval = [ip, x](const GPoint& p, const std::vector<J2Vec>& args) {
    const J2Vec val = args[0] + p.ad[0] * args[0];
    return j2_inner(ip, J2Vec::constant(x), val);
  };
  return f;
}

GForm cartan_eta(const LieAlgebra& g) {
  GForm f;
  f.degree = 3;
  const LieAlgebra* gp = &g;
  f.eval = [gp](const GPoint&, const std::vector<J2Vec>& args) {
    const J2Vec br = j2_ad(*gp, args[1]) * args[2];
    return j2_inner(gp->inner_product(), args[0], br) * 0.5;
  };
  return f;
}

GForm cartan_eta_expansion(const LieAlgebra& g) {
  GForm f;
  f.degree = 3;
  const LieAlgebra* gp = &g;
  f.eval = [gp](const GPoint&, const std::vector<J2Vec>& args) {
    static const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1},
                                    {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
    J2 total(0.0);
    for (const auto& pr : perms) {
      const J2Vec br = j2_ad(*gp, args[static_cast<size_t>(pr[1])]) * args[static_cast<size_t>(pr[2])];
      total += static_cast<double>(pr[3]) *
               j2_inner(gp->inner_product(), args[static_cast<size_t>(pr[0])], br);
    }
    return total * (1.0 / 12.0);
  };
  return f;
}

GVec conj_fundamental_field(const LieAlgebra& g, const AlgVec& x, double orientation) {
  GVec v;
  v.eval = [x, orientation](const GPoint& p) {
    const J2Vec ax = p.ad[0].inverse() * J2Vec::constant(x);
    return (J2Vec::constant(x) - ax) * orientation;
  };
  return v;
}

GForm f2_scalar(const LieAlgebra& g, const AlgVec& x, const AlgVec& y) {
  GForm f;
  f.degree = 0;
  const Eigen::MatrixXd ip = g.inner_product();
  f.eval = [ip, x, y](const GPoint& p, const std::vector<J2Vec>&) {
    const J2Vec ax = p.ad[0] * J2Vec::constant(x);
    const J2Vec ainvx = p.ad[0].inverse() * J2Vec::constant(x);
    return j2_inner(ip, ax - ainvx, J2Vec::constant(y)) * 0.5;
  };
  return f;
}

namespace {

/// Vector-valued exterior derivative (same global formula as d_model).
J2Vec d_vform_eval(const GModel& m, const GVForm& b, const GPoint& p,
                   const std::vector<J2Vec>& args) {
  const int k1 = b.degree + 1;
  const int n = m.algebra().dim();
  J2Vec total = J2Vec::zero(n);
  for (int i = 0; i < k1; ++i) {
    const GPoint p2 = m.flow(p, args[static_cast<size_t>(i)]);
    std::vector<J2Vec> rest;
    for (int t = 0; t < k1; ++t)
      if (t != i) rest.push_back(args[static_cast<size_t>(t)]);
    total = total + extract_inner(b.eval(p2, rest), p.slots) * ((i % 2 == 0) ? 1.0 : -1.0);
  }
  for (int i = 0; i < k1; ++i)
    for (int j = i + 1; j < k1; ++j) {
      std::vector<J2Vec> a2;
      a2.push_back(m.frame_bracket(args[static_cast<size_t>(i)], args[static_cast<size_t>(j)]));
      for (int t = 0; t < k1; ++t)
        if (t != i && t != j) a2.push_back(args[static_cast<size_t>(t)]);
      total = total + b.eval(p, a2) * (((i + j) % 2 == 0) ? 1.0 : -1.0);
    }
  return total;
}

J2Vec random_frame_vec(const LieAlgebra& g, std::mt19937_64& rng) {
  return J2Vec::constant(g.random_alg_vec(rng));
}

}  // namespace

double maurer_cartan_residual_L(const LieAlgebra& g, std::mt19937_64& rng, int samples) {
  GroupManifold G(&g);
  const GVForm tl = theta_L(g);
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const J2Vec xi = random_frame_vec(g, rng), zeta = random_frame_vec(g, rng);
    const J2Vec lhs = d_vform_eval(G, tl, p, {xi, zeta});
    // [theta_L, theta_L](X,Y) = 2 [X, Y]; residual of d theta_L + 1/2 [.,.].
    const J2Vec rhs = j2_ad(g, xi) * zeta;
    r.update((lhs.v + rhs.v).cwiseAbs().maxCoeff());
  }
  return r.value;
}

double maurer_cartan_residual_R(const LieAlgebra& g, std::mt19937_64& rng, int samples) {
  GroupManifold G(&g);
  const GVForm tr = theta_R(g);
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const J2Vec xi = random_frame_vec(g, rng), zeta = random_frame_vec(g, rng);
    const J2Vec lhs = d_vform_eval(G, tr, p, {xi, zeta});
    // theta_R(xi) = Ad xi; [theta_R,theta_R](X,Y) = 2 [Ad X, Ad Y].
    const J2Vec rhs = j2_ad(g, p.ad[0] * xi) * (p.ad[0] * zeta);
    r.update((lhs.v - rhs.v).cwiseAbs().maxCoeff());
  }
  return r.value;
}

double eta_closed_residual(const LieAlgebra& g, std::mt19937_64& rng, int samples) {
  GroupManifold G(&g);
  const GForm deta = d_model(G, cartan_eta(g));
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    std::vector<J2Vec> args;
    for (int i = 0; i < 4; ++i) args.push_back(random_frame_vec(g, rng));
    r.update(std::fabs(deta.eval(p, args).v));
  }
  return r.value;
}

double eta_contraction_residual(const LieAlgebra& g, const AlgVec& x, double orientation,
                                std::mt19937_64& rng, int samples) {
  GroupManifold G(&g);
  const GVec vx = conj_fundamental_field(g, x, orientation);
  const GForm lhs = iota_model(vx, cartan_eta(g));
  const GForm rhs = d_model(G, theta_sum_pair(g, x)) * 0.5;
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const std::vector<J2Vec> args = {random_frame_vec(g, rng), random_frame_vec(g, rng)};
    r.update(std::fabs((lhs.eval(p, args) + rhs.eval(p, args)).v));
  }
  return r.value;
}

double eta_contraction_formula_residual(const LieAlgebra& g, std::mt19937_64& rng,
                                        int samples) {
  GroupManifold G(&g);
  const GForm eta = cartan_eta(g);
  const GVForm tl = theta_L(g);
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const J2Vec X = random_frame_vec(g, rng);
    const J2Vec xi = random_frame_vec(g, rng), zeta = random_frame_vec(g, rng);
    const J2 lhs = eta.eval(p, {X, xi, zeta});
    const J2Vec dtl = d_vform_eval(G, tl, p, {xi, zeta});
    const J2 rhs = j2_inner(g.inner_product(), X, dtl) * -0.5;
    r.update(std::fabs(lhs.v - rhs.v));
  }
  return r.value;
}

double equivariant_extension_residual(const LieAlgebra& g, const AlgVec& x,
                                      double orientation, std::mt19937_64& rng,
                                      int samples) {
  GroupManifold G(&g);
  const GVec vx = conj_fundamental_field(g, x, orientation);
  const GForm eta = cartan_eta(g);
  const GForm beta = theta_sum_pair(g, x) * 0.5;
  // Degree 4: d eta; degree 2: -iota eta - d beta; degree 0: iota beta.
  const GForm deg4 = d_model(G, eta);
  const GForm deg2 = (iota_model(vx, eta) + d_model(G, beta)) * -1.0;
  const GForm deg0 = iota_model(vx, beta);
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    std::vector<J2Vec> a4, a2;
    for (int i = 0; i < 4; ++i) a4.push_back(random_frame_vec(g, rng));
    for (int i = 0; i < 2; ++i) a2.push_back(random_frame_vec(g, rng));
    r.update(std::fabs(deg4.eval(p, a4).v));
    r.update(std::fabs(deg2.eval(p, a2).v));
    r.update(std::fabs(deg0.eval(p, {}).v));
  }
  return r.value;
}

double theta_sum_fundamental_residual(const LieAlgebra& g, const AlgVec& x,
                                      double orientation, std::mt19937_64& rng,
                                      int samples) {
  GroupManifold G(&g);
  const GVec vx = conj_fundamental_field(g, x, orientation);
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const J2Vec v = vx.eval(p);
    const J2Vec lhs = v + p.ad[0] * v;
    const J2Vec rhs =
        (p.ad[0] * J2Vec::constant(x) - p.ad[0].inverse() * J2Vec::constant(x)) * orientation;
    r.update((lhs.v - rhs.v).cwiseAbs().maxCoeff());
  }
  return r.value;
}

double f2_lie_derivative_residual(const LieAlgebra& g, const AlgVec& z, const AlgVec& y,
                                  const AlgVec& x, double orientation, std::mt19937_64& rng,
                                  int samples) {
  GroupManifold G(&g);
  const GVec vz = conj_fundamental_field(g, z, orientation);
  const GForm lhs = lie_model(G, vz, f2_scalar(g, y, x));
  // The flow conjugates Ad_g on both sides, so both arguments rotate the
  // same way; the orientation scales the whole derivative.
  const GForm rhs = (f2_scalar(g, g.bracket(z, y), x) + f2_scalar(g, y, g.bracket(z, x))) *
                    orientation;
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    r.update(std::fabs((lhs.eval(p, {}) - rhs.eval(p, {})).v));
  }
  return r.value;
}

double key_identity_residual(const LieAlgebra& g, const AlgVec& x, const AlgVec& y,
                             double orientation, std::mt19937_64& rng, int samples) {
  GroupManifold G(&g);
  const GVec vx = conj_fundamental_field(g, x, orientation);
  const GVec vy = conj_fundamental_field(g, y, orientation);
  const GForm a = theta_sum_pair(g, g.bracket(x, y)) * 0.5;
  const GForm b = iota_model(vx, iota_model(vy, cartan_eta(g)));
  const GForm c = d_model(G, iota_model(vx, theta_sum_pair(g, y))) * 0.5;
  MaxResidual r;
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const std::vector<J2Vec> args = {random_frame_vec(g, rng)};
    r.update(std::fabs((a.eval(p, args) + b.eval(p, args) - c.eval(p, args)).v));
  }
  return r.value;
}

TripleContractionMatch triple_contraction_match(const LieAlgebra& g, double orientation,
                                                std::mt19937_64& rng, int samples,
                                                double tol) {
  GroupManifold G(&g);
  const GForm eta = cartan_eta(g);
  double worst[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (int s = 0; s < samples; ++s) {
    const GPoint p = G.random_point(rng);
    const AlgVec x = g.random_alg_vec(rng);
    const AlgVec y = g.random_alg_vec(rng);
    const AlgVec z = g.random_alg_vec(rng);
    const J2Vec vx = conj_fundamental_field(g, x, orientation).eval(p);
    const J2Vec vy = conj_fundamental_field(g, y, orientation).eval(p);
    const J2Vec vz = conj_fundamental_field(g, z, orientation).eval(p);
    const double lhs = eta.eval(p, {vx, vy, vz}).v;
    const double t1 = f2_scalar(g, x, g.bracket(y, z)).eval(p, {}).v;
    const double t2 = f2_scalar(g, y, g.bracket(z, x)).eval(p, {}).v;
    const double t3 = f2_scalar(g, z, g.bracket(x, y)).eval(p, {}).v;
    for (int pat = 0; pat < 8; ++pat) {
      const double s1 = (pat & 1) ? 1.0 : -1.0;
      const double s2 = (pat & 2) ? 1.0 : -1.0;
      const double s3 = (pat & 4) ? 1.0 : -1.0;
      const double resid = std::fabs(lhs - (s1 * t1 + s2 * t2 + s3 * t3));
      if (resid > worst[pat]) worst[pat] = resid;
    }
  }
  TripleContractionMatch out;
  for (int pat = 0; pat < 8; ++pat) {
    if (worst[pat] < out.residual) {
      out.residual = worst[pat];
      out.pattern = pat;
    }
  }
  if (out.residual > tol) out.pattern = -1;
  return out;
}

}  // namespace relp
