#include "relplectic/cone_group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace relp {

namespace {

Eigen::VectorXd random_vector(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::VectorXd x(n);
  for (int i = 0; i < n; ++i) x(i) = dist(rng);
  return x;
}

int parity_sign(const std::vector<int>& perm) {
  int inv = 0;
  for (size_t i = 0; i < perm.size(); ++i)
    for (size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

std::vector<J2Vec> random_args(std::mt19937_64& rng, int count, int dim) {
  std::vector<J2Vec> args;
  for (int i = 0; i < count; ++i) args.push_back(J2Vec::constant(random_vector(rng, dim)));
  return args;
}

GVec zero_field(int dim) { return GVec::constant_frame(Eigen::VectorXd::Zero(dim)); }

}  // namespace

GRelStructure grel_structure(const QHamSpace& sp) {
  GRelStructure st;
  st.space = &sp;
  st.target = std::make_shared<GroupManifold>(sp.g);
  st.omega = {sp.omega, cartan_eta(*sp.g)};
  return st;
}

GRelForm grel_zero(int degree) {
  return {GForm::zero(std::max(degree - 1, 0)), GForm::zero(degree)};
}

GRelForm grel_d(const GRelStructure& st, const GRelForm& a) {
  const QHamSpace& sp = *st.space;
  GForm alpha = phi_pullback(sp, a.beta);
  if (a.degree() > 0) alpha = alpha + d_model(*sp.model, a.alpha);
  return {alpha, d_model(*st.target, a.beta) * (-1.0)};
}

GRelForm grel_iota(const GRelVec& x, const GRelForm& a) {
  return {iota_model(x.u, a.alpha), iota_model(x.v, a.beta) * (-1.0)};
}

GRelForm grel_lie(const GRelStructure& st, const GRelVec& x, const GRelForm& a) {
  return {lie_model(*st.space->model, x.u, a.alpha), lie_model(*st.target, x.v, a.beta)};
}

GRelVec grel_bracket(const GRelStructure& st, const GRelVec& x, const GRelVec& y) {
  return {field_bracket(*st.space->model, x.u, y.u), field_bracket(*st.target, x.v, y.v)};
}

GRelVec fundamental_pair(const GRelStructure& st, const AlgVec& x) {
  const QHamSpace& sp = *st.space;
  return {sp.fundamental(x), conj_fundamental_field(*sp.g, x, sp.orientation)};
}

double grel_related_residual(const GRelStructure& st, const GRelVec& x, std::mt19937_64& rng,
                             int samples) {
  const QHamSpace& sp = *st.space;
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    GPoint p = sp.model->random_point(rng);
    const J2Vec up = x.u.eval(p);
    const J2Vec pushed = sp.dphi(p, up);
    GPoint q;
    q.ad = {sp.phi_ad(p)};
    q.slots = p.slots;
    const J2Vec vq = x.v.eval(q);
    worst = std::max(worst, (pushed.v - vq.v).cwiseAbs().maxCoeff());
  }
  return worst;
}

double grel_form_max(const GRelStructure& st, const GRelForm& a, std::mt19937_64& rng,
                     int samples) {
  const QHamSpace& sp = *st.space;
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    GPoint p = sp.model->random_point(rng);
    const auto margs = random_args(rng, a.alpha.degree, sp.model->tdim());
    worst = std::max(worst, std::abs(a.alpha.eval(p, margs).v));
    GPoint q = st.target->random_point(rng);
    const auto gargs = random_args(rng, a.beta.degree, st.target->tdim());
    worst = std::max(worst, std::abs(a.beta.eval(q, gargs).v));
  }
  return worst;
}

GVec random_point_field(const GModel& m, std::mt19937_64& rng) {
  const int t = m.tdim();
  const int n = m.algebra().dim();
  const Eigen::VectorXd base = random_vector(rng, t);
  std::vector<Eigen::VectorXd> twist;
  for (int j = 0; j * n < t; ++j) twist.push_back(random_vector(rng, n));
  GVec f;
  f.eval = [t, n, base, twist](const GPoint& p) {
    J2Vec r = J2Vec::constant(base);
    for (size_t j = 0; j < p.ad.size() && static_cast<int>(j + 1) * n <= t; ++j) {
      const J2Vec y = p.ad[j] * J2Vec::constant(twist[j % twist.size()]);
      for (int i = 0; i < n; ++i) {
        const int k = static_cast<int>(j) * n + i;
        // J2 sum of the constant part and the Ad-twisted part
        J2 c = r.coeff(k);
        J2 yi = y.coeff(i);
        r.set_coeff(k, {c.v + yi.v, c.d1 + yi.d1, c.d2 + yi.d2, c.d12 + yi.d12});
      }
    }
    return r;
  };
  return f;
}

GForm random_gform(const GModel& m, int degree, std::mt19937_64& rng) {
  const int t = m.tdim();
  const int n = m.algebra().dim();
  const Eigen::VectorXd ca = random_vector(rng, n);
  const Eigen::VectorXd cb = random_vector(rng, n);
  const Eigen::MatrixXd id_n = Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd id_t = Eigen::MatrixXd::Identity(t, t);
  auto coeff = [ca, cb, id_n](const GPoint& p) {
    J2 c{1.0, 0, 0, 0};
    const J2 w = j2_inner(id_n, J2Vec::constant(ca), p.ad[0] * J2Vec::constant(cb));
    return J2{c.v + w.v, w.d1, w.d2, w.d12};
  };
  GForm f;
  f.degree = degree;
  if (degree == 0) {
    f.eval = [coeff](const GPoint& p, const std::vector<J2Vec>&) { return coeff(p); };
    return f;
  }
  std::vector<Eigen::VectorXd> covs;
  for (int i = 0; i < degree; ++i) covs.push_back(random_vector(rng, t));
  f.eval = [coeff, covs, id_t, degree](const GPoint& p, const std::vector<J2Vec>& args) {
    std::vector<int> perm(static_cast<size_t>(degree));
    std::iota(perm.begin(), perm.end(), 0);
    J2 total{0, 0, 0, 0};
    do {
      J2 term = coeff(p) * J2{static_cast<double>(parity_sign(perm)), 0, 0, 0};
      for (int i = 0; i < degree; ++i)
        term = term * j2_inner(id_t, J2Vec::constant(covs[static_cast<size_t>(i)]),
                               args[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
      total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
  };
  return f;
}

GRelVec random_grel_vec(const GRelStructure& st, std::mt19937_64& rng) {
  return {random_point_field(*st.space->model, rng), random_point_field(*st.target, rng)};
}

GRelForm random_grel_form(const GRelStructure& st, int degree, std::mt19937_64& rng) {
  if (degree == 0)
    return {GForm::zero(0), random_gform(*st.target, 0, rng)};
  return {random_gform(*st.space->model, degree - 1, rng),
          random_gform(*st.target, degree, rng)};
}

double GCartanResiduals::max() const {
  return std::max({lie_comm, iota_anticomm, d_lie_comm, lie_iota, magic, d_squared});
}

GCartanResiduals grel_cartan_suite(const GRelStructure& st, int degree, std::mt19937_64& rng,
                                   int samples) {
  GCartanResiduals r;
  for (int s = 0; s < samples; ++s) {
    const GRelForm a = random_grel_form(st, degree, rng);
    const GRelVec x = random_grel_vec(st, rng);
    const GRelVec y = random_grel_vec(st, rng);
    const GRelVec xr = fundamental_pair(st, st.space->g->random_alg_vec(rng));

    const GRelForm lie_comm = grel_lie(st, x, grel_lie(st, y, a)) -
                              grel_lie(st, y, grel_lie(st, x, a)) -
                              grel_lie(st, grel_bracket(st, x, y), a);
    r.lie_comm = std::max(r.lie_comm, grel_form_max(st, lie_comm, rng, 1));

    if (degree >= 2) {
      const GRelForm anti = grel_iota(x, grel_iota(y, a)) + grel_iota(y, grel_iota(x, a));
      r.iota_anticomm = std::max(r.iota_anticomm, grel_form_max(st, anti, rng, 1));
    }

    const GRelForm dl = grel_d(st, grel_lie(st, xr, a)) - grel_lie(st, xr, grel_d(st, a));
    r.d_lie_comm = std::max(r.d_lie_comm, grel_form_max(st, dl, rng, 1));

    const GRelForm li = grel_lie(st, x, grel_iota(y, a)) - grel_iota(y, grel_lie(st, x, a)) -
                        grel_iota(grel_bracket(st, x, y), a);
    r.lie_iota = std::max(r.lie_iota, grel_form_max(st, li, rng, 1));

    // At cone degree 0 the contraction term is identically zero.
    GRelForm magic = grel_iota(xr, grel_d(st, a)) - grel_lie(st, xr, a);
    if (degree > 0) magic = magic + grel_d(st, grel_iota(xr, a));
    r.magic = std::max(r.magic, grel_form_max(st, magic, rng, 1));

    r.d_squared = std::max(r.d_squared, grel_form_max(st, grel_d(st, grel_d(st, a)), rng, 1));
  }
  return r;
}

double grel_hamiltonian_residual(const GRelStructure& st, const GHamElement& e,
                                 std::mt19937_64& rng, int samples) {
  const GRelForm resid = grel_d(st, e.form) + grel_iota(e.witness, st.omega);
  return grel_form_max(st, resid, rng, samples);
}

GHamElement moment_element(const GRelStructure& st, const AlgVec& x) {
  GHamElement e;
  e.form = {GForm::zero(0), theta_sum_pair(*st.space->g, x) * (-0.5)};
  e.witness = fundamental_pair(st, x);
  return e;
}

GHamElement exact_element(const GRelStructure& st, std::mt19937_64& rng) {
  const int n = st.space->g->dim();
  const Eigen::VectorXd a = random_vector(rng, n);
  const Eigen::VectorXd b = random_vector(rng, n);
  const Eigen::MatrixXd id_n = Eigen::MatrixXd::Identity(n, n);
  GForm f;
  f.degree = 0;
  f.eval = [a, b, id_n](const GPoint& p, const std::vector<J2Vec>&) {
    return j2_inner(id_n, J2Vec::constant(a), p.ad[0] * J2Vec::constant(b));
  };
  // df spelled out directly (derivative of Ad along a left-invariant
  // direction) so the element costs no jet slots when nested in brackets.
  const LieAlgebra* g = st.space->g;
  GForm df;
  df.degree = 1;
  df.eval = [a, b, id_n, g](const GPoint& p, const std::vector<J2Vec>& args) {
    const J2Vec br = j2_ad(*g, args[0]) * J2Vec::constant(b);
    return j2_inner(id_n, J2Vec::constant(a), p.ad[0] * br);
  };
  GHamElement e;
  e.form = {phi_pullback(*st.space, f), df * (-1.0)};
  e.witness = {zero_field(st.space->model->tdim()), zero_field(n)};
  return e;
}

GRelForm grel_semi(const GRelStructure& st, const GRelVec& x1, const GRelVec& x2) {
  return grel_iota(x2, grel_iota(x1, st.omega));
}

GRelForm grel_hemi(const GRelStructure& st, const GRelVec& x1, const GRelForm& a2) {
  return grel_lie(st, x1, a2);
}

}  // namespace relp
