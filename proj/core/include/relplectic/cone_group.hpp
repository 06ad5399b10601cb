#pragma once

#include <memory>
#include <random>

#include "relplectic/qham_models.hpp"

namespace relp {

/// Mapping-cone form over a moment-map model: a (k-1)-form on the space
/// paired with a k-form on the group.  Cone degree 0 carries only the
/// group function (the space part is the zero 0-form placeholder).
struct GRelForm {
  GForm alpha;  // on the space model
  GForm beta;   // on the group

  int degree() const { return beta.degree; }
  GRelForm operator+(const GRelForm& o) const { return {alpha + o.alpha, beta + o.beta}; }
  GRelForm operator-(const GRelForm& o) const { return {alpha - o.alpha, beta - o.beta}; }
  GRelForm operator*(double c) const { return {alpha * c, beta * c}; }
};

/// Pair of fields: u on the space, v on the group (left-trivialized).
struct GRelVec {
  GVec u, v;
  GRelVec operator+(const GRelVec& o) const { return {u + o.u, v + o.v}; }
  GRelVec operator*(double c) const { return {u * c, v * c}; }
};

/// The relative 3-form (omega, eta) of a moment-map model, together with
/// the two manifolds its cone complex lives on.
struct GRelStructure {
  const QHamSpace* space = nullptr;
  std::shared_ptr<GModel> target;  // the group itself
  GRelForm omega;                  // (space omega, Cartan 3-form)
};

GRelStructure grel_structure(const QHamSpace& sp);

GRelForm grel_zero(int degree);
GRelForm grel_d(const GRelStructure& st, const GRelForm& a);
GRelForm grel_iota(const GRelVec& x, const GRelForm& a);
GRelForm grel_lie(const GRelStructure& st, const GRelVec& x, const GRelForm& a);
GRelVec grel_bracket(const GRelStructure& st, const GRelVec& x, const GRelVec& y);

/// Fundamental pair (u_x, v_x): the action field on the space and the
/// conjugation field on the group; map-related by equivariance.
GRelVec fundamental_pair(const GRelStructure& st, const AlgVec& x);

/// Max |dPhi(u) - v(Phi(p))| over samples (zero iff the pair is related).
double grel_related_residual(const GRelStructure& st, const GRelVec& x, std::mt19937_64& rng,
                             int samples);

/// Max absolute value of both components over random points and frame args.
double grel_form_max(const GRelStructure& st, const GRelForm& a, std::mt19937_64& rng,
                     int samples);

/// Random sampling helpers (point-dependent coefficients, jet-exact).
GVec random_point_field(const GModel& m, std::mt19937_64& rng);
GForm random_gform(const GModel& m, int degree, std::mt19937_64& rng);
GRelVec random_grel_vec(const GRelStructure& st, std::mt19937_64& rng);
GRelForm random_grel_form(const GRelStructure& st, int degree, std::mt19937_64& rng);

struct GCartanResiduals {
  double lie_comm = 0;       // [L_x, L_y] = L_[x,y]
  double iota_anticomm = 0;  // iota_x iota_y + iota_y iota_x = 0
  double d_lie_comm = 0;     // d L_x = L_x d           (x related)
  double lie_iota = 0;       // [L_x, iota_y] = iota_[x,y]
  double magic = 0;          // iota_x d + d iota_x = L_x  (x related)
  double d_squared = 0;      // d d = 0
  double max() const;
};

/// One pass of the cone Cartan identities on random data of the given cone
/// degree; identities needing relatedness use a fundamental pair.
GCartanResiduals grel_cartan_suite(const GRelStructure& st, int degree, std::mt19937_64& rng,
                                   int samples);

/// Hamiltonian element with witness pair: d(form) = -iota_{witness} omega.
struct GHamElement {
  GRelForm form;
  GRelVec witness;
};

double grel_hamiltonian_residual(const GRelStructure& st, const GHamElement& e,
                                 std::mt19937_64& rng, int samples);

/// The moment 1-cochain of x: (0, -1/2 (theta_L+theta_R).x) with the
/// fundamental pair as witness.
GHamElement moment_element(const GRelStructure& st, const AlgVec& x);

/// Cone-exact element d(0, f) for a random matrix-coefficient function f
/// on the group; witnessed by the zero pair.
GHamElement exact_element(const GRelStructure& st, std::mt19937_64& rng);

/// Brackets on Hamiltonian 1-cochains.
GRelForm grel_semi(const GRelStructure& st, const GRelVec& x1, const GRelVec& x2);
GRelForm grel_hemi(const GRelStructure& st, const GRelVec& x1, const GRelForm& a2);

}  // namespace relp
