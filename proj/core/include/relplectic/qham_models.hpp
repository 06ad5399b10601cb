#pragma once

#include <memory>
#include <string>

#include "relplectic/group_forms.hpp"

namespace relp {

/// A group-valued moment-map model: manifold M with G-action, invariant
/// 2-form omega, and the map Phi to G.  Everything is expressed against the
/// model's spanning frame, with Phi plumbing carried as jet-exact maps so
/// pulled-back forms can be differentiated again.
struct QHamSpace {
  const LieAlgebra* g = nullptr;
  std::shared_ptr<GModel> model;
  double orientation = 1.0;
  std::string name;

  GForm omega;
  /// Pushforward of a frame tangent through Phi, in left-invariant
  /// coefficients at Phi(p).
  std::function<J2Vec(const GPoint&, const J2Vec&)> dphi;
  /// Ad at Phi(p).
  std::function<J2Mat(const GPoint&)> phi_ad;
  /// Fundamental field of x in frame coefficients.
  std::function<J2Vec(const GPoint&, const AlgVec&)> fund_impl;
  /// Matrix realizing frame parameters as honest tangent vectors (value
  /// part only); used to quotient out stabilizer directions in kernel
  /// computations.
  std::function<Eigen::MatrixXd(const GPoint&)> frame_realization;

  GVec fundamental(const AlgVec& x) const;
};

QHamSpace conj_class_space(const LieAlgebra* g, const GroupElt& h0, double orientation);
QHamSpace double_space(const LieAlgebra* g, double orientation);

/// Named presets: "conj-su2", "conj-so3", "double-su2", "double-so3".
/// The algebra object must outlive the space.
QHamSpace preset_space(const std::string& name, const LieAlgebra& su2, const LieAlgebra& so3,
                       double orientation);

/// Pull a form on the group back through Phi; the result can be fed to
/// d_model / iota_model on the space's own model.
GForm phi_pullback(const QHamSpace& sp, const GForm& beta_on_group);
GForm phi_pullback_scalar_pair(const QHamSpace& sp, const AlgVec& x);  // Phi^*((tL+tR).x)

GVec infinitesimal_action(const QHamSpace& sp, const AlgVec& x);

struct QHamAxiomsResult {
  double axiom1 = 0;       // d omega + Phi^* eta
  double axiom2 = 0;       // iota_{v_x} omega - (1/2) Phi^*((tL+tR).x)
  double equivariance = 0; // dPhi(v_x) - fundamental field at Phi(p)
  double invariance = 0;   // L_{v_x} omega
  bool kernel_trivial = true;
  double max() const;
};

QHamAxiomsResult axioms_check(const QHamSpace& sp, std::mt19937_64& rng, int samples);

/// Try both generating-field conventions and return the sign for which the
/// moment-map axioms hold (throws if neither works within tol).
double detect_orientation(const std::function<QHamSpace(double)>& make, std::mt19937_64& rng,
                          int samples, double tol);

}  // namespace relp
