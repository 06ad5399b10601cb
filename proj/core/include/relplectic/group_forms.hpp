#pragma once

#include "relplectic/jet.hpp"
#include "relplectic/lie.hpp"

#include <functional>
#include <memory>
#include <random>
#include <vector>

namespace relp {

/// A point on a group-built manifold: the adjoint matrices of its group
/// components, carried as second-order jets so that nested directional
/// derivatives are exact.  `slots` counts active derivative directions.
struct GPoint {
  std::vector<J2Mat> ad;
  int slots = 0;
};

/// ad of a J2-coefficient algebra vector.
J2Mat j2_ad(const LieAlgebra& g, const J2Vec& xi);

/// Extract the innermost derivative of a jet evaluated at a point with
/// `outer_slots` previously active directions.
J2 extract_inner(const J2& x, int outer_slots);
J2Vec extract_inner(const J2Vec& x, int outer_slots);

/// Frame-parametrized manifold built from matrix-group data.  Tangent
/// vectors are coefficient vectors against a global spanning family of
/// fields (left-invariant fields, or fundamental fields of an action).
class GModel {
 public:
  explicit GModel(const LieAlgebra* g) : g_(g) {}
  virtual ~GModel() = default;

  const LieAlgebra& algebra() const { return *g_; }
  virtual int tdim() const = 0;
  virtual GPoint random_point(std::mt19937_64& rng) const = 0;
  /// Append a derivative slot along the frame field with coefficients xi.
  virtual GPoint flow(const GPoint& p, const J2Vec& xi) const = 0;
  /// Bracket of two constant-coefficient frame fields.
  virtual J2Vec frame_bracket(const J2Vec& a, const J2Vec& b) const = 0;

 protected:
  const LieAlgebra* g_;
};

/// The group G itself; frame = left-invariant fields, so tangent
/// coefficients are theta_L values.
class GroupManifold final : public GModel {
 public:
  explicit GroupManifold(const LieAlgebra* g) : GModel(g) {}
  int tdim() const override { return g_->dim(); }
  GPoint random_point(std::mt19937_64& rng) const override;
  GPoint flow(const GPoint& p, const J2Vec& xi) const override;
  J2Vec frame_bracket(const J2Vec& a, const J2Vec& b) const override;
};

/// Conjugacy class of h0 under G; tangents are parametrized by the algebra
/// through the fundamental fields of the conjugation action, with a global
/// orientation sign for the generating-field convention.
class ConjClassModel final : public GModel {
 public:
  ConjClassModel(const LieAlgebra* g, const GroupElt& h0, double orientation)
      : GModel(g), h0_(h0), orient_(orientation) {}
  int tdim() const override { return g_->dim(); }
  GPoint random_point(std::mt19937_64& rng) const override;
  GPoint flow(const GPoint& p, const J2Vec& xi) const override;
  J2Vec frame_bracket(const J2Vec& a, const J2Vec& b) const override;
  double orientation() const { return orient_; }

 private:
  GroupElt h0_;
  double orient_;
};

/// G x G with the left-invariant frame on each factor.
class DoubleModel final : public GModel {
 public:
  DoubleModel(const LieAlgebra* g, double orientation) : GModel(g), orient_(orientation) {}
  int tdim() const override { return 2 * g_->dim(); }
  GPoint random_point(std::mt19937_64& rng) const override;
  GPoint flow(const GPoint& p, const J2Vec& xi) const override;
  J2Vec frame_bracket(const J2Vec& a, const J2Vec& b) const override;
  double orientation() const { return orient_; }

 private:
  double orient_;
};

/// Real-valued differential form on a GModel, evaluated on frame
/// coefficients carried as jets.
struct GForm {
  int degree = 0;
  std::function<J2(const GPoint&, const std::vector<J2Vec>&)> eval;

  static GForm zero(int degree);
  GForm operator+(const GForm& o) const;
  GForm operator-(const GForm& o) const;
  GForm operator*(double c) const;
};

/// Algebra-valued form (used for the Maurer-Cartan forms).
struct GVForm {
  int degree = 0;
  std::function<J2Vec(const GPoint&, const std::vector<J2Vec>&)> eval;
};

/// Vector field in frame coefficients.
struct GVec {
  std::function<J2Vec(const GPoint&)> eval;

  static GVec constant_frame(const Eigen::VectorXd& x);
  GVec operator+(const GVec& o) const;
  GVec operator*(double c) const;
};

/// Exterior derivative via the invariant-frame global formula; exact
/// through the jet arithmetic.
GForm d_model(const GModel& m, const GForm& beta);
GForm iota_model(const GVec& v, const GForm& beta);
GForm lie_model(const GModel& m, const GVec& v, const GForm& beta);  // iota d + d iota
GVec field_bracket(const GModel& m, const GVec& x, const GVec& y);

/// --- Forms on the group itself (left trivialization) ---

/// theta_L as an algebra-valued 1-form: theta_L(xi) = xi.
GVForm theta_L(const LieAlgebra& g);
/// theta_R(xi) = Ad_g xi.
GVForm theta_R(const LieAlgebra& g);
/// The scalar 1-form <(theta_L + theta_R), x> built from the inner product.
GForm theta_sum_pair(const LieAlgebra& g, const AlgVec& x);
/// Bi-invariant 3-form: eta(xi1,xi2,xi3) = 1/2 <xi1,[xi2,xi3]>.
GForm cartan_eta(const LieAlgebra& g);
/// The same 3-form from its 1/12 <theta_L, [theta_L, theta_L]> expansion
/// (independent oracle; antisymmetrized over all argument permutations).
GForm cartan_eta_expansion(const LieAlgebra& g);

/// Conjugation fundamental field on G: orientation * (1 - Ad_{g^{-1}}) x.
GVec conj_fundamental_field(const LieAlgebra& g, const AlgVec& x, double orientation);

/// Scalar function g -> 1/2 <(Ad_g - Ad_{g^{-1}}) x, y>.
GForm f2_scalar(const LieAlgebra& g, const AlgVec& x, const AlgVec& y);

/// Residual report helpers for the group-form identity suite.
struct MaxResidual {
  double value = 0.0;
  void update(double r) { if (r > value) value = r; }
};

/// dtheta_L + 1/2 [theta_L, theta_L] and dtheta_R - 1/2 [theta_R, theta_R].
double maurer_cartan_residual_L(const LieAlgebra& g, std::mt19937_64& rng, int samples);
double maurer_cartan_residual_R(const LieAlgebra& g, std::mt19937_64& rng, int samples);
/// d eta = 0.
double eta_closed_residual(const LieAlgebra& g, std::mt19937_64& rng, int samples);
/// iota_{v_x} eta + d(1/2 (theta_L + theta_R) . x) = 0.
double eta_contraction_residual(const LieAlgebra& g, const AlgVec& x, double orientation,
                                std::mt19937_64& rng, int samples);
/// iota_X eta = -1/2 <theta_L(X), dtheta_L(.,.)> cross-check for arbitrary X.
double eta_contraction_formula_residual(const LieAlgebra& g, std::mt19937_64& rng,
                                        int samples);
/// (d - iota_{v_x})(eta - 1/2 (theta_L + theta_R) . x) = 0.
double equivariant_extension_residual(const LieAlgebra& g, const AlgVec& x,
                                      double orientation, std::mt19937_64& rng, int samples);
/// (theta_L + theta_R)(v_x) = (Ad_g - Ad_{g^{-1}}) x.
double theta_sum_fundamental_residual(const LieAlgebra& g, const AlgVec& x,
                                      double orientation, std::mt19937_64& rng, int samples);
/// L_{v_z} f2(y,x) = orientation * (f2([z,y],x) + f2(y,[z,x])).
double f2_lie_derivative_residual(const LieAlgebra& g, const AlgVec& z, const AlgVec& y,
                                  const AlgVec& x, double orientation, std::mt19937_64& rng,
                                  int samples);
/// 1/2 (theta_L+theta_R).[x,y] + iota_{v_x} iota_{v_y} eta
///   - 1/2 d iota_{v_x} (theta_L+theta_R).y = 0.
double key_identity_residual(const LieAlgebra& g, const AlgVec& x, const AlgVec& y,
                             double orientation, std::mt19937_64& rng, int samples);

/// Evaluates eta(v_x, v_y, v_z) against the eight sign patterns
/// s1 f2(x,[y,z]) + s2 f2(y,[z,x]) + s3 f2(z,[x,y]); returns the matching
/// pattern (bitmask over {s1,s2,s3}, bit set = +) and its residual.
struct TripleContractionMatch {
  int pattern = -1;       // -1 if nothing matched
  double residual = 1e9;  // residual of the best pattern
};
TripleContractionMatch triple_contraction_match(const LieAlgebra& g, double orientation,
                                                std::mt19937_64& rng, int samples,
                                                double tol);

}  // namespace relp
