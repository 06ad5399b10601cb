#pragma once

#include <Eigen/Dense>

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace relp {

using AlgVec = Eigen::VectorXd;
using GroupElt = Eigen::MatrixXcd;

/// Finite-dimensional Lie algebra by structure constants, with an invariant
/// inner product and an optional matrix basis for group-level operations.
class LieAlgebra {
 public:
  LieAlgebra(int dim, std::vector<Eigen::MatrixXd> c_by_first,
             Eigen::MatrixXd inner_product,
             std::vector<Eigen::MatrixXcd> matrix_basis, std::string name);

  /// c_by_first[i](j,k) = c^k_{ij}, i.e. [e_i, e_j] = sum_k c^k_{ij} e_k.
  static LieAlgebra su2();
  static LieAlgebra so3();
  static LieAlgebra from_json(const std::string& text);

  int dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const Eigen::MatrixXd& inner_product() const { return ip_; }
  const std::vector<Eigen::MatrixXcd>& matrix_basis() const { return basis_; }
  bool has_matrix_basis() const { return !basis_.empty(); }

  AlgVec bracket(const AlgVec& x, const AlgVec& y) const;
  Eigen::MatrixXd ad(const AlgVec& x) const;
  double inner(const AlgVec& x, const AlgVec& y) const;

  /// Matrix of the algebra element in the matrix basis.
  Eigen::MatrixXcd to_matrix(const AlgVec& x) const;
  /// Expand an algebra-valued matrix in the basis (least squares through the
  /// real trace pairing); throws if the matrix does not lie in the span.
  AlgVec from_matrix(const Eigen::MatrixXcd& X) const;

  GroupElt exp(const AlgVec& x) const;
  /// Ad(g) as a dim x dim real matrix: v -> g v g^{-1} in basis coordinates.
  Eigen::MatrixXd Ad(const GroupElt& g) const;

  /// theta_L(v_x(g)) for the conjugation fundamental field x^L - x^R:
  /// (1 - Ad_{g^{-1}}) x.
  AlgVec conj_fundamental(const AlgVec& x, const GroupElt& g) const;

  /// Structure-constant sanity residuals (antisymmetry, Jacobi,
  /// ad-invariance of the inner product, compatibility with matrix basis).
  double antisymmetry_residual() const;
  double jacobi_residual() const;
  double ad_invariance_residual() const;
  double matrix_compat_residual() const;

  /// Residual of g against the group's defining relations (unitarity and
  /// unit determinant for SU presets; orthogonality for SO presets).
  double group_membership_residual(const GroupElt& g) const;

  /// Quasi-random group element: exp(r * random unit algebra vector), r in [0,2].
  GroupElt random_group_elt(std::mt19937_64& rng) const;
  AlgVec random_alg_vec(std::mt19937_64& rng) const;

 private:
  int dim_;
  std::vector<Eigen::MatrixXd> c_;  // c_[i](j,k) = c^k_{ij}
  Eigen::MatrixXd ip_;
  std::vector<Eigen::MatrixXcd> basis_;
  std::string name_;
  Eigen::MatrixXd gram_;      // trace-pairing Gram matrix of the basis
  Eigen::MatrixXd gram_inv_;
};

/// Matrix exponential by scaling-and-squaring with a Taylor kernel;
/// accurate to ~1e-15 relative at desk-scale sizes.
Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& A);

}  // namespace relp
