#pragma once

#include <optional>
#include <vector>

#include "relplectic/cone_poly.hpp"
#include "relplectic/graded.hpp"

namespace relp {

/// Homogeneous element of the n-term complex attached to a relative
/// n-plectic structure: degree i carries a relative (n-1-i)-form, and
/// degree-0 elements may carry a Hamiltonian witness pair.
struct GradedElement {
  int degree = 0;
  RelForm payload;
  std::optional<RelVec> witness;
};

GradedElement graded_zero(const RelPlecticStructure& s, int degree);

enum class LInfVariant {
  L_inf,      // degree 0 = Hamiltonian forms, unique witnesses resolved on demand
  Ham_inf,    // elements carry their witness pair as part of the data
  pre_L_inf,  // any valid witness accepted; outputs witness-independent
};

/// Multibracket evaluator for the Lie n-algebra of a closed relative
/// (n+1)-form.  l_1 is the cone differential on positive degrees; on
/// degree-0 tuples l_k is a signed k-fold contraction of omega; mixed
/// tuples of positive total degree map to zero.
struct LInfAlgebra {
  const RelPlecticStructure* s = nullptr;
  LInfVariant variant = LInfVariant::L_inf;

  int n() const { return s->n(); }

  /// l_k with k = xs.size().  Throws std::invalid_argument if a degree-0
  /// input has no witness and none can be solved for (L_inf variant), or
  /// if a supplied witness fails the Hamiltonian check.
  GradedElement bracket(const std::vector<GradedElement>& xs) const;
};

LInfAlgebra build_Linf(const RelPlecticStructure& s);
LInfAlgebra build_Ham_inf(const RelPlecticStructure& s);
LInfAlgebra build_pre_Linf(const RelPlecticStructure& s);

/// Max residual of the generalized Jacobi identity of arity m = xs.size():
///   sum_{i+j=m+1, sigma in Sh(i,m-i)}
///     sgn(sigma) eps(sigma) (-1)^{i(j-1)} l_j(l_i(x_sigma...), ...) = 0.
double gen_jacobi_residual(const LInfAlgebra& A, const std::vector<GradedElement>& xs);

/// Residual of graded skew-symmetry of l_k under a random permutation.
double skew_symmetry_residual(const LInfAlgebra& A, const std::vector<GradedElement>& xs,
                              std::mt19937_64& rng);

/// Replace the witness of each degree-0 input by witness + (k, 0) with k in
/// ker omega_M cap ker dF and report the max change across l_2..l_{n+1}.
double witness_independence_residual(const LInfAlgebra& A,
                                     const std::vector<GradedElement>& xs,
                                     const PolyVec& kernel_dir);

/// Differential graded Leibniz structure on the same complex:
/// delta = cone differential on positive degree (zero on degree 0);
/// bracket(x, y) = Lie derivative of y along the witness of x when x has
/// degree 0, and zero when x has positive degree.
GradedElement leibniz_delta(const RelPlecticStructure& s, const GradedElement& x);
GradedElement leibniz_bracket(const RelPlecticStructure& s, const GradedElement& x,
                              const GradedElement& y);

struct LeibnizResiduals {
  double delta_squared = 0;  // delta^2 = 0
  double derivation = 0;     // delta[x,y] = [delta x, y] + (-1)^|x| [x, delta y]
  double left_leibniz = 0;   // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
  double max() const;
};

LeibnizResiduals leibniz_check(const RelPlecticStructure& s, const GradedElement& x,
                               const GradedElement& y, const GradedElement& z);

/// Strict intertwining of the canonical comparison maps between the
/// Hamiltonian-forms algebra and the witness-carrying one: phi adjoins the
/// unique witness, pi projects onto it.
struct QuasiIsoResiduals {
  double phi_solves = 0;        // solved witness satisfies the Hamiltonian equation
  double chain_map = 0;         // l_1 phi = phi l_1
  double bracket_intertwine = 0;  // witness of l_2(a,b) = pair bracket of witnesses
  double higher_intertwine = 0;   // payloads of l_k agree for k = 3..n+1
  double h0_recovery = 0;       // solve recovers the generating witness pair
  double max() const;
};

QuasiIsoResiduals quasi_iso_check(const RelPlecticStructure& s, std::mt19937_64& rng);

/// Random graded element at the given degree (witnessed when degree 0).
GradedElement random_graded_element(const RelPlecticStructure& s, int degree,
                                    std::mt19937_64& rng);

}  // namespace relp
