#pragma once

#include <optional>
#include <string>

#include "relplectic/fixtures_poly.hpp"
#include "relplectic/polyform.hpp"

namespace relp {

/// Degree-k element of the mapping-cone complex of F: a (k-1)-form on the
/// source paired with a k-form on the target.
struct RelForm {
  PolyForm alpha;  // on M, degree k-1
  PolyForm beta;   // on N, degree k

  int degree() const { return beta.degree(); }
  RelForm operator+(const RelForm& o) const { return {alpha + o.alpha, beta + o.beta}; }
  RelForm operator-(const RelForm& o) const { return {alpha - o.alpha, beta - o.beta}; }
  RelForm operator-() const { return {-alpha, -beta}; }
  RelForm operator*(const Rational& c) const { return {alpha * c, beta * c}; }
  bool operator==(const RelForm& o) const { return alpha == o.alpha && beta == o.beta; }
  bool is_zero() const { return alpha.is_zero() && beta.is_zero(); }
  double max_abs_coeff() const;
};

/// Pair of vector fields on source and target.
struct RelVec {
  PolyVec u, v;
  RelVec operator+(const RelVec& o) const { return {u + o.u, v + o.v}; }
  RelVec operator-(const RelVec& o) const { return {u - o.u, v - o.v}; }
  RelVec operator*(const Rational& c) const { return {u * c, v * c}; }
};

RelForm rel_zero(int degree, int m_vars, int n_vars);
RelForm rel_d(const PolyMap& F, const RelForm& a);
RelForm rel_iota(const RelVec& x, const RelForm& a);
RelForm rel_lie(const RelVec& x, const RelForm& a);
RelVec rel_vec_bracket(const RelVec& x, const RelVec& y);

/// Residual of dF . u = v . F (zero iff u is F-related to v).
double f_related_residual(const PolyMap& F, const RelVec& x);

/// A closed relative (n+1)-form together with the map.
struct RelPlecticStructure {
  PolyMap F;
  RelForm omega;  // (omega_M deg n, omega_N deg n+1)
  std::string name;

  int n() const { return omega.degree() - 1; }
  int m_vars() const { return F.domain_vars(); }
  int n_vars() const { return F.codomain_vars(); }
};

/// Residuals of the five relative Cartan identities on the given data
/// (items needing F-relatedness are checked with F-related pairs by the
/// caller; the suite just reports the residuals).
struct CartanResiduals {
  double lie_comm = 0;       // [L_x, L_y] = L_[x,y]
  double iota_anticomm = 0;  // iota_x iota_y + iota_y iota_x = 0
  double d_lie_comm = 0;     // d L_x = L_x d          (x F-related)
  double lie_iota = 0;       // [L_x, iota_y] = iota_[x,y]
  double magic = 0;          // iota_x d + d iota_x = L_x  (x F-related)
  double d_squared = 0;      // d d = 0
  double max() const;
};

CartanResiduals cartan_suite(const PolyMap& F, const RelVec& x_related, const RelVec& y,
                             const RelForm& a);

/// Pointwise nondegeneracy of the relative form: no nonzero u with
/// iota_u omega_M = 0 and iota_{dF u} omega_N = 0 at the point.
bool nondeg_check(const RelPlecticStructure& s, const std::vector<Rational>& point);

/// Solve d(alpha,beta) = -iota_{(u,v)} (omega_M, omega_N) for (u,v).
/// Requires constant omega_M, omega_N and constant dF (the solve is then a
/// monomial-by-monomial exact linear system).  v is taken from the target
/// equation; u from the source equation stacked with F-relatedness.
/// Returns nullopt if the system is inconsistent.
struct HamiltonianSolution {
  RelVec witness;
  bool unique = true;
};
std::optional<HamiltonianSolution> hamiltonian_solve(const RelPlecticStructure& s,
                                                     const RelForm& a);

/// Brackets on Hamiltonian (n-1)-forms, given witnesses.
RelForm semi_bracket(const RelPlecticStructure& s, const RelVec& x1, const RelVec& x2);
RelForm hemi_bracket(const RelPlecticStructure& s, const RelVec& x1, const RelForm& a2);

/// Check r == rel_d(F, c) for some candidate primitive c (used for
/// Jacobi-up-to-exact and skew-up-to-exact statements).
double exactness_residual(const PolyMap& F, const RelForm& r, const RelForm& primitive);

/// Residual of d iota_m ... iota_1 omega =
/// (-1)^m sum_{i<j} (-1)^{i+j} iota_m ... ^i ... ^j ... iota_1 iota_[i,j] omega.
double iterated_contraction_d_check(const RelPlecticStructure& s,
                                    const std::vector<RelVec>& xs);

/// Jacobiator of the semi-bracket equals rel_d of
/// J = -iota_{x1} iota_{x2} iota_{x3} omega (up to the recorded sign).
double jacobi_up_to_exact_check(const RelPlecticStructure& s, const RelVec& x1,
                                const RelVec& x2, const RelVec& x3);

/// A Hamiltonian element together with its witness pair.
struct HamElement {
  RelForm form;
  RelVec witness;
};

/// Hamiltonianity residual of a candidate element.
double hamiltonian_residual(const RelPlecticStructure& s, const HamElement& e);

/// Construct a random Hamiltonian element with an exact witness:
/// a constant F-related pair contracted into omega and integrated with the
/// homotopy operator, plus relative-exact noise.
HamElement random_ham_element(const RelPlecticStructure& s, std::mt19937_64& rng);

/// Built-in relative structures ("poly-n3", "poly-n3-degenerate",
/// "poly-r4-r3").
RelPlecticStructure poly_fixture(const std::string& name);

/// Random F-related pair for the fixture (u determined from v and the
/// explicit shape of F).
RelVec random_related_pair(const RelPlecticStructure& s, std::mt19937_64& rng);

/// JSON round-trip of a relative structure fixture:
/// { "name": ..., "map": [poly...], "alpha": form, "beta": form }.
std::string rel_structure_to_json(const RelPlecticStructure& s);
RelPlecticStructure rel_structure_from_json(const std::string& text);

}  // namespace relp
