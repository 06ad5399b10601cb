#pragma once

#include "relplectic/cone_group.hpp"

namespace relp {

/// Two-term algebra of observables of a moment-map model (n = 2):
/// degree 0 = Hamiltonian cone 1-forms with witness pairs, degree 1 = cone
/// 0-forms (functions on the group).  The semi variant has a strictly
/// skew bracket with a Jacobiator; the hemi variant has a strict Jacobi
/// identity with an alternator.
struct Lie2Algebra {
  GRelStructure st;
  bool hemi = false;

  GHamElement differential(const GRelForm& a) const;  // L1 -> L0
  GHamElement bracket00(const GHamElement& a, const GHamElement& b) const;
  GRelForm bracket01(const GHamElement& x, const GRelForm& a) const;  // L0 x L1 -> L1
  GRelForm alternator(const GHamElement& a, const GHamElement& b) const;
  GRelForm jacobiator(const GHamElement& a, const GHamElement& b,
                      const GHamElement& c) const;
};

Lie2Algebra build_lie2_semi(const GRelStructure& st);
Lie2Algebra build_lie2_hemi(const GRelStructure& st);

struct Lie2AxiomResiduals {
  double bracket_chain = 0;   // d[x,a] = [x, da]
  double alternator_l0 = 0;   // [x,y] + [y,x] + dS(x,y) = 0
  double alternator_l1 = 0;   // [x,a] + [a,x] + S(x, da) = 0
  double jacobiator_l0 = 0;   // [x,[y,z]] - [[x,y],z] - [y,[x,z]] = dJ(x,y,z)
  double jacobiator_l1 = 0;   // [x,[y,a]] - [[x,y],a] - [y,[x,a]] = J(x,y,da)
  double alt_bracket = 0;     // J(x,y,z) + J(y,x,z) = -[S(x,y),z]
  double alt_jacobiator = 0;  // J(x,y,z)+J(x,z,y) = [x,S(y,z)] - S([x,y],z) - S(y,[x,z])
  double big_j = 0;           // Jacobiator compatibility on quadruples
  double max() const;
};

Lie2AxiomResiduals lie2_axiom_suite(const Lie2Algebra& L, std::mt19937_64& rng, int samples);

/// Random witnessed degree-0 element: linear combination of a moment
/// element and a cone-exact element.
GHamElement random_l0_element(const GRelStructure& st, std::mt19937_64& rng);

/// dg-Leibniz structure on the same complex (group backend): delta is the
/// cone differential on degree 1; the bracket acts by the Lie derivative
/// along the left argument's witness in degree 0, zero otherwise.
struct GLeibnizResiduals {
  double delta_squared = 0;
  double derivation = 0;
  double left_leibniz = 0;
  double max() const;
};
GLeibnizResiduals leibniz_group_check(const GRelStructure& st, std::mt19937_64& rng,
                                      int samples);

/// Vector-field Lie 2-algebra: L0 = related pairs, L1 = cone 0-forms,
/// zero differential, componentwise field bracket, contraction Jacobiator.
struct AtiyahResiduals {
  double jacobi_l0 = 0;     // strict Jacobi of the field bracket
  double jacobi_l1 = 0;     // [x,[y,a]] - [[x,y],a] - [y,[x,a]] = 0
  double mixed_zero = 0;    // [a,x] = 0 and chain-map property
  double big_j = 0;
  double max() const;
};
AtiyahResiduals atiyah_check(const GRelStructure& st, std::mt19937_64& rng, int samples);

/// Courant-style algebra on pairs (related fields) + cone 1-forms.
struct CourantElt {
  GRelVec x;
  GRelForm theta;  // degree 1
};

struct CourantAlgebra {
  GRelStructure st;
  double twist_sign = -1.0;  // sign of the omega-contraction term

  CourantElt phi_of(const GHamElement& a) const;  // embed Hamiltonian element
  CourantElt differential(const GRelForm& f) const;
  GRelForm binary_form(const CourantElt& a, const CourantElt& b) const;
  CourantElt binary00(const CourantElt& a, const CourantElt& b) const;
  GRelForm binary01(const CourantElt& a, const GRelForm& f) const;  // deg 0 with deg 1
  GRelForm pairing(const CourantElt& a, const CourantElt& b) const;
  GRelForm ternary(const CourantElt& a, const CourantElt& b, const CourantElt& c) const;
};

CourantAlgebra build_courant(const GRelStructure& st, double twist_sign);

struct CourantResiduals {
  double cond1 = 0;        // d[x,f] = [x, df]
  double cond2 = 0;        // d[f,g] = [f, dg]
  double cond3 = 0;        // cyclic [[x,y],z] = -d ternary
  double cond4 = 0;        // [[x,y],f] + [[y,f],x] + [[f,x],y] = -ternary(x,y,df)
  double cond5 = 0;        // ternary compatibility (form-free elements)
  double pairing_sym = 0;  // pairing symmetric
  double max() const;
};
CourantResiduals courant_check(const CourantAlgebra& C, std::mt19937_64& rng, int samples);

/// Resolve the omega-contraction sign by the embedding-morphism equation.
double courant_detect_twist(const GRelStructure& st, std::mt19937_64& rng, int samples);

/// Morphism equations of the sequence: Hamiltonian algebra -> Courant
/// -> vector-field algebra.
struct MorphismResiduals {
  double phi_bracket = 0;    // deg-0 bracket homotopy for the embedding
  double phi_mixed = 0;      // mixed-degree homotopy
  double phi_coherence = 0;  // Jacobiator coherence for the embedding
  double psi_mixed = 0;      // mixed-degree homotopy for the projection
  double psi_coherence = 0;  // Jacobiator coherence for the projection
  double identity_strict = 0;  // identity morphism sanity: all defects vanish
  double max() const;
};
MorphismResiduals morphism_check(const Lie2Algebra& semi, const CourantAlgebra& C,
                                 std::mt19937_64& rng, int samples);

}  // namespace relp
