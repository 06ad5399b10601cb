#pragma once

#include "relplectic/lie2_group.hpp"

namespace relp {

/// Homotopy lift of the infinitesimal action into the observable algebra:
/// f1(x) is the moment 1-cochain, f2 the binary correction term.
struct MomentMap {
  const GRelStructure* st = nullptr;

  GHamElement f1(const AlgVec& x) const;
  GRelForm f2(const AlgVec& x, const AlgVec& y) const;
};

MomentMap moment_map(const GRelStructure& st);

struct MomentResiduals {
  double f1_hamiltonian = 0;  // d f1(x) = -iota_{(u_x,v_x)} (omega, eta)
  double f2_skew = 0;         // f2(x,y) = -f2(y,x)
  double f2_formula = 0;      // f2(x,y) = (0, 1/2 <(Ad_g - Ad_{g^-1}) x, y>)
  double cond1 = 0;           // f1([x,y]) = l1 f2(x,y) + l2(f1 x, f1 y)
  double cond2 = 0;           // cyclic f2 identity = l3(f1 x, f1 y, f1 z)
  double pi_action = 0;       // projection of f1(x) is the action pair (related)
  double max() const;
};

/// Checks the morphism equations on all algebra-basis pairs/triples plus
/// random algebra vectors.
MomentResiduals moment_check(const GRelStructure& st, std::mt19937_64& rng, int samples);

}  // namespace relp
