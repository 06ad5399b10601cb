#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace relp {

/// A permutation of {1..n}, stored as the image tuple (1-based).
struct Permutation {
  std::vector<int> images;

  int size() const { return static_cast<int>(images.size()); }
  int operator()(int i) const { return images[static_cast<size_t>(i - 1)]; }
  bool valid() const;
};

/// Homogeneous degrees of a tensor word x_1 ⊗ ... ⊗ x_n.
using DegreeVector = std::vector<int>;

/// Parity of a permutation: +1 or -1.
int perm_sign(const Permutation& sigma);

/// Koszul sign of sigma acting on a word with the given degrees:
/// each adjacent swap of y,z contributes (-1)^{deg(y)·deg(z)}.
int koszul_sign(const Permutation& sigma, const DegreeVector& degrees);

/// All (p,q)-unshuffles of {1..p+q}: increasing on the first p and the
/// last q positions.  Ordered lexicographically by image tuple.
std::vector<Permutation> unshuffles(int p, int q);

/// Total Koszul sign used by the multibracket construction:
/// epsilon_total(k) = -(-1)^{k(k+1)/2}.
int epsilon_total(int k);

/// Arity bound for unshuffle enumeration (factorial blowup guard).
inline constexpr int kMaxUnshuffleArity = 10;

}  // namespace relp
