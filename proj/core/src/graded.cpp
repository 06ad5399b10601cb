#include "relplectic/graded.hpp"

#include <algorithm>
#include <numeric>

namespace relp {

bool Permutation::valid() const {
  std::vector<bool> seen(images.size(), false);
  for (int v : images) {
    if (v < 1 || v > size() || seen[static_cast<size_t>(v - 1)]) return false;
    seen[static_cast<size_t>(v - 1)] = true;
  }
  return true;
}

int perm_sign(const Permutation& sigma) {
  const auto& a = sigma.images;
  int inv = 0;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

int koszul_sign(const Permutation& sigma, const DegreeVector& degrees) {
  if (sigma.images.size() != degrees.size())
    throw std::invalid_argument("koszul_sign: length mismatch");
  // Bubble-sort the inverse word back to identity; each adjacent swap of
  // elements with degrees (a,b) contributes (-1)^{ab}.
  std::vector<int> word = sigma.images;
  std::vector<int> deg(word.size());
  for (size_t pos = 0; pos < word.size(); ++pos)
    deg[pos] = degrees[static_cast<size_t>(word[pos] - 1)];
  int sign = 1;
  for (size_t i = 0; i + 1 < word.size(); ++i) {
    for (size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] > word[j + 1]) {
        if ((deg[j] * deg[j + 1]) % 2 != 0) sign = -sign;
        std::swap(word[j], word[j + 1]);
        std::swap(deg[j], deg[j + 1]);
      }
    }
  }
  return sign;
}

std::vector<Permutation> unshuffles(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("unshuffles: negative arity");
  if (p + q > kMaxUnshuffleArity)
    throw std::runtime_error("unshuffles: arity bound exceeded");
  const int n = p + q;
  std::vector<Permutation> out;
  // Choose the first block as a sorted p-subset; the complement, sorted,
  // forms the second block.  Iterate subsets in lexicographic order.
  std::vector<int> idx(static_cast<size_t>(p));
  std::iota(idx.begin(), idx.end(), 1);
  auto emit = [&]() {
    Permutation s;
    s.images = idx;
    std::vector<bool> used(static_cast<size_t>(n) + 1, false);
    for (int v : idx) used[static_cast<size_t>(v)] = true;
    for (int v = 1; v <= n; ++v)
      if (!used[static_cast<size_t>(v)]) s.images.push_back(v);
    out.push_back(std::move(s));
  };
  if (p == 0) {
    emit();
    return out;
  }
  while (true) {
    emit();
    // next lexicographic p-subset of {1..n}
    int i = p - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - (p - 1 - i)) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < p; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
  std::sort(out.begin(), out.end(), [](const Permutation& a, const Permutation& b) {
    return a.images < b.images;
  });
  return out;
}

int epsilon_total(int k) {
  if (k < 1) throw std::invalid_argument("epsilon_total: k >= 1 required");
  const long long e = static_cast<long long>(k) * (k + 1) / 2;
  const int pow = (e % 2 == 0) ? 1 : -1;
  return -pow;
}

}  // namespace relp
