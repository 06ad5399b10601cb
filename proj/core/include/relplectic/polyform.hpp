#pragma once

#include "relplectic/poly.hpp"

#include <map>
#include <optional>
#include <vector>

namespace relp {

/// Polynomial vector field on R^m: m coefficient polynomials.
struct PolyVec {
  std::vector<PolyScalar> comps;

  int num_vars() const { return static_cast<int>(comps.size()); }
  static PolyVec zero(int m);
  static PolyVec constant(int m, const std::vector<Rational>& c);
  PolyVec operator+(const PolyVec& o) const;
  PolyVec operator-(const PolyVec& o) const;
  PolyVec operator*(const Rational& c) const;
};

/// Polynomial map F: R^m -> R^p (p component polynomials in m variables).
struct PolyMap {
  std::vector<PolyScalar> comps;  // each in m variables
  int domain_vars() const { return comps.empty() ? 0 : comps[0].num_vars(); }
  int codomain_vars() const { return static_cast<int>(comps.size()); }
};

/// Degree-k differential form on R^m with polynomial coefficients.
/// Components keyed by strictly increasing 1-based index tuples.
class PolyForm {
 public:
  using Index = std::vector<int>;

  PolyForm() : degree_(0), nvars_(0) {}
  PolyForm(int degree, int num_vars) : degree_(degree), nvars_(num_vars) {}

  static PolyForm zero(int degree, int num_vars) { return PolyForm(degree, num_vars); }
  /// Basis monomial form c * dx^{i1} ^ ... ^ dx^{ik} (indices need not be sorted;
  /// the sign of the sorting permutation is absorbed).
  static PolyForm monomial(int num_vars, const Index& idx, const PolyScalar& coeff);
  static PolyForm from_scalar(const PolyScalar& s);  // degree 0

  int degree() const { return degree_; }
  int num_vars() const { return nvars_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<Index, PolyScalar>& comps() const { return comps_; }
  const PolyScalar component(const Index& idx) const;

  void add_component(const Index& sorted_idx, const PolyScalar& c);

  PolyForm operator+(const PolyForm& o) const;
  PolyForm operator-(const PolyForm& o) const;
  PolyForm operator-() const;
  PolyForm operator*(const Rational& c) const;
  bool operator==(const PolyForm& o) const;

  double max_abs_coeff() const;

 private:
  int degree_;
  int nvars_;
  std::map<Index, PolyScalar> comps_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyForm d(const PolyForm& a);
PolyForm iota(const PolyVec& v, const PolyForm& a);
PolyForm lie(const PolyVec& v, const PolyForm& a);  // = iota d + d iota
PolyForm pullback(const PolyMap& F, const PolyForm& b);
PolyScalar pullback_scalar(const PolyMap& F, const PolyScalar& s);

/// Lie bracket of polynomial vector fields [u,v] = u(v) - v(u).
PolyVec vec_bracket(const PolyVec& u, const PolyVec& v);

/// Homotopy operator h for the de Rham complex on R^m (star-shaped about 0):
/// d∘h + h∘d = id on forms of degree >= 1, exactly.
PolyForm poincare_h(const PolyForm& a);

/// True iff v -> iota(v, omega)(x) has trivial kernel at the point x.
bool nondeg_check_point(const PolyForm& omega, const std::vector<Rational>& x);

/// Scalar invariant of a constant-coefficient 3-form on R^6 whose sign
/// classifies the linear type (positive / negative / zero-with-nondegenerate).
/// vol must be a nonzero constant 6-form; the sign of the result does not
/// depend on the choice of vol.
Rational hitchin_lambda(const PolyForm& alpha, const PolyForm& vol);

enum class LinearType3Form { TypePositive, TypeNegative, TypeNull };
LinearType3Form classify_3form(const PolyForm& alpha);

}  // namespace relp
