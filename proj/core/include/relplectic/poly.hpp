#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>
#include <type_traits>
#include <vector>

namespace relp {

using Rational = boost::multiprecision::cpp_rational;

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms map an exponent multi-index (length = num_vars) to a coefficient;
/// zero coefficients are never stored.
class PolyScalar {
 public:
  using Expo = std::vector<int>;

  PolyScalar() : nvars_(0) {}
  explicit PolyScalar(int num_vars) : nvars_(num_vars) {}
  static PolyScalar constant(int num_vars, const Rational& c);
  static PolyScalar variable(int num_vars, int i);  // 1-based x_i

  int num_vars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expo, Rational>& terms() const { return terms_; }

  void add_term(const Expo& e, const Rational& c);

  PolyScalar operator+(const PolyScalar& o) const;
  PolyScalar operator-(const PolyScalar& o) const;
  PolyScalar operator-() const;
  PolyScalar operator*(const PolyScalar& o) const;
  PolyScalar operator*(const Rational& c) const;
  bool operator==(const PolyScalar& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
  }

  /// Partial derivative with respect to x_i (1-based).
  PolyScalar deriv(int i) const;

  /// Evaluate at a rational point (length num_vars).
  Rational eval(const std::vector<Rational>& x) const;

  /// Substitute x_i := subs[i-1]; all subs share a variable count.
  PolyScalar compose(const std::vector<PolyScalar>& subs) const;

  /// Multiply every term by t^{total degree of that term}: used by the
  /// homotopy operator; returns p scaled term-wise with the given function.
  /// (kept internal; see polyform.cpp)

  /// Maximum absolute coefficient, as double (for residual reporting).
  double max_abs_coeff() const;

 private:
  int nvars_;
  std::map<Expo, Rational> terms_;
};

// Constrained so overload resolution never probes conversions from unrelated
// types into the multiprecision constructor set.
template <class T, std::enable_if_t<std::is_same_v<T, Rational>, int> = 0>
PolyScalar operator*(const T& c, const PolyScalar& p) {
  return p * c;
}

}  // namespace relp
