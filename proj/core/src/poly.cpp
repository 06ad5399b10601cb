#include "relplectic/poly.hpp"

#include <cmath>

namespace relp {

PolyScalar PolyScalar::constant(int num_vars, const Rational& c) {
  PolyScalar p(num_vars);
  p.add_term(Expo(static_cast<size_t>(num_vars), 0), c);
  return p;
}

PolyScalar PolyScalar::variable(int num_vars, int i) {
  if (i < 1 || i > num_vars) throw std::invalid_argument("PolyScalar::variable index");
  PolyScalar p(num_vars);
  Expo e(static_cast<size_t>(num_vars), 0);
  e[static_cast<size_t>(i - 1)] = 1;
  p.add_term(e, 1);
  return p;
}

void PolyScalar::add_term(const Expo& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("PolyScalar::add_term exponent length");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyScalar PolyScalar::operator+(const PolyScalar& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("PolyScalar: nvars mismatch");
  PolyScalar r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

PolyScalar PolyScalar::operator-(const PolyScalar& o) const { return *this + (-o); }

PolyScalar PolyScalar::operator-() const {
  PolyScalar r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

PolyScalar PolyScalar::operator*(const PolyScalar& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("PolyScalar: nvars mismatch");
  PolyScalar r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Expo e(e1.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

PolyScalar PolyScalar::operator*(const Rational& c) const {
  PolyScalar r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, coef] : terms_) r.terms_.emplace(e, coef * c);
  return r;
}

PolyScalar PolyScalar::deriv(int i) const {
  if (i < 1 || i > nvars_) throw std::invalid_argument("PolyScalar::deriv index");
  PolyScalar r(nvars_);
  const size_t k = static_cast<size_t>(i - 1);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Expo e2 = e;
    e2[k] -= 1;
    r.add_term(e2, c * e[k]);
  }
  return r;
}

Rational PolyScalar::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("PolyScalar::eval point length");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    acc += t;
  }
  return acc;
}

PolyScalar PolyScalar::compose(const std::vector<PolyScalar>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_)
    throw std::invalid_argument("PolyScalar::compose arity");
  const int target_vars = subs.empty() ? 0 : subs[0].num_vars();
  PolyScalar acc(target_vars);
  for (const auto& [e, c] : terms_) {
    PolyScalar t = PolyScalar::constant(target_vars, c);
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = t * subs[i];
    acc = acc + t;
  }
  return acc;
}

double PolyScalar::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) {
    const double a = std::fabs(static_cast<double>(c));
    if (a > m) m = a;
  }
  return m;
}

}  // namespace relp
