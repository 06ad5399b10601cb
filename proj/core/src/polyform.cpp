#include "relplectic/polyform.hpp"

#include <algorithm>
#include <cmath>

namespace relp {

PolyVec PolyVec::zero(int m) {
  PolyVec v;
  v.comps.assign(static_cast<size_t>(m), PolyScalar(m));
  return v;
}

PolyVec PolyVec::constant(int m, const std::vector<Rational>& c) {
  PolyVec v = zero(m);
  for (int i = 0; i < m; ++i)
    v.comps[static_cast<size_t>(i)] = PolyScalar::constant(m, c[static_cast<size_t>(i)]);
  return v;
}

PolyVec PolyVec::operator+(const PolyVec& o) const {
  PolyVec r = *this;
  for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = r.comps[i] + o.comps[i];
  return r;
}

PolyVec PolyVec::operator-(const PolyVec& o) const {
  PolyVec r = *this;
  for (size_t i = 0; i < comps.size(); ++i) r.comps[i] = r.comps[i] - o.comps[i];
  return r;
}

PolyVec PolyVec::operator*(const Rational& c) const {
  PolyVec r = *this;
  for (auto& p : r.comps) p = p * c;
  return r;
}

namespace {

/// Sort an index tuple, returning the permutation sign, or 0 if repeated.
int sort_index(std::vector<int>& idx) {
  int sign = 1;
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    for (size_t j = 0; j + 1 < idx.size() - i; ++j)
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        sign = -sign;
      }
  for (size_t i = 0; i + 1 < idx.size(); ++i)
    if (idx[i] == idx[i + 1]) return 0;
  return sign;
}

}  // namespace

PolyForm PolyForm::monomial(int num_vars, const Index& idx, const PolyScalar& coeff) {
  Index s = idx;
  const int sign = sort_index(s);
  PolyForm f(static_cast<int>(idx.size()), num_vars);
  if (sign == 0 || coeff.is_zero()) return f;
  f.add_component(s, sign == 1 ? coeff : -coeff);
  return f;
}

PolyForm PolyForm::from_scalar(const PolyScalar& s) {
  PolyForm f(0, s.num_vars());
  if (!s.is_zero()) f.add_component({}, s);
  return f;
}

const PolyScalar PolyForm::component(const Index& idx) const {
  auto it = comps_.find(idx);
  if (it == comps_.end()) return PolyScalar(nvars_);
  return it->second;
}

void PolyForm::add_component(const Index& sorted_idx, const PolyScalar& c) {
  if (static_cast<int>(sorted_idx.size()) != degree_)
    throw std::invalid_argument("PolyForm::add_component degree mismatch");
  for (int i : sorted_idx)
    if (i < 1 || i > nvars_) throw std::invalid_argument("PolyForm index out of range");
  if (c.is_zero()) return;
  auto it = comps_.find(sorted_idx);
  if (it == comps_.end()) {
    comps_.emplace(sorted_idx, c);
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) comps_.erase(it);
  }
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
  if (degree_ != o.degree_ || nvars_ != o.nvars_)
    throw std::invalid_argument("PolyForm: shape mismatch in +");
  PolyForm r = *this;
  for (const auto& [i, c] : o.comps_) r.add_component(i, c);
  return r;
}

PolyForm PolyForm::operator-(const PolyForm& o) const { return *this + (-o); }

PolyForm PolyForm::operator-() const {
  PolyForm r(degree_, nvars_);
  for (const auto& [i, c] : comps_) r.comps_.emplace(i, -c);
  return r;
}

PolyForm PolyForm::operator*(const Rational& c) const {
  PolyForm r(degree_, nvars_);
  if (c == 0) return r;
  for (const auto& [i, coef] : comps_) r.comps_.emplace(i, coef * c);
  return r;
}

bool PolyForm::operator==(const PolyForm& o) const {
  return degree_ == o.degree_ && nvars_ == o.nvars_ && comps_ == o.comps_;
}

double PolyForm::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [i, c] : comps_) m = std::max(m, c.max_abs_coeff());
  return m;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  if (a.num_vars() != b.num_vars())
    throw std::invalid_argument("wedge: num_vars mismatch");
  PolyForm r(a.degree() + b.degree(), a.num_vars());
  for (const auto& [ia, ca] : a.comps()) {
    for (const auto& [ib, cb] : b.comps()) {
      std::vector<int> idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      std::vector<int> s = idx;
      const int sign = sort_index(s);
      if (sign == 0) continue;
      PolyScalar c = ca * cb;
      r.add_component(s, sign == 1 ? c : -c);
    }
  }
  return r;
}

PolyForm d(const PolyForm& a) {
  PolyForm r(a.degree() + 1, a.num_vars());
  for (const auto& [idx, c] : a.comps()) {
    for (int v = 1; v <= a.num_vars(); ++v) {
      PolyScalar dc = c.deriv(v);
      if (dc.is_zero()) continue;
      std::vector<int> full;
      full.push_back(v);
      full.insert(full.end(), idx.begin(), idx.end());
      std::vector<int> s = full;
      const int sign = sort_index(s);
      if (sign == 0) continue;
      r.add_component(s, sign == 1 ? dc : -dc);
    }
  }
  return r;
}

PolyForm iota(const PolyVec& v, const PolyForm& a) {
  if (a.degree() == 0) return PolyForm::zero(0, a.num_vars());
  PolyForm r(a.degree() - 1, a.num_vars());
  for (const auto& [idx, c] : a.comps()) {
    for (size_t j = 0; j < idx.size(); ++j) {
      const PolyScalar& vj = v.comps[static_cast<size_t>(idx[j] - 1)];
      if (vj.is_zero()) continue;
      std::vector<int> rest;
      for (size_t t = 0; t < idx.size(); ++t)
        if (t != j) rest.push_back(idx[t]);
      PolyScalar term = c * vj;
      r.add_component(rest, (j % 2 == 0) ? term : -term);
    }
  }
  return r;
}

PolyForm lie(const PolyVec& v, const PolyForm& a) {
  if (a.degree() == 0) return iota(v, d(a));
  return iota(v, d(a)) + d(iota(v, a));
}

PolyScalar pullback_scalar(const PolyMap& F, const PolyScalar& s) {
  return s.compose(F.comps);
}

PolyForm pullback(const PolyMap& F, const PolyForm& b) {
  if (b.num_vars() != F.codomain_vars())
    throw std::invalid_argument("pullback: form lives on the wrong space");
  const int m = F.domain_vars();
  PolyForm r(b.degree(), m);
  for (const auto& [idx, c] : b.comps()) {
    PolyForm term = PolyForm::from_scalar(pullback_scalar(F, c));
    for (int i : idx) {
      // dF^i = sum_a dF^i/dx_a dx^a
      PolyForm dFi(1, m);
      for (int a = 1; a <= m; ++a) {
        PolyScalar da = F.comps[static_cast<size_t>(i - 1)].deriv(a);
        if (!da.is_zero()) dFi.add_component({a}, da);
      }
      term = wedge(term, dFi);
    }
    r = r + term;
  }
  return r;
}

PolyVec vec_bracket(const PolyVec& u, const PolyVec& v) {
  const int m = u.num_vars();
  PolyVec r = PolyVec::zero(m);
  for (int i = 0; i < m; ++i) {
    PolyScalar acc(m);
    for (int a = 1; a <= m; ++a) {
      acc = acc + u.comps[static_cast<size_t>(a - 1)] * v.comps[static_cast<size_t>(i)].deriv(a);
      acc = acc - v.comps[static_cast<size_t>(a - 1)] * u.comps[static_cast<size_t>(i)].deriv(a);
    }
    r.comps[static_cast<size_t>(i)] = acc;
  }
  return r;
}

PolyForm poincare_h(const PolyForm& a) {
  if (a.degree() < 1) throw std::invalid_argument("poincare_h: degree >= 1 required");
  const int m = a.num_vars();
  const int k = a.degree();
  PolyForm r(k - 1, m);
  // For a monomial term c x^e dx^I (|e| = polynomial degree), the Euler field
  // E = sum x^i d_i satisfies L_E = (|e| + k) id, so h = iota_E / (|e| + k)
  // per homogeneous piece inverts the identity d h + h d = id.
  for (const auto& [idx, c] : a.comps()) {
    for (const auto& [e, coef] : c.terms()) {
      long long total = 0;
      for (int ei : e) total += ei;
      const Rational scale = Rational(1) / Rational(total + k);
      for (size_t j = 0; j < idx.size(); ++j) {
        // iota_E picks up x^{i_j} on the j-th slot with alternating sign.
        PolyScalar::Expo e2 = e;
        e2[static_cast<size_t>(idx[j] - 1)] += 1;
        PolyScalar term(m);
        term.add_term(e2, coef * scale);
        std::vector<int> rest;
        for (size_t t = 0; t < idx.size(); ++t)
          if (t != j) rest.push_back(idx[t]);
        r.add_component(rest, (j % 2 == 0) ? term : -term);
      }
    }
  }
  return r;
}

namespace {

/// Rank of a rational matrix via Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> a) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  int rank = 0;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> increasing_tuples(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // simple recursive enumeration
  struct Rec {
    int m, k;
    std::vector<std::vector<int>>& out;
    void go(std::vector<int>& cur, int start) {
      if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
      }
      for (int v = start; v <= m; ++v) {
        cur.push_back(v);
        go(cur, v + 1);
        cur.pop_back();
      }
    }
  } rec{m, k, out};
  rec.go(cur, 1);
  return out;
}

}  // namespace

bool nondeg_check_point(const PolyForm& omega, const std::vector<Rational>& x) {
  const int m = omega.num_vars();
  const int k = omega.degree();
  if (k < 1) return false;
  const auto rows_idx = increasing_tuples(m, k - 1);
  std::map<std::vector<int>, size_t> row_of;
  for (size_t r = 0; r < rows_idx.size(); ++r) row_of[rows_idx[r]] = r;
  std::vector<std::vector<Rational>> mat(
      rows_idx.size(), std::vector<Rational>(static_cast<size_t>(m), Rational(0)));
  for (int v = 1; v <= m; ++v) {
    std::vector<Rational> unit(static_cast<size_t>(m), Rational(0));
    PolyVec ev = PolyVec::zero(m);
    ev.comps[static_cast<size_t>(v - 1)] = PolyScalar::constant(m, 1);
    PolyForm c = iota(ev, omega);
    for (const auto& [idx, coef] : c.comps())
      mat[row_of[idx]][static_cast<size_t>(v - 1)] = coef.eval(x);
  }
  return rational_rank(std::move(mat)) == m;
}

Rational hitchin_lambda(const PolyForm& alpha, const PolyForm& vol) {
  if (alpha.num_vars() != 6 || alpha.degree() != 3)
    throw std::invalid_argument("hitchin_lambda: expects a 3-form on R^6");
  if (vol.num_vars() != 6 || vol.degree() != 6)
    throw std::invalid_argument("hitchin_lambda: vol must be a 6-form");
  const std::vector<int> top = {1, 2, 3, 4, 5, 6};
  const Rational lam_vol = vol.component(top).eval(std::vector<Rational>(6, 0));
  if (lam_vol == 0) throw std::invalid_argument("hitchin_lambda: vol is zero");

  // K(v) defined by iota_{K(v)} vol = iota_v alpha ^ alpha; lambda = tr(K^2).
  std::vector<std::vector<Rational>> K(6, std::vector<Rational>(6, Rational(0)));
  const std::vector<Rational> origin(6, 0);
  for (int a = 1; a <= 6; ++a) {
    PolyVec ea = PolyVec::zero(6);
    ea.comps[static_cast<size_t>(a - 1)] = PolyScalar::constant(6, 1);
    PolyForm phi = wedge(iota(ea, alpha), alpha);  // 5-form
    // iota_w vol = lam_vol * sum_b w^b (-1)^{b-1} e^{(b-hat)}
    for (int b = 1; b <= 6; ++b) {
      std::vector<int> bhat;
      for (int t = 1; t <= 6; ++t)
        if (t != b) bhat.push_back(t);
      const Rational coeff = phi.component(bhat).eval(origin);
      const Rational sgn = (b % 2 == 1) ? 1 : -1;
      K[static_cast<size_t>(b - 1)][static_cast<size_t>(a - 1)] = coeff * sgn / lam_vol;
    }
  }
  Rational tr = 0;
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) tr += K[i][j] * K[j][i];
  return tr;
}

LinearType3Form classify_3form(const PolyForm& alpha) {
  PolyForm vol(6, 6);
  vol.add_component({1, 2, 3, 4, 5, 6}, PolyScalar::constant(6, 1));
  const Rational lam = hitchin_lambda(alpha, vol);
  if (lam > 0) return LinearType3Form::TypePositive;
  if (lam < 0) return LinearType3Form::TypeNegative;
  if (!nondeg_check_point(alpha, std::vector<Rational>(6, 0)))
    throw std::invalid_argument("classify_3form: degenerate null-type form");
  return LinearType3Form::TypeNull;
}

}  // namespace relp
