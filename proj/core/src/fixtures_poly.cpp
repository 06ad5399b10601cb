#include "relplectic/fixtures_poly.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace relp {

namespace {
std::vector<std::vector<int>> increasing_tuples(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
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

std::pair<PolyForm, PolyForm> multicotangent_fixture(int base_dim, int n) {
  if (n < 1 || n > base_dim)
    throw std::invalid_argument("multicotangent_fixture: need 1 <= n <= base_dim");
  const auto idxs = increasing_tuples(base_dim, n);
  const int m = base_dim + static_cast<int>(idxs.size());
  PolyForm theta(n, m);
  for (size_t t = 0; t < idxs.size(); ++t) {
    // coordinate q^i = x_i, momentum p_I = x_{base_dim + t + 1}
    PolyScalar p = PolyScalar::variable(m, base_dim + static_cast<int>(t) + 1);
    theta.add_component(idxs[t], p);
  }
  PolyForm omega = -d(theta);
  return {theta, omega};
}

PolyForm ryvkin_form(const PolyScalar& f) {
  if (f.num_vars() != 6) throw std::invalid_argument("ryvkin_form: f must live on R^6");
  for (const auto& [e, c] : f.terms())
    if (e[0] != 0 || e[2] != 0 || e[5] != 0)
      throw std::invalid_argument("ryvkin_form: f may depend only on x2, x4, x5");
  PolyForm w(3, 6);
  const PolyScalar one = PolyScalar::constant(6, 1);
  w.add_component({1, 3, 5}, one);
  w.add_component({1, 4, 6}, -one);
  w.add_component({2, 3, 6}, -one);
  if (!f.is_zero()) w.add_component({2, 4, 5}, f);
  return w;
}

PolyForm rep3form_positive() {
  PolyForm a(3, 6);
  const PolyScalar one = PolyScalar::constant(6, 1);
  a.add_component({1, 2, 3}, one);
  a.add_component({4, 5, 6}, one);
  return a;
}

PolyForm rep3form_negative() {
  PolyForm a(3, 6);
  const PolyScalar one = PolyScalar::constant(6, 1);
  a.add_component({1, 3, 5}, one);
  a.add_component({1, 4, 6}, -one);
  a.add_component({2, 3, 6}, -one);
  a.add_component({2, 4, 5}, -one);
  return a;
}

PolyForm rep3form_null() {
  PolyForm a(3, 6);
  const PolyScalar one = PolyScalar::constant(6, 1);
  a.add_component({1, 5, 6}, one);
  a.add_component({2, 4, 6}, -one);
  a.add_component({3, 4, 5}, one);
  return a;
}

PolyScalar random_poly(std::mt19937_64& rng, int num_vars, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> expo(0, max_deg);
  PolyScalar p(num_vars);
  const int t = nterms(rng);
  for (int i = 0; i < t; ++i) {
    PolyScalar::Expo e(static_cast<size_t>(num_vars), 0);
    int budget = max_deg;
    for (int v = 0; v < num_vars && budget > 0; ++v) {
      const int ev = expo(rng) % (budget + 1);
      e[static_cast<size_t>(v)] = ev;
      budget -= ev;
    }
    const int c = coeff(rng);
    if (c != 0) p.add_term(e, Rational(c, den(rng)));
  }
  return p;
}

PolyForm random_form(std::mt19937_64& rng, int degree, int num_vars, int max_deg,
                     int max_terms) {
  const auto idxs = increasing_tuples(num_vars, degree);
  std::uniform_int_distribution<size_t> pick(0, idxs.empty() ? 0 : idxs.size() - 1);
  PolyForm f(degree, num_vars);
  if (idxs.empty()) return f;
  const int ncomp = std::min<int>(3, static_cast<int>(idxs.size()));
  for (int i = 0; i < ncomp; ++i)
    f.add_component(idxs[pick(rng)], random_poly(rng, num_vars, max_deg, max_terms));
  return f;
}

PolyVec random_vec(std::mt19937_64& rng, int num_vars, int max_deg, int max_terms) {
  PolyVec v = PolyVec::zero(num_vars);
  for (int i = 0; i < num_vars; ++i)
    v.comps[static_cast<size_t>(i)] = random_poly(rng, num_vars, max_deg, max_terms);
  return v;
}

std::string form_to_json(const PolyForm& f) {
  nlohmann::json j;
  j["vars"] = f.num_vars();
  j["degree"] = f.degree();
  j["terms"] = nlohmann::json::array();
  for (const auto& [idx, c] : f.comps()) {
    nlohmann::json term;
    term["index"] = idx;
    term["poly"] = nlohmann::json::array();
    for (const auto& [e, coef] : c.terms()) {
      nlohmann::json mono;
      mono["exp"] = e;
      mono["num"] = static_cast<std::int64_t>(boost::multiprecision::numerator(coef));
      mono["den"] = static_cast<std::int64_t>(boost::multiprecision::denominator(coef));
      term["poly"].push_back(mono);
    }
    j["terms"].push_back(term);
  }
  return j.dump(2);
}

PolyForm form_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int m = j.at("vars").get<int>();
  const int k = j.at("degree").get<int>();
  PolyForm f(k, m);
  for (const auto& term : j.at("terms")) {
    const auto idx = term.at("index").get<std::vector<int>>();
    PolyScalar c(m);
    for (const auto& mono : term.at("poly")) {
      const auto e = mono.at("exp").get<std::vector<int>>();
      const auto num = mono.at("num").get<std::int64_t>();
      const auto den = mono.at("den").get<std::int64_t>();
      c.add_term(e, Rational(num, den));
    }
    PolyForm piece = PolyForm::monomial(m, idx, c);
    f = f + piece;
  }
  return f;
}

}  // namespace relp
