#pragma once

#include "relplectic/polyform.hpp"

#include <random>
#include <string>
#include <utility>

namespace relp {

/// Canonical (n)-plectic phase space over base R^k: coordinates
/// (q^1..q^k, p_I) with one momentum per increasing n-index I.
/// Returns (theta, omega) with theta = sum_I p_I dq^I and omega = -d theta.
std::pair<PolyForm, PolyForm> multicotangent_fixture(int base_dim, int n);

/// The closed 3-form on R^6
///   dx1^dx3^dx5 - dx1^dx4^dx6 - dx2^dx3^dx6 + f * dx2^dx4^dx5,
/// where f may depend only on x2, x4, x5.
PolyForm ryvkin_form(const PolyScalar& f);

/// Constant-coefficient representatives of the three linear types of
/// nondegenerate 3-forms on R^6.
PolyForm rep3form_positive();  // e123 + e456
PolyForm rep3form_negative();  // e135 - e146 - e236 - e245
PolyForm rep3form_null();      // e156 - e246 + e345

/// Seeded random generators used by property suites (small rational
/// coefficients, bounded polynomial degree).
PolyScalar random_poly(std::mt19937_64& rng, int num_vars, int max_deg, int max_terms);
PolyForm random_form(std::mt19937_64& rng, int degree, int num_vars, int max_deg,
                     int max_terms);
PolyVec random_vec(std::mt19937_64& rng, int num_vars, int max_deg, int max_terms);

/// JSON (de)serialization of polynomial forms:
/// { "vars": m, "degree": k,
///   "terms": [ { "index": [i...],
///                "poly": [ { "exp": [...], "num": int, "den": int } ] } ] }
std::string form_to_json(const PolyForm& f);
PolyForm form_from_json(const std::string& text);

}  // namespace relp
