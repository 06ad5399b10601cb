#include "relplectic/suites.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "relplectic/cone_poly.hpp"
#include "relplectic/lie2_group.hpp"
#include "relplectic/linf_poly.hpp"
#include "relplectic/moment.hpp"

namespace relp {

namespace {

const std::vector<std::string> kSuites = {
    "cartan",  "qham-axioms", "gen-jacobi", "lie2-axioms", "leibniz",
    "quasi-iso", "atiyah",    "courant",    "morphism"};

const std::vector<std::string> kPolyFixtures = {"poly-n3", "poly-n3-degenerate",
                                                "poly-r4-r3"};
const std::vector<std::string> kGroupFixtures = {"conj-su2", "conj-so3", "double-su2",
                                                 "double-so3"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
  for (const auto& e : v)
    if (e == s) return true;
  return false;
}

std::string fixture_dir() {
  const char* env = std::getenv("RELPLECTIC_FIXTURE_DIR");
  return env ? std::string(env) : std::string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read fixture file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Resolve a polynomial fixture: builtin name, a path, or a file under the
/// fixture directory.
RelPlecticStructure resolve_poly(const std::string& fixture) {
  if (contains(kPolyFixtures, fixture)) return poly_fixture(fixture);
  namespace fs = std::filesystem;
  if (fs::exists(fixture)) return rel_structure_from_json(read_file(fixture));
  const std::string dir = fixture_dir();
  if (!dir.empty() && fs::exists(fs::path(dir) / fixture))
    return rel_structure_from_json(read_file((fs::path(dir) / fixture).string()));
  throw std::invalid_argument("unknown polynomial fixture: " + fixture);
}

/// Load an algebra from the fixture directory when available; otherwise the
/// builtin table.
LieAlgebra load_algebra(const std::string& stem) {
  const std::string dir = fixture_dir();
  if (!dir.empty()) {
    const auto p = std::filesystem::path(dir) / (stem + ".json");
    if (std::filesystem::exists(p)) return LieAlgebra::from_json(read_file(p.string()));
  }
  return stem == "su2" ? LieAlgebra::su2() : LieAlgebra::so3();
}

std::mt19937_64 check_rng(const SuiteConfig& cfg, std::uint64_t check_index) {
  return std::mt19937_64(cfg.seed * 0x9e3779b97f4a7c15ULL + check_index + 1);
}

struct Recorder {
  SuiteReport* r;
  const SuiteConfig* cfg;
  std::uint64_t idx = 0;

  std::mt19937_64 rng() { return check_rng(*cfg, idx); }
  void add(const std::string& id, const std::string& identity, double residual) {
    ++idx;
    r->checks.push_back({id, identity, residual, residual <= cfg->tol});
  }
};

// ---------------------------------------------------------------- polynomial

void poly_cartan(Recorder& rec, const RelPlecticStructure& s) {
  auto rng = rec.rng();
  CartanResiduals acc;
  const int m = s.m_vars(), p = s.n_vars();
  for (int i = 0; i < rec.cfg->samples; ++i) {
    const int deg = 1 + static_cast<int>(rng() % static_cast<unsigned>(s.n() + 1));
    RelForm a{random_form(rng, deg - 1, m, 2, 2), random_form(rng, deg, p, 2, 2)};
    const RelVec x = random_related_pair(s, rng);
    const RelVec y{random_vec(rng, m, 2, 2), random_vec(rng, p, 2, 2)};
    const CartanResiduals c = cartan_suite(s.F, x, y, a);
    acc.lie_comm = std::max(acc.lie_comm, c.lie_comm);
    acc.iota_anticomm = std::max(acc.iota_anticomm, c.iota_anticomm);
    acc.d_lie_comm = std::max(acc.d_lie_comm, c.d_lie_comm);
    acc.lie_iota = std::max(acc.lie_iota, c.lie_iota);
    acc.magic = std::max(acc.magic, c.magic);
    acc.d_squared = std::max(acc.d_squared, c.d_squared);
  }
  rec.add("lie-commutator", "[L_x, L_y] = L_[x,y] on cone forms", acc.lie_comm);
  rec.add("iota-anticommute", "iota_x iota_y + iota_y iota_x = 0", acc.iota_anticomm);
  rec.add("d-lie-commute", "d L_x = L_x d for map-related x", acc.d_lie_comm);
  rec.add("lie-iota", "[L_x, iota_y] = iota_[x,y]", acc.lie_iota);
  rec.add("magic-formula", "iota_x d + d iota_x = L_x for map-related x", acc.magic);
  rec.add("d-squared", "cone differential squares to zero", acc.d_squared);
}

void poly_gen_jacobi(Recorder& rec, const RelPlecticStructure& s) {
  LInfAlgebra A = build_Ham_inf(s);
  const int n = s.n();
  for (int arity = 1; arity <= n + 1; ++arity) {
    auto rng = rec.rng();
    double worst = 0;
    for (int t = 0; t < std::max(1, rec.cfg->samples / (n + 1)); ++t) {
      std::vector<GradedElement> xs;
      for (int i = 0; i < arity; ++i) {
        // Bias toward degree 0 (the only degree where higher brackets act)
        // while still exercising mixed-degree tuples.
        const int deg = (rng() % 4 == 0) ? 1 + static_cast<int>(rng() % 2) : 0;
        xs.push_back(random_graded_element(s, deg, rng));
      }
      worst = std::max(worst, gen_jacobi_residual(A, xs));
    }
    rec.add("jacobi-m" + std::to_string(arity),
            "generalized Jacobi identity, arity " + std::to_string(arity), worst);
  }
  {
    auto rng = rec.rng();
    double worst = 0;
    for (int t = 0; t < rec.cfg->samples; ++t) {
      std::vector<GradedElement> xs = {random_graded_element(s, 0, rng),
                                       random_graded_element(s, 1, rng)};
      worst = std::max(worst, A.bracket(xs).payload.max_abs_coeff());
    }
    rec.add("positive-degree-vanish",
            "higher brackets vanish on tuples of positive total degree", worst);
  }
  {
    auto rng = rec.rng();
    double worst = 0;
    for (int t = 0; t < rec.cfg->samples; ++t) {
      const int k = 2 + static_cast<int>(rng() % static_cast<unsigned>(n));
      std::vector<GradedElement> xs;
      for (int i = 0; i < k; ++i) xs.push_back(random_graded_element(s, 0, rng));
      worst = std::max(worst, skew_symmetry_residual(A, xs, rng));
    }
    rec.add("skew-symmetry", "graded skew symmetry of the multibrackets", worst);
  }
  if (s.name == "poly-n3-degenerate") {
    auto rng = rec.rng();
    PolyVec kern = PolyVec::zero(s.m_vars());
    kern.comps[6] = PolyScalar::constant(s.m_vars(), 1);
    double worst = 0;
    for (int t = 0; t < rec.cfg->samples; ++t) {
      std::vector<GradedElement> xs = {random_graded_element(s, 0, rng),
                                       random_graded_element(s, 0, rng),
                                       random_graded_element(s, 0, rng)};
      worst = std::max(worst, witness_independence_residual(A, xs, kern));
    }
    rec.add("witness-independence",
            "perturbing a witness by a kernel direction leaves every bracket fixed",
            worst);
  }
}

void poly_lie2(Recorder& rec, const RelPlecticStructure& s) {
  if (s.n() != 2) {
    rec.add("precondition", "fixture must carry a relative 2-plectic structure", 1.0);
    return;
  }
  auto rng = rec.rng();
  double semi_skew = 0, semi_jac = 0, hemi_jac = 0, hemi_skew = 0, diff = 0;
  for (int t = 0; t < rec.cfg->samples; ++t) {
    const HamElement a = random_ham_element(s, rng);
    const HamElement b = random_ham_element(s, rng);
    const HamElement c = random_ham_element(s, rng);

    semi_skew = std::max(
        semi_skew, (semi_bracket(s, a.witness, b.witness) +
                    semi_bracket(s, b.witness, a.witness)).max_abs_coeff());
    semi_jac = std::max(semi_jac, jacobi_up_to_exact_check(s, a.witness, b.witness,
                                                           c.witness));

    const RelVec ab = rel_vec_bracket(a.witness, b.witness);
    hemi_jac = std::max(
        hemi_jac, (hemi_bracket(s, a.witness, hemi_bracket(s, b.witness, c.form)) -
                   hemi_bracket(s, ab, c.form) -
                   hemi_bracket(s, b.witness, hemi_bracket(s, a.witness, c.form)))
                      .max_abs_coeff());
    hemi_skew = std::max(
        hemi_skew, (hemi_bracket(s, a.witness, b.form) +
                    hemi_bracket(s, b.witness, a.form) -
                    rel_d(s.F, rel_iota(a.witness, b.form) + rel_iota(b.witness, a.form)))
                       .max_abs_coeff());
    diff = std::max(diff, (hemi_bracket(s, a.witness, b.form) -
                           semi_bracket(s, a.witness, b.witness) -
                           rel_d(s.F, rel_iota(a.witness, b.form)))
                              .max_abs_coeff());
  }
  rec.add("semi-skew", "semi bracket is strictly antisymmetric", semi_skew);
  rec.add("semi-jacobi-exact", "semi Jacobi defect is the differential of a contraction",
          semi_jac);
  rec.add("hemi-jacobi", "hemi bracket satisfies the strict Jacobi identity", hemi_jac);
  rec.add("hemi-skew-exact", "hemi antisymmetry defect is exact", hemi_skew);
  rec.add("hemi-semi-difference",
          "hemi and semi brackets differ by the differential of a contraction", diff);
}

void poly_leibniz(Recorder& rec, const RelPlecticStructure& s) {
  auto rng = rec.rng();
  LeibnizResiduals acc;
  for (int t = 0; t < rec.cfg->samples; ++t) {
    const int dy = static_cast<int>(rng() % 2);
    const int dz = static_cast<int>(rng() % 2);
    const GradedElement x = random_graded_element(s, 0, rng);
    const GradedElement y = random_graded_element(s, dy, rng);
    const GradedElement z = random_graded_element(s, dz, rng);
    const LeibnizResiduals c = leibniz_check(s, x, y, z);
    acc.delta_squared = std::max(acc.delta_squared, c.delta_squared);
    acc.derivation = std::max(acc.derivation, c.derivation);
    acc.left_leibniz = std::max(acc.left_leibniz, c.left_leibniz);
  }
  rec.add("delta-squared", "differential squares to zero", acc.delta_squared);
  rec.add("derivation", "differential is a derivation of the bracket", acc.derivation);
  rec.add("left-leibniz", "bracket satisfies the left Leibniz identity",
          acc.left_leibniz);
}

void poly_quasi_iso(Recorder& rec, const RelPlecticStructure& s) {
  if (s.name != "poly-n3") {
    rec.add("precondition",
            "witness solving needs constant forms with a constant-differential map", 1.0);
    return;
  }
  auto rng = rec.rng();
  QuasiIsoResiduals acc;
  for (int t = 0; t < std::max(1, rec.cfg->samples / 5); ++t) {
    const QuasiIsoResiduals c = quasi_iso_check(s, rng);
    acc.phi_solves = std::max(acc.phi_solves, c.phi_solves);
    acc.chain_map = std::max(acc.chain_map, c.chain_map);
    acc.bracket_intertwine = std::max(acc.bracket_intertwine, c.bracket_intertwine);
    acc.higher_intertwine = std::max(acc.higher_intertwine, c.higher_intertwine);
    acc.h0_recovery = std::max(acc.h0_recovery, c.h0_recovery);
  }
  rec.add("witness-solve", "solved witness satisfies the Hamiltonian equation",
          acc.phi_solves);
  rec.add("chain-map", "witness adjunction commutes with the differential",
          acc.chain_map);
  rec.add("bracket-intertwine", "binary brackets are intertwined strictly",
          acc.bracket_intertwine);
  rec.add("higher-intertwine", "higher brackets are intertwined strictly",
          acc.higher_intertwine);
  rec.add("h0-recovery", "projection recovers the generating witness pair",
          acc.h0_recovery);
}

// --------------------------------------------------------------------- group

struct GroupContext {
  LieAlgebra su2;
  LieAlgebra so3;
  QHamSpace space;
  GRelStructure st;
  double orientation = 0;
};

GroupContext make_group_context(const SuiteConfig& cfg) {
  GroupContext g{load_algebra("su2"), load_algebra("so3"), {}, {}, 0};
  std::mt19937_64 rng(cfg.seed + 0xabcdef);
  g.orientation = detect_orientation(
      [&](double s) { return preset_space(cfg.fixture, g.su2, g.so3, s); }, rng, 8,
      std::max(cfg.tol, 1e-10));
  g.space = preset_space(cfg.fixture, g.su2, g.so3, g.orientation);
  g.st = grel_structure(g.space);
  return g;
}

void group_cartan(Recorder& rec, const GroupContext& g) {
  GCartanResiduals acc;
  for (int deg = 0; deg <= 2; ++deg) {
    auto rng = rec.rng();
    const GCartanResiduals c =
        grel_cartan_suite(g.st, deg, rng, std::max(1, rec.cfg->samples / 3));
    acc.lie_comm = std::max(acc.lie_comm, c.lie_comm);
    acc.iota_anticomm = std::max(acc.iota_anticomm, c.iota_anticomm);
    acc.d_lie_comm = std::max(acc.d_lie_comm, c.d_lie_comm);
    acc.lie_iota = std::max(acc.lie_iota, c.lie_iota);
    acc.magic = std::max(acc.magic, c.magic);
    acc.d_squared = std::max(acc.d_squared, c.d_squared);
  }
  rec.add("lie-commutator", "[L_x, L_y] = L_[x,y] on cone forms", acc.lie_comm);
  rec.add("iota-anticommute", "iota_x iota_y + iota_y iota_x = 0", acc.iota_anticomm);
  rec.add("d-lie-commute", "d L_x = L_x d for map-related x", acc.d_lie_comm);
  rec.add("lie-iota", "[L_x, iota_y] = iota_[x,y]", acc.lie_iota);
  rec.add("magic-formula", "iota_x d + d iota_x = L_x for map-related x", acc.magic);
  rec.add("d-squared", "cone differential squares to zero", acc.d_squared);
}

void group_qham(Recorder& rec, const GroupContext& g) {
  auto rng = rec.rng();
  const QHamAxiomsResult a = axioms_check(g.space, rng, rec.cfg->samples);
  rec.add("moment-compatibility", "d omega equals minus the moment pullback of eta",
          a.axiom1);
  rec.add("generating-contraction",
          "contraction of omega with a generating field matches the moment pullback "
          "of the trivialization pairing",
          a.axiom2);
  rec.add("kernel-trivial",
          "kernel of omega meets the moment differential kernel trivially",
          a.kernel_trivial ? 0.0 : 1.0);
  rec.add("equivariance", "moment differential intertwines the generating fields",
          a.equivariance);
  rec.add("invariance", "omega is invariant along every generating field", a.invariance);
}

void add_lie2_records(Recorder& rec, const Lie2AxiomResiduals& r, const std::string& p) {
  rec.add(p + "-bracket-chain", "differential intertwines mixed bracket and bracket",
          r.bracket_chain);
  rec.add(p + "-alternator-0", "degree-0 antisymmetry defect is the alternator image",
          r.alternator_l0);
  rec.add(p + "-alternator-1", "mixed antisymmetry defect is the alternator image",
          r.alternator_l1);
  rec.add(p + "-jacobiator-0", "degree-0 Jacobi defect is the Jacobiator image",
          r.jacobiator_l0);
  rec.add(p + "-jacobiator-1", "mixed Jacobi defect is the Jacobiator image",
          r.jacobiator_l1);
  rec.add(p + "-alt-bracket", "symmetrized Jacobiator matches the bracketed alternator",
          r.alt_bracket);
  rec.add(p + "-alt-jacobiator",
          "Jacobiator symmetry defect matches the alternator coherence sum",
          r.alt_jacobiator);
  rec.add(p + "-big-jacobi", "Jacobiator coherence on quadruples", r.big_j);
}

void group_lie2(Recorder& rec, const GroupContext& g) {
  const Lie2Algebra semi = build_lie2_semi(g.st);
  const Lie2Algebra hemi = build_lie2_hemi(g.st);
  {
    auto rng = rec.rng();
    add_lie2_records(rec, lie2_axiom_suite(semi, rng, rec.cfg->samples), "semi");
  }
  {
    auto rng = rec.rng();
    add_lie2_records(rec, lie2_axiom_suite(hemi, rng, rec.cfg->samples), "hemi");
  }
  {
    auto rng = rec.rng();
    double diff = 0;
    for (int t = 0; t < rec.cfg->samples; ++t) {
      const GHamElement a = random_l0_element(g.st, rng);
      const GHamElement b = random_l0_element(g.st, rng);
      const GRelForm lhs = grel_hemi(g.st, a.witness, b.form) -
                           grel_semi(g.st, a.witness, b.witness) -
                           grel_d(g.st, grel_iota(a.witness, b.form));
      diff = std::max(diff, grel_form_max(g.st, lhs, rng, 1));
    }
    rec.add("hemi-semi-difference",
            "hemi and semi brackets differ by the differential of a contraction", diff);
  }
}

void group_leibniz(Recorder& rec, const GroupContext& g) {
  auto rng = rec.rng();
  const GLeibnizResiduals r = leibniz_group_check(g.st, rng, rec.cfg->samples);
  rec.add("delta-squared", "differential squares to zero", r.delta_squared);
  rec.add("derivation", "differential is a derivation of the bracket", r.derivation);
  rec.add("left-leibniz", "bracket satisfies the left Leibniz identity", r.left_leibniz);
}

void group_atiyah(Recorder& rec, const GroupContext& g) {
  auto rng = rec.rng();
  const AtiyahResiduals r = atiyah_check(g.st, rng, rec.cfg->samples);
  rec.add("field-jacobi", "componentwise field bracket satisfies strict Jacobi",
          r.jacobi_l0);
  rec.add("mixed-jacobi", "mixed Jacobi identity on functions", r.jacobi_l1);
  rec.add("one-sided-action", "functions act trivially from the left", r.mixed_zero);
  rec.add("big-jacobi", "Jacobiator coherence on quadruples of action pairs", r.big_j);
}

void group_courant(Recorder& rec, GroupContext& g, SuiteReport& out) {
  double twist;
  {
    auto rng = rec.rng();
    twist = courant_detect_twist(g.st, rng, 6);
  }
  const CourantAlgebra C = build_courant(g.st, twist);
  auto rng = rec.rng();
  const CourantResiduals r = courant_check(C, rng, rec.cfg->samples);
  out.note += (out.note.empty() ? "" : "; ");
  out.note += "twist sign resolved to " + std::to_string(static_cast<int>(twist));
  rec.add("chain-condition", "differential intertwines the mixed bracket", r.cond1);
  rec.add("exact-pair-chain", "differential intertwines the bracket of two forms",
          r.cond2);
  rec.add("homotopy-jacobi", "cyclic Jacobi sum is the differential of the ternary map",
          r.cond3);
  rec.add("mixed-homotopy-jacobi", "mixed Jacobi defect equals the ternary contraction",
          r.cond4);
  rec.add("ternary-coherence", "ternary coherence on form-free action pairs", r.cond5);
  rec.add("pairing-symmetry", "the bilinear pairing is symmetric", r.pairing_sym);
}

void group_morphism(Recorder& rec, GroupContext& g, SuiteReport& out) {
  const Lie2Algebra semi = build_lie2_semi(g.st);
  double twist;
  {
    auto rng = rec.rng();
    twist = courant_detect_twist(g.st, rng, 6);
  }
  const CourantAlgebra C = build_courant(g.st, twist);
  {
    auto rng = rec.rng();
    const MorphismResiduals r = morphism_check(semi, C, rng, rec.cfg->samples);
    rec.add("embed-bracket", "observable embedding is a bracket homotopy morphism",
            r.phi_bracket);
    rec.add("embed-mixed", "embedding respects the mixed bracket up to homotopy",
            r.phi_mixed);
    rec.add("embed-coherence", "embedding Jacobiator coherence", r.phi_coherence);
    rec.add("project-mixed", "projection respects the mixed bracket up to homotopy",
            r.psi_mixed);
    rec.add("project-coherence", "projection Jacobiator coherence", r.psi_coherence);
    rec.add("identity-strict", "identity morphism has vanishing defects",
            r.identity_strict);
  }
  {
    auto rng = rec.rng();
    const MomentResiduals r = moment_check(g.st, rng, rec.cfg->samples);
    out.note += (out.note.empty() ? "" : "; ");
    out.note += "moment-map lift checked on algebra basis pairs/triples";
    rec.add("moment-hamiltonian", "moment cochains are Hamiltonian with action witness",
            r.f1_hamiltonian);
    rec.add("moment-f2-skew", "binary component of the lift is antisymmetric",
            r.f2_skew);
    rec.add("moment-f2-formula", "binary component matches its closed-form pairing",
            r.f2_formula);
    rec.add("moment-cond1", "bracket compatibility of the lift up to homotopy",
            r.cond1);
    rec.add("moment-cond2", "cyclic binary sum matches the ternary bracket", r.cond2);
    rec.add("moment-projection", "projection of the lift is the infinitesimal action",
            r.pi_action);
  }
}

}  // namespace

std::vector<std::string> suite_names() { return kSuites; }

std::vector<std::string> fixture_names() {
  std::vector<std::string> out = kPolyFixtures;
  out.insert(out.end(), kGroupFixtures.begin(), kGroupFixtures.end());
  const std::string dir = fixture_dir();
  if (!dir.empty() && std::filesystem::is_directory(dir)) {
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".json") out.push_back(e.path().filename().string());
  }
  return out;
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  if (!contains(kSuites, cfg.suite))
    throw std::invalid_argument("unknown suite: " + cfg.suite);
  if (cfg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (cfg.backend != "exact" && cfg.backend != "float")
    throw std::invalid_argument("unknown backend: " + cfg.backend);

  const bool group_fixture = contains(kGroupFixtures, cfg.fixture);
  if (cfg.backend == "float" && !group_fixture)
    throw std::invalid_argument("float backend requires a group preset fixture");
  if (cfg.backend == "exact" && group_fixture)
    throw std::invalid_argument("exact backend requires a polynomial fixture");

  SuiteReport out;
  out.suite = cfg.suite;
  out.fixture = cfg.fixture;
  out.backend = cfg.backend;
  out.seed = cfg.seed;
  out.samples = cfg.samples;
  out.tol = cfg.tol;
  Recorder rec{&out, &cfg, 0};

  const auto t0 = std::chrono::steady_clock::now();
  if (cfg.backend == "exact") {
    const RelPlecticStructure s = resolve_poly(cfg.fixture);
    if (cfg.suite == "cartan") poly_cartan(rec, s);
    else if (cfg.suite == "gen-jacobi") poly_gen_jacobi(rec, s);
    else if (cfg.suite == "lie2-axioms") poly_lie2(rec, s);
    else if (cfg.suite == "leibniz") poly_leibniz(rec, s);
    else if (cfg.suite == "quasi-iso") poly_quasi_iso(rec, s);
    else
      throw std::invalid_argument("suite '" + cfg.suite +
                                  "' is not available on the exact backend");
  } else {
    GroupContext g = make_group_context(cfg);
    out.note = "generating-field orientation resolved to " +
               std::to_string(static_cast<int>(g.orientation));
    if (cfg.suite == "cartan") group_cartan(rec, g);
    else if (cfg.suite == "qham-axioms") group_qham(rec, g);
    else if (cfg.suite == "lie2-axioms") group_lie2(rec, g);
    else if (cfg.suite == "leibniz") group_leibniz(rec, g);
    else if (cfg.suite == "atiyah") group_atiyah(rec, g);
    else if (cfg.suite == "courant") group_courant(rec, g, out);
    else if (cfg.suite == "morphism") group_morphism(rec, g, out);
    else
      throw std::invalid_argument("suite '" + cfg.suite +
                                  "' is not available on the float backend");
  }
  const auto t1 = std::chrono::steady_clock::now();
  out.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return out;
}

}  // namespace relp
