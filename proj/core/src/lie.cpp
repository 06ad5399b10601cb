#include "relplectic/lie.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace relp {

Eigen::MatrixXcd matrix_exp(const Eigen::MatrixXcd& A) {
  const double nrm = A.cwiseAbs().sum();
  int s = 0;
  double scaled = nrm;
  while (scaled > 0.25) {
    scaled /= 2.0;
    ++s;
  }
  Eigen::MatrixXcd B = A / std::pow(2.0, s);
  Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(A.rows(), A.cols());
  Eigen::MatrixXcd sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * B) / static_cast<double>(k);
    sum += term;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

LieAlgebra::LieAlgebra(int dim, std::vector<Eigen::MatrixXd> c_by_first,
                       Eigen::MatrixXd inner_product,
                       std::vector<Eigen::MatrixXcd> matrix_basis, std::string name)
    : dim_(dim),
      c_(std::move(c_by_first)),
      ip_(std::move(inner_product)),
      basis_(std::move(matrix_basis)),
      name_(std::move(name)) {
  if (static_cast<int>(c_.size()) != dim_) throw std::invalid_argument("LieAlgebra: c size");
  if (!basis_.empty()) {
    gram_.resize(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j)
        gram_(i, j) = (basis_[static_cast<size_t>(i)].adjoint() *
                       basis_[static_cast<size_t>(j)])
                          .trace()
                          .real();
    gram_inv_ = gram_.inverse();
  }
}

AlgVec LieAlgebra::bracket(const AlgVec& x, const AlgVec& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("LieAlgebra::bracket: dimension mismatch");
  AlgVec r = AlgVec::Zero(dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != 0.0) r += x(i) * (c_[static_cast<size_t>(i)].transpose() * y);
  return r;
}

Eigen::MatrixXd LieAlgebra::ad(const AlgVec& x) const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x(i) != 0.0) m += x(i) * c_[static_cast<size_t>(i)].transpose();
  return m;
}

double LieAlgebra::inner(const AlgVec& x, const AlgVec& y) const {
  return x.dot(ip_ * y);
}

Eigen::MatrixXcd LieAlgebra::to_matrix(const AlgVec& x) const {
  if (basis_.empty()) throw std::runtime_error("LieAlgebra: matrix basis missing");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(basis_[0].rows(), basis_[0].cols());
  for (int i = 0; i < dim_; ++i) m += x(i) * basis_[static_cast<size_t>(i)];
  return m;
}

AlgVec LieAlgebra::from_matrix(const Eigen::MatrixXcd& X) const {
  if (basis_.empty()) throw std::runtime_error("LieAlgebra: matrix basis missing");
  Eigen::VectorXd rhs(dim_);
  for (int i = 0; i < dim_; ++i)
    rhs(i) = (basis_[static_cast<size_t>(i)].adjoint() * X).trace().real();
  AlgVec x = gram_inv_ * rhs;
  const double resid = (to_matrix(x) - X).cwiseAbs().maxCoeff();
  if (resid > 1e-8)
    throw std::runtime_error("LieAlgebra::from_matrix: element outside basis span");
  return x;
}

GroupElt LieAlgebra::exp(const AlgVec& x) const { return matrix_exp(to_matrix(x)); }

Eigen::MatrixXd LieAlgebra::Ad(const GroupElt& g) const {
  Eigen::MatrixXd m(dim_, dim_);
  const Eigen::MatrixXcd ginv = g.inverse();
  for (int j = 0; j < dim_; ++j) {
    const AlgVec col = from_matrix(g * basis_[static_cast<size_t>(j)] * ginv);
    m.col(j) = col;
  }
  return m;
}

AlgVec LieAlgebra::conj_fundamental(const AlgVec& x, const GroupElt& g) const {
  return x - Ad(g.inverse()) * x;
}

double LieAlgebra::antisymmetry_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k)
        r = std::max(r, std::fabs(c_[static_cast<size_t>(i)](j, k) +
                                  c_[static_cast<size_t>(j)](i, k)));
  return r;
}

double LieAlgebra::jacobi_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        AlgVec ei = AlgVec::Zero(dim_), ej = AlgVec::Zero(dim_), ek = AlgVec::Zero(dim_);
        ei(i) = 1;
        ej(j) = 1;
        ek(k) = 1;
        const AlgVec cyc = bracket(ei, bracket(ej, ek)) + bracket(ej, bracket(ek, ei)) +
                           bracket(ek, bracket(ei, ej));
        r = std::max(r, cyc.cwiseAbs().maxCoeff());
      }
  return r;
}

double LieAlgebra::ad_invariance_residual() const {
  double r = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        AlgVec ei = AlgVec::Zero(dim_), ej = AlgVec::Zero(dim_), ek = AlgVec::Zero(dim_);
        ei(i) = 1;
        ej(j) = 1;
        ek(k) = 1;
        r = std::max(r, std::fabs(inner(bracket(ek, ei), ej) + inner(ei, bracket(ek, ej))));
      }
  return r;
}

double LieAlgebra::matrix_compat_residual() const {
  if (basis_.empty()) return 0.0;
  double r = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) {
      const Eigen::MatrixXcd comm = basis_[static_cast<size_t>(i)] * basis_[static_cast<size_t>(j)] -
                                    basis_[static_cast<size_t>(j)] * basis_[static_cast<size_t>(i)];
      AlgVec ei = AlgVec::Zero(dim_), ej = AlgVec::Zero(dim_);
      ei(i) = 1;
      ej(j) = 1;
      r = std::max(r, (comm - to_matrix(bracket(ei, ej))).cwiseAbs().maxCoeff());
    }
  return r;
}

double LieAlgebra::group_membership_residual(const GroupElt& g) const {
  const Eigen::MatrixXcd I = Eigen::MatrixXcd::Identity(g.rows(), g.cols());
  double r = (g.adjoint() * g - I).cwiseAbs().maxCoeff();
  r = std::max(r, std::abs(g.determinant() - std::complex<double>(1.0, 0.0)));
  return r;
}

GroupElt LieAlgebra::random_group_elt(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> radius(0.0, 2.0);
  AlgVec x = random_alg_vec(rng);
  const double n = x.norm();
  if (n > 1e-12) x = x / n * radius(rng);
  return exp(x);
}

AlgVec LieAlgebra::random_alg_vec(std::mt19937_64& rng) const {
  std::normal_distribution<double> gauss(0.0, 1.0);
  AlgVec x(dim_);
  for (int i = 0; i < dim_; ++i) x(i) = gauss(rng);
  return x;
}

namespace {

std::vector<Eigen::MatrixXd> structure_from_list(
    int dim, const std::vector<std::array<double, 4>>& entries) {
  std::vector<Eigen::MatrixXd> c(static_cast<size_t>(dim),
                                 Eigen::MatrixXd::Zero(dim, dim));
  for (const auto& e : entries) {
    const int i = static_cast<int>(e[0]) - 1;
    const int j = static_cast<int>(e[1]) - 1;
    const int k = static_cast<int>(e[2]) - 1;
    c[static_cast<size_t>(i)](j, k) = e[3];
  }
  return c;
}

}  // namespace

LieAlgebra LieAlgebra::su2() {
  // Basis e_j = -(i/2) sigma_j: [e1,e2] = e3 cyclically, <e_i,e_j> = delta_ij.
  using cd = std::complex<double>;
  const cd I(0, 1);
  Eigen::MatrixXcd s1(2, 2), s2(2, 2), s3(2, 2);
  s1 << 0, 1, 1, 0;
  s2 << 0, -I, I, 0;
  s3 << 1, 0, 0, -1;
  std::vector<Eigen::MatrixXcd> basis = {-0.5 * I * s1, -0.5 * I * s2, -0.5 * I * s3};
  const std::vector<std::array<double, 4>> entries = {
      {1, 2, 3, 1}, {2, 1, 3, -1}, {2, 3, 1, 1}, {3, 2, 1, -1}, {3, 1, 2, 1}, {1, 3, 2, -1}};
  return LieAlgebra(3, structure_from_list(3, entries), Eigen::MatrixXd::Identity(3, 3),
                    std::move(basis), "su2");
}

LieAlgebra LieAlgebra::so3() {
  // (L_i)_{jk} = -eps_{ijk}: [L1,L2] = L3 cyclically; inner product tuned so
  // the basis is orthonormal.
  std::vector<Eigen::MatrixXcd> basis(3, Eigen::MatrixXcd::Zero(3, 3));
  auto eps = [](int i, int j, int k) -> double {
    if (i == j || j == k || i == k) return 0.0;
    const int p[3] = {i, j, k};
    int inv = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (p[a] > p[b]) ++inv;
    return inv % 2 == 0 ? 1.0 : -1.0;
  };
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) basis[static_cast<size_t>(i)](j, k) = -eps(i + 1, j + 1, k + 1);
  const std::vector<std::array<double, 4>> entries = {
      {1, 2, 3, 1}, {2, 1, 3, -1}, {2, 3, 1, 1}, {3, 2, 1, -1}, {3, 1, 2, 1}, {1, 3, 2, -1}};
  return LieAlgebra(3, structure_from_list(3, entries), Eigen::MatrixXd::Identity(3, 3),
                    std::move(basis), "so3");
}

LieAlgebra LieAlgebra::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  const int dim = j.at("dim").get<int>();
  std::vector<Eigen::MatrixXd> c(static_cast<size_t>(dim), Eigen::MatrixXd::Zero(dim, dim));
  for (const auto& e : j.at("structure_constants")) {
    const int i = e.at(0).get<int>() - 1;
    const int jj = e.at(1).get<int>() - 1;
    const int k = e.at(2).get<int>() - 1;
    c[static_cast<size_t>(i)](jj, k) = e.at(3).get<double>();
  }
  Eigen::MatrixXd ip(dim, dim);
  const auto& ipj = j.at("inner_product");
  for (int r = 0; r < dim; ++r)
    for (int cc = 0; cc < dim; ++cc) ip(r, cc) = ipj.at(static_cast<size_t>(r)).at(static_cast<size_t>(cc)).get<double>();
  std::vector<Eigen::MatrixXcd> basis;
  if (j.contains("matrix_basis")) {
    for (const auto& bm : j.at("matrix_basis")) {
      const size_t n = bm.size();
      Eigen::MatrixXcd M(n, n);
      for (size_t r = 0; r < n; ++r)
        for (size_t cc = 0; cc < n; ++cc) {
          const auto& cell = bm.at(r).at(cc);
          M(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cc)) =
              std::complex<double>(cell.at(0).get<double>(), cell.at(1).get<double>());
        }
      basis.push_back(std::move(M));
    }
  }
  const std::string preset = j.value("group_preset", std::string("custom"));
  return LieAlgebra(dim, std::move(c), std::move(ip), std::move(basis), preset);
}

}  // namespace relp
