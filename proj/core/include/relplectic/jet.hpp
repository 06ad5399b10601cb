#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace relp {

/// Second-order bidirectional jet: value plus first derivatives along two
/// independent directions and the mixed second derivative.  Enough to nest
/// two exterior derivatives exactly, with no finite differencing.
struct J2 {
  double v = 0, d1 = 0, d2 = 0, d12 = 0;

  J2() = default;
  J2(double value) : v(value) {}
  J2(double v_, double d1_, double d2_, double d12_) : v(v_), d1(d1_), d2(d2_), d12(d12_) {}

  J2 operator+(const J2& o) const { return {v + o.v, d1 + o.d1, d2 + o.d2, d12 + o.d12}; }
  J2 operator-(const J2& o) const { return {v - o.v, d1 - o.d1, d2 - o.d2, d12 - o.d12}; }
  J2 operator-() const { return {-v, -d1, -d2, -d12}; }
  J2 operator*(const J2& o) const {
    return {v * o.v, d1 * o.v + v * o.d1, d2 * o.v + v * o.d2,
            d12 * o.v + d1 * o.d2 + d2 * o.d1 + v * o.d12};
  }
  J2& operator+=(const J2& o) { *this = *this + o; return *this; }
  J2& operator-=(const J2& o) { *this = *this - o; return *this; }
  J2 operator*(double c) const { return {v * c, d1 * c, d2 * c, d12 * c}; }
};
inline J2 operator*(double c, const J2& x) { return x * c; }

/// Vector with J2 entries, stored as four plain vectors.
struct J2Vec {
  Eigen::VectorXd v, d1, d2, d12;

  J2Vec() = default;
  static J2Vec zero(int n) {
    J2Vec r;
    r.v = Eigen::VectorXd::Zero(n);
    r.d1 = Eigen::VectorXd::Zero(n);
    r.d2 = Eigen::VectorXd::Zero(n);
    r.d12 = Eigen::VectorXd::Zero(n);
    return r;
  }
  static J2Vec constant(const Eigen::VectorXd& x) {
    J2Vec r = zero(static_cast<int>(x.size()));
    r.v = x;
    return r;
  }
  int size() const { return static_cast<int>(v.size()); }
  J2 coeff(int i) const { return {v(i), d1(i), d2(i), d12(i)}; }
  void set_coeff(int i, const J2& x) {
    v(i) = x.v;
    d1(i) = x.d1;
    d2(i) = x.d2;
    d12(i) = x.d12;
  }
  J2Vec operator+(const J2Vec& o) const { return {v + o.v, d1 + o.d1, d2 + o.d2, d12 + o.d12}; }
  J2Vec operator-(const J2Vec& o) const { return {v - o.v, d1 - o.d1, d2 - o.d2, d12 - o.d12}; }
  J2Vec operator*(double c) const { return {v * c, d1 * c, d2 * c, d12 * c}; }
  J2Vec operator*(const J2& s) const {
    J2Vec r;
    r.v = v * s.v;
    r.d1 = d1 * s.v + v * s.d1;
    r.d2 = d2 * s.v + v * s.d2;
    r.d12 = d12 * s.v + d1 * s.d2 + d2 * s.d1 + v * s.d12;
    return r;
  }
  J2Vec(Eigen::VectorXd v_, Eigen::VectorXd d1_, Eigen::VectorXd d2_, Eigen::VectorXd d12_)
      : v(std::move(v_)), d1(std::move(d1_)), d2(std::move(d2_)), d12(std::move(d12_)) {}
};
inline J2Vec operator*(const J2& s, const J2Vec& x) { return x * s; }

/// Matrix with J2 entries, stored as four plain matrices.
struct J2Mat {
  Eigen::MatrixXd v, d1, d2, d12;

  J2Mat() = default;
  static J2Mat constant(const Eigen::MatrixXd& m) {
    J2Mat r;
    r.v = m;
    r.d1 = Eigen::MatrixXd::Zero(m.rows(), m.cols());
    r.d2 = r.d1;
    r.d12 = r.d1;
    return r;
  }
  static J2Mat zero(int rows, int cols) { return constant(Eigen::MatrixXd::Zero(rows, cols)); }

  J2Mat operator+(const J2Mat& o) const { return {v + o.v, d1 + o.d1, d2 + o.d2, d12 + o.d12}; }
  J2Mat operator-(const J2Mat& o) const { return {v - o.v, d1 - o.d1, d2 - o.d2, d12 - o.d12}; }
  J2Mat operator*(const J2Mat& o) const {
    J2Mat r;
    r.v = v * o.v;
    r.d1 = d1 * o.v + v * o.d1;
    r.d2 = d2 * o.v + v * o.d2;
    r.d12 = d12 * o.v + d1 * o.d2 + d2 * o.d1 + v * o.d12;
    return r;
  }
  J2Vec operator*(const J2Vec& x) const {
    J2Vec r;
    r.v = v * x.v;
    r.d1 = d1 * x.v + v * x.d1;
    r.d2 = d2 * x.v + v * x.d2;
    r.d12 = d12 * x.v + d1 * x.d2 + d2 * x.d1 + v * x.d12;
    return r;
  }
  J2Mat inverse() const {
    J2Mat r;
    r.v = v.inverse();
    r.d1 = -r.v * d1 * r.v;
    r.d2 = -r.v * d2 * r.v;
    r.d12 = -r.v * (d12 * r.v + d1 * r.d2 + d2 * r.d1);
    return r;
  }
  J2Mat(Eigen::MatrixXd v_, Eigen::MatrixXd d1_, Eigen::MatrixXd d2_, Eigen::MatrixXd d12_)
      : v(std::move(v_)), d1(std::move(d1_)), d2(std::move(d2_)), d12(std::move(d12_)) {}
};

/// Inner product x^T M y with a constant metric M.
inline J2 j2_inner(const Eigen::MatrixXd& metric, const J2Vec& x, const J2Vec& y) {
  auto pair = [&](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return a.dot(metric * b);
  };
  J2 r;
  r.v = pair(x.v, y.v);
  r.d1 = pair(x.d1, y.v) + pair(x.v, y.d1);
  r.d2 = pair(x.d2, y.v) + pair(x.v, y.d2);
  r.d12 = pair(x.d12, y.v) + pair(x.d1, y.d2) + pair(x.d2, y.d1) + pair(x.v, y.d12);
  return r;
}

}  // namespace relp
