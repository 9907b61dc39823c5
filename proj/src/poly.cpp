// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace paf {

BoundedPoly::BoundedPoly(std::vector<cplx> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("BoundedPoly: coefficient vector must be nonempty");
  }
  for (const cplx& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("BoundedPoly: coefficients must be finite");
    }
  }
}

BoundedPoly BoundedPoly::zeros(int degree_bound) {
  if (degree_bound < 0) {
    throw std::invalid_argument("BoundedPoly: negative degree bound");
  }
  return BoundedPoly(std::vector<cplx>(degree_bound + 1, cplx{0.0, 0.0}));
}

double BoundedPoly::max_abs() const {
  double m = 0.0;
  for (const cplx& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

double BoundedPoly::norm() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

BoundedPoly& BoundedPoly::operator+=(const BoundedPoly& rhs) {
  if (rhs.bound() != bound()) {
    throw std::invalid_argument("BoundedPoly: addition requires matching bounds");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
  return *this;
}

BoundedPoly& BoundedPoly::operator-=(const BoundedPoly& rhs) {
  if (rhs.bound() != bound()) {
    throw std::invalid_argument("BoundedPoly: subtraction requires matching bounds");
  }
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
  return *this;
}

BoundedPoly& BoundedPoly::operator*=(cplx scalar) {
  for (cplx& c : coeffs_) c *= scalar;
  return *this;
}

BoundedPoly operator+(BoundedPoly lhs, const BoundedPoly& rhs) { return lhs += rhs; }
BoundedPoly operator-(BoundedPoly lhs, const BoundedPoly& rhs) { return lhs -= rhs; }
BoundedPoly operator*(BoundedPoly lhs, cplx scalar) { return lhs *= scalar; }
BoundedPoly operator*(cplx scalar, BoundedPoly rhs) { return rhs *= scalar; }

BoundedPoly mul(const BoundedPoly& a, const BoundedPoly& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == cplx{0.0, 0.0}) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return BoundedPoly(std::move(out));
}

BoundedPoly conj_reverse(const BoundedPoly& a) {
  const std::size_t n = a.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = std::conj(a[n - 1 - k]);
  return BoundedPoly(std::move(out));
}

Eigen::MatrixXcd mult_matrix(const BoundedPoly& a, int L) {
  if (L < 0) throw std::invalid_argument("mult_matrix: L must be nonnegative");
  const int D = a.bound();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(D + L + 1, L + 1);
  for (int j = 0; j <= L; ++j) {
    for (int i = 0; i <= D; ++i) m(i + j, j) = a[i];
  }
  return m;
}

cplx inner_product(const BoundedPoly& x, const BoundedPoly& y) {
  if (x.bound() != y.bound()) {
    throw std::invalid_argument("inner_product: incompatible polynomial spaces");
  }
  cplx s{0.0, 0.0};
  for (std::size_t n = 0; n < x.size(); ++n) s += x[n] * std::conj(y[n]);
  return s;
}

cplx eval(const BoundedPoly& a, cplx z) {
  cplx acc = a[a.size() - 1];
  for (std::size_t n = a.size() - 1; n-- > 0;) acc = acc * z + a[n];
  return acc;
}

bool approx_equal(const BoundedPoly& a, const BoundedPoly& b, double rel_tol,
                  double abs_tol) {
  if (a.bound() != b.bound()) return false;
  double diff = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) diff = std::max(diff, std::abs(a[n] - b[n]));
  const double scale = std::max(a.max_abs(), b.max_abs());
  return diff <= std::max(rel_tol * scale, abs_tol);
}

DivisionResult ls_divide(const BoundedPoly& a, const BoundedPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("ls_divide: division by zero polynomial");
  if (b.bound() > a.bound()) {
    throw std::invalid_argument("ls_divide: divisor bound exceeds dividend bound");
  }
  const int L = a.bound() - b.bound();
  const Eigen::MatrixXcd m = mult_matrix(b, L);
  const Eigen::VectorXcd rhs = to_eigen(a);
  const Eigen::VectorXcd q = m.colPivHouseholderQr().solve(rhs);
  const double err = (m * q - rhs).lpNorm<Eigen::Infinity>();
  const double scale = std::max(a.max_abs(), 1e-300);
  return DivisionResult{from_eigen(q), err / scale};
}

Eigen::VectorXcd to_eigen(const BoundedPoly& a) {
  Eigen::VectorXcd v(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) v(static_cast<Eigen::Index>(n)) = a[n];
  return v;
}

BoundedPoly from_eigen(const Eigen::VectorXcd& v) {
  std::vector<cplx> c(v.data(), v.data() + v.size());
  return BoundedPoly(std::move(c));
}

}  // namespace paf
