// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_POLY_HPP
#define PAF_POLY_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace paf {

using cplx = std::complex<double>;

/// A univariate complex polynomial carried inside a fixed bounded-degree
/// space.  The degree bound is part of the value's identity: a coefficient
/// vector of length D+1 represents an element of the (D+1)-dimensional space
/// of polynomials of degree at most D.  Trailing zero coefficients encode
/// roots at infinity and are never trimmed.
class BoundedPoly {
 public:
  /// Zero polynomial in the degree-0 space.
  BoundedPoly() : coeffs_(1, cplx{0.0, 0.0}) {}

  /// Coefficients in ascending powers; coeffs[n] multiplies z^n.
  /// The degree bound is coeffs.size() - 1.  All entries must be finite.
  explicit BoundedPoly(std::vector<cplx> coeffs);

  static BoundedPoly zeros(int degree_bound);
  static BoundedPoly constant(cplx value) { return BoundedPoly({value}); }

  int bound() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<cplx>& coeffs() const { return coeffs_; }
  cplx operator[](std::size_t n) const { return coeffs_[n]; }

  /// Largest coefficient modulus (zero polynomial -> 0).
  double max_abs() const;
  bool is_zero() const { return max_abs() == 0.0; }

  /// Coefficient Euclidean norm.
  double norm() const;

  BoundedPoly& operator+=(const BoundedPoly& rhs);
  BoundedPoly& operator-=(const BoundedPoly& rhs);
  BoundedPoly& operator*=(cplx scalar);

 private:
  std::vector<cplx> coeffs_;
};

BoundedPoly operator+(BoundedPoly lhs, const BoundedPoly& rhs);
BoundedPoly operator-(BoundedPoly lhs, const BoundedPoly& rhs);
BoundedPoly operator*(BoundedPoly lhs, cplx scalar);
BoundedPoly operator*(cplx scalar, BoundedPoly rhs);

/// Product as a map C_{<=D1} x C_{<=D2} -> C_{<=D1+D2}; coefficients are the
/// full convolution of the inputs.
BoundedPoly mul(const BoundedPoly& a, const BoundedPoly& b);

/// Conjugate reversal: result[n] = conj(a[D-n]).  Reflects roots through the
/// unit circle and swaps roots at 0 with roots at infinity.
BoundedPoly conj_reverse(const BoundedPoly& a);

/// Banded Toeplitz multiplication matrix M of shape (D+L+1) x (L+1) with
/// M * b = coeffs(mul(a, b)) for every b of bound L.
Eigen::MatrixXcd mult_matrix(const BoundedPoly& a, int L);

/// Coefficient inner product sum x[n] * conj(y[n]); equals the coefficient of
/// mul(x, conj_reverse(y)) at z^{N-1}.  Throws std::invalid_argument when the
/// degree bounds differ.
cplx inner_product(const BoundedPoly& x, const BoundedPoly& y);

/// Horner evaluation.
cplx eval(const BoundedPoly& a, cplx z);

/// Elementwise comparison with relative tolerance on the max-norm of the
/// coefficient difference and an absolute floor.  Bounds must match exactly.
bool approx_equal(const BoundedPoly& a, const BoundedPoly& b,
                  double rel_tol = 1e-9, double abs_tol = 1e-12);

struct DivisionResult {
  BoundedPoly quotient;
  double residual;  // relative max-norm reconstruction error
};

/// Least-squares division of a by b inside the bounded-degree spaces: solves
/// mult_matrix(b, bound(a)-bound(b)) * q ~= coeffs(a).  The residual is
/// ||b*q - a||_inf / max|a|.  Throws std::invalid_argument when b is the zero
/// polynomial or bound(b) > bound(a).
DivisionResult ls_divide(const BoundedPoly& a, const BoundedPoly& b);

Eigen::VectorXcd to_eigen(const BoundedPoly& a);
BoundedPoly from_eigen(const Eigen::VectorXcd& v);

}  // namespace paf

#endif  // PAF_POLY_HPP
