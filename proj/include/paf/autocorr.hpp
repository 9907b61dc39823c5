// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_AUTOCORR_HPP
#define PAF_AUTOCORR_HPP

#include <vector>

#include "paf/poly.hpp"

namespace paf {

/// K complex channels of common length N, identified with K polynomials in
/// C_{<=N-1}[z] (sample n is the coefficient of z^n).
class SignalTuple {
 public:
  /// Every channel polynomial must have the same degree bound N-1.
  explicit SignalTuple(std::vector<BoundedPoly> channels);
  static SignalTuple from_samples(const std::vector<std::vector<cplx>>& samples);

  int channel_count() const { return static_cast<int>(channels_.size()); }
  int length() const { return channels_.front().bound() + 1; }
  const BoundedPoly& channel(int k) const { return channels_[k]; }
  const std::vector<BoundedPoly>& channels() const { return channels_; }

 private:
  std::vector<BoundedPoly> channels_;
};

/// K x K grid of polynomials of bound 2(N-1).  Entry (i, j) holds
/// Gamma_ij(z) = X_i(z) * conj_reverse(X_j)(z); the coefficient at power n
/// is the correlation sample at lag n - (N-1).
class CorrMatrixPoly {
 public:
  CorrMatrixPoly(int signal_length, std::vector<std::vector<BoundedPoly>> entries);

  int channel_count() const { return static_cast<int>(entries_.size()); }
  int signal_length() const { return signal_length_; }
  const BoundedPoly& entry(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<BoundedPoly>>& entries() const { return entries_; }

  /// Largest coefficient modulus over all entries.
  double max_abs() const;

 private:
  int signal_length_;
  std::vector<std::vector<BoundedPoly>> entries_;
};

/// Forward model: the auto-correlation matrix polynomial of a signal tuple,
/// entry (i, j) = mul(X_i, conj_reverse(X_j)).
CorrMatrixPoly correlate(const SignalTuple& x);

/// Relative max-norm mismatch between gamma and the correlation matrix of y:
/// max_{i,j} ||gamma_ij - Y_i * conj_reverse(Y_j)||_inf / max|gamma|.
/// Throws std::invalid_argument when dimensions disagree.
double residual(const CorrMatrixPoly& gamma, const SignalTuple& y);

/// Structural validity of a candidate correlation matrix: entry (j, i) equals
/// the conjugate reversal of entry (i, j) and each diagonal entry's center
/// coefficient (power N-1) is real and nonnegative, all within tol relative
/// to the matrix scale.
bool palindromic_check(const CorrMatrixPoly& gamma, double tol = 1e-8);

/// Representative of the global-phase orbit {beta * x : |beta| = 1}: scales
/// the tuple by the unit constant making the first nonzero coefficient
/// (channel-major scan) real positive.
SignalTuple canonicalize_phase(const SignalTuple& x);

}  // namespace paf

#endif  // PAF_AUTOCORR_HPP
