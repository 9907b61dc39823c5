// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_GCD_HPP
#define PAF_GCD_HPP

#include <span>
#include <vector>

#include "paf/poly.hpp"
#include "paf/roots.hpp"

namespace paf {

struct GcdResult {
  BoundedPoly gcd;
  /// Quotients: mul(gcd, cofactors[k]) reconstructs input k.
  std::vector<BoundedPoly> cofactors;
  /// Max relative reconstruction error over the nonzero inputs.
  double residual = 0.0;
};

struct GcdOptions {
  RootFindOptions roots{};
  /// Roots of different inputs match when within match_tol * (1 + |root|).
  double match_tol = 1e-6;
};

/// Bounded-degree divisibility test: true iff some c in C_{<=Da-Db} gives
/// a = mul(b, c) within tol (relative least-squares residual).  A divisor
/// must carry at most as many roots at infinity as the dividend, which the
/// bound bookkeeping enforces automatically.  Throws for b = 0.
bool divides(const BoundedPoly& b, const BoundedPoly& a, double tol = 1e-8);

/// Greatest common divisor in the bounded-degree sense.  The root multisets
/// of all nonzero inputs (roots at infinity included) are intersected with
/// tolerance, taking the minimum multiplicity per root.  The returned gcd has
/// a monic finite part with an explicit (z - inf)^d prefix, except that a
/// single nonzero input is returned unchanged (gcd{A, 0} = A) and the all-zero
/// case yields the zero polynomial of bound 0.  Throws for an empty list.
GcdResult gcd_many(std::span<const BoundedPoly> polys, const GcdOptions& opts = {});
GcdResult gcd_many(const std::vector<BoundedPoly>& polys, const GcdOptions& opts = {});

/// Sylvester-matrix coprimeness test for two polynomials of equal bound N-1:
/// forms [mult_matrix(x1, N-2) | mult_matrix(x2, N-2)] of size
/// (2N-2) x (2N-2) and tests sigma_min > tol_rank * sigma_max.  A shared root
/// at infinity (both leading coefficients zero) makes the top row vanish, so
/// the construction covers the extended notion of coprimeness.  For bound 0
/// the pair is coprime unless both constants are zero.
bool sylvester_coprime(const BoundedPoly& x1, const BoundedPoly& x2,
                       double tol_rank = 1e-8);

}  // namespace paf

#endif  // PAF_GCD_HPP
