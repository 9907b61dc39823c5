// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_ROOTS_HPP
#define PAF_ROOTS_HPP

#include <vector>

#include "paf/poly.hpp"

namespace paf {

/// A point of the extended complex plane C u {inf}.
class ExtRoot {
 public:
  ExtRoot() : value_{0.0, 0.0}, infinite_(false) {}
  explicit ExtRoot(cplx value) : value_(value), infinite_(false) {}

  static ExtRoot infinity() {
    ExtRoot r;
    r.infinite_ = true;
    return r;
  }

  bool is_infinite() const { return infinite_; }
  /// Finite value; only meaningful when !is_infinite().
  cplx value() const { return value_; }

 private:
  cplx value_;
  bool infinite_;
};

/// Reflection through the unit circle on the extended plane:
/// z -> conj(z)^{-1}, with 0 and infinity swapped.
ExtRoot riemann_reflection(const ExtRoot& z);

struct RootMultiplicity {
  ExtRoot root;
  int multiplicity = 1;
};

/// Factorization lambda * prod (z - alpha_i)^{mu_i} of a nonzero bounded
/// polynomial; infinity factors stand for zero leading coefficients.  The
/// multiplicities always sum to the degree bound.
struct RootFactorization {
  cplx leading{1.0, 0.0};
  std::vector<RootMultiplicity> roots;
  int degree_bound = 0;

  int multiplicity_at_infinity() const;
  int multiplicity_at_zero(double tol = 1e-9) const;
  /// Roots repeated per multiplicity, in stored order.
  std::vector<ExtRoot> expanded() const;
};

struct RootFindOptions {
  /// Roots closer than this are merged into one root with summed multiplicity.
  double cluster_tol = 1e-6;
  /// |a[k]| < lead_tol * max|a| declares a structural zero coefficient when
  /// counting roots at infinity and at zero.
  double lead_tol = 1e-10;
  /// Aberth-Ehrlich iteration cap and relative residual stop.
  int max_iterations = 200;
  double residual_stop = 1e-13;
  /// Accepted relative reconstruction error of the returned factorization.
  double validate_tol = 1e-8;
};

/// Full root factorization of a nonzero polynomial.  Roots at infinity come
/// from near-zero leading coefficients, roots at zero from near-zero trailing
/// coefficients; the remaining roots are found by simultaneous Aberth-Ehrlich
/// iteration, clustered into multiple roots, and refined by Newton steps on
/// the appropriate derivative.  Throws std::invalid_argument for the zero
/// polynomial and ConvergenceError when no consistent factorization within
/// validate_tol can be produced.
RootFactorization find_roots(const BoundedPoly& a, const RootFindOptions& opts = {});

/// Expansion of a RootFactorization back to coefficients; the result lives in
/// the space of bound = sum of multiplicities.
BoundedPoly from_roots(const RootFactorization& f);

/// Root-level image of conjugate reversal: every root is reflected through
/// the unit circle (0 and infinity swap) and the leading scalar picks up
/// conj(lambda) * prod(-conj(alpha)) over finite nonzero roots.
RootFactorization conj_reflect(const RootFactorization& f);

/// Helpers shared with the gcd layer.
namespace rootdetail {
/// Number of structurally zero leading coefficients of a (relative threshold).
int infinity_multiplicity(const BoundedPoly& a, double lead_tol);
/// Derivative coefficient vector (one shorter; constant -> [0]).
std::vector<cplx> derivative(const std::vector<cplx>& c);
}  // namespace rootdetail

}  // namespace paf

#endif  // PAF_ROOTS_HPP
