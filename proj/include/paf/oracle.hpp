// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_ORACLE_HPP
#define PAF_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "paf/autocorr.hpp"
#include "paf/poly.hpp"

namespace paf::oracle {

/// Deliberately naive reference implementations for cross-checking the
/// optimized factorization paths.  Exhaustive superset-then-filter logic
/// only; nothing here shares code with the enumeration machinery.

struct OracleReport {
  /// Number of degree-D root assignments that were tested.
  std::int64_t candidate_count = 0;
  /// Canonicalized, duplicate-free survivors in a deterministic order.
  std::vector<SignalTuple> accepted;
  /// Largest residual among the accepted tuples.
  double max_residual = 0.0;
};

struct BruteForceOptions {
  /// Cap on the number of root assignments before giving up.
  std::int64_t budget = 100000;
  double tol_root = 1e-6;
  double tol_residual = 1e-7;
};

/// Finds every factorization of gamma by exhausting all assignments of the
/// roots of the entry gcd H to a degree-D spectral factor S, keeping those
/// with S * conj_reverse(S) = H and a small residual against gamma.  The
/// assignment set is a strict superset of the valid selections, so nothing
/// can be missed.  Throws BudgetError past the combinatorial budget.
OracleReport brute_force_factorizations(const CorrMatrixPoly& gamma,
                                        const BruteForceOptions& opts = {});

/// Triple-loop evaluation of the correlation sums: nonnegative lags directly,
/// negative lags through gamma_ij[-n] = conj(gamma_ji[n]).
CorrMatrixPoly naive_correlate(const SignalTuple& x);

}  // namespace paf::oracle

#endif  // PAF_ORACLE_HPP
