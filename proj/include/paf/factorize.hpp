// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_FACTORIZE_HPP
#define PAF_FACTORIZE_HPP

#include <cstdint>
#include <vector>

#include "paf/autocorr.hpp"
#include "paf/gcd.hpp"
#include "paf/poly.hpp"
#include "paf/roots.hpp"

namespace paf {

struct FactorOptions {
  GcdOptions gcd{};
  /// Roots with ||root|-1| below this are snapped onto the unit circle.
  double tol_circle = 1e-6;
  /// Acceptance threshold for relative residuals (division consistency,
  /// reconstruction of gamma).
  double tol_residual = 1e-8;
};

/// One conjugate-reflected root pair of H = Q * conj_reverse(Q): the stored
/// representative has modulus > 1 (infinity counts as > 1) and its partner is
/// conj(representative)^{-1}; both carry the same multiplicity.
struct RootPair {
  ExtRoot representative;
  ExtRoot reflected;
  int multiplicity = 1;
};

struct CircleRoot {
  cplx root;             // unit modulus after snapping
  int multiplicity = 1;  // always even
};

/// Root structure of a gcd of a factorizable correlation matrix: off-circle
/// conjugate-reflected pairs plus unit-circle roots of even multiplicity.
struct RootPairStructure {
  std::vector<RootPair> offcircle_pairs;  // |rep| descending, inf first
  std::vector<CircleRoot> circle_roots;
  cplx leading{1.0, 0.0};

  /// prod (mu_i + 1) over the off-circle pairs.
  std::int64_t base_count() const;
  /// Total root count = 2*sum(mu) + sum(nu); equals the bound of H.
  int degree() const;
};

/// One factorization of gamma: the spectral-factor selection indices, the
/// factor S itself, the canonicalized signals, and their residual.
struct Solution {
  std::vector<int> index;  // l_i = multiplicity of representative i in S
  BoundedPoly spectral_factor;
  std::vector<ExtRoot> spectral_roots;  // roots of S with repetition
  SignalTuple signals;
  double residual = 0.0;
};

/// Common structure of all factorizations of one matrix plus a deterministic,
/// restartable indexed sequence of the solutions themselves.
class SolutionSet {
 public:
  SolutionSet(BoundedPoly h, RootPairStructure pairs, std::vector<BoundedPoly> quotients,
              CorrMatrixPoly gamma, FactorOptions opts);

  /// Spectrally normalized gcd of the entries (S * conj_reverse(S) = h()).
  const BoundedPoly& h() const { return h_; }
  const RootPairStructure& pairs() const { return pairs_; }
  const std::vector<BoundedPoly>& quotients() const { return quotients_; }
  std::int64_t base_count() const { return pairs_.base_count(); }

  /// Mixed-radix decoding of a linear index into (l_1, ..., l_P); the first
  /// pair varies slowest, so solutions come out in lexicographic index order.
  std::vector<int> decode_index(std::int64_t linear) const;
  Solution solution(std::int64_t linear) const;
  std::vector<Solution> all() const;

 private:
  BoundedPoly h_;
  RootPairStructure pairs_;
  std::vector<BoundedPoly> quotients_;
  CorrMatrixPoly gamma_;
  FactorOptions opts_;
};

/// gcd of one row of the matrix: A_j = gcd(Gamma_j1, ..., Gamma_jK).  Under
/// entrywise coprimeness this is proportional to the j-th signal itself.
/// Throws MathError when row j is identically zero.
BoundedPoly row_gcd(const CorrMatrixPoly& gamma, int j, const FactorOptions& opts = {});

/// Constructive recovery for the coprime case: Y_k = c_j * Gamma_kj / conj_reverse(A_j)
/// with c_j = ||A_j|| / sqrt(Gamma_jj at z^{N-1}), canonicalized in phase.
/// Throws NotCoprimeError when the entries share a nontrivial factor and
/// MathError("inconsistent correlation data") when a division residual
/// exceeds tolerance.
SignalTuple coprime_recover(const CorrMatrixPoly& gamma, int j,
                            const FactorOptions& opts = {});
/// Same with the reference row chosen as the diagonal entry of largest
/// center coefficient.
SignalTuple coprime_recover(const CorrMatrixPoly& gamma, const FactorOptions& opts = {});

/// gcd over all K*K entries, in the canonical (monic finite part) form.
/// Equals Q * conj_reverse(Q) up to a scalar when gamma is a correlation
/// matrix with channel gcd Q.  An identically zero matrix yields the zero
/// polynomial of bound 0.
BoundedPoly common_gcd(const CorrMatrixPoly& gamma, const GcdOptions& opts = {});

/// Splits the roots of h into conjugate-reflected off-circle pairs and
/// unit-circle roots of even multiplicity.  Throws
/// MathError("not a valid autocorrelation gcd") when an off-circle root has
/// no partner of equal multiplicity or a circle root has odd multiplicity.
RootPairStructure root_pairs(const BoundedPoly& h, const FactorOptions& opts = {});

/// True iff the factorization of gamma is essentially unique: the entry gcd
/// is constant or all of its roots lie on the unit circle.
bool is_unique(const CorrMatrixPoly& gamma, const FactorOptions& opts = {});

/// Full solution set: H, the quotients R_k, and every spectral-factor
/// selection of Theorem-style form S = lambda * prod (z-delta_i)^{l_i}
/// (z-conj(delta_i)^{-1})^{mu_i-l_i} * prod (z-eps_j)^{nu_j/2}.
SolutionSet enumerate_all(const CorrMatrixPoly& gamma, const FactorOptions& opts = {});

/// Number of essentially different factorizations, prod (mu_i + 1), without
/// materializing them.
std::int64_t count_solutions(const CorrMatrixPoly& gamma, const FactorOptions& opts = {});

/// Closed-form K=2 reconstruction from a chosen spectral-factor root
/// selection and the quotient roots.  Requires every supplied root to be
/// finite and nonzero (no shared 0/infinity roots) and the corner
/// correlation coefficients to be nonzero.  The global phase convention is
/// theta = 0 (leading scalar of the first channel real positive).
SignalTuple k2_explicit(const CorrMatrixPoly& gamma,
                        const std::vector<cplx>& spectral_roots,
                        const std::vector<cplx>& quotient_roots_1,
                        const std::vector<cplx>& quotient_roots_2,
                        const FactorOptions& opts = {});

}  // namespace paf

#endif  // PAF_FACTORIZE_HPP
