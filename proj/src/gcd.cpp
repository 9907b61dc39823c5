// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/gcd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include <Eigen/SVD>

namespace paf {
namespace {

using std::abs;

// Closest root of f to target among finite roots; nullopt when none is within
// match_tol * (1 + |target|).
std::optional<std::size_t> match_root(const RootFactorization& f, cplx target,
                                      double match_tol) {
  double best = std::numeric_limits<double>::max();
  std::optional<std::size_t> best_idx;
  for (std::size_t i = 0; i < f.roots.size(); ++i) {
    if (f.roots[i].root.is_infinite()) continue;
    const double dist = abs(f.roots[i].root.value() - target);
    if (dist < best) {
      best = dist;
      best_idx = i;
    }
  }
  if (best_idx && best <= match_tol * (1.0 + abs(target))) return best_idx;
  return std::nullopt;
}

}  // namespace

bool divides(const BoundedPoly& b, const BoundedPoly& a, double tol) {
  if (b.is_zero()) throw std::invalid_argument("divides: zero polynomial divisor");
  if (b.bound() > a.bound()) return false;
  if (a.is_zero()) return true;
  return ls_divide(a, b).residual <= tol;
}

GcdResult gcd_many(std::span<const BoundedPoly> polys, const GcdOptions& opts) {
  if (polys.empty()) throw std::invalid_argument("gcd_many: empty input list");

  std::vector<std::size_t> nonzero;
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (!polys[k].is_zero()) nonzero.push_back(k);
  }

  GcdResult result;
  if (nonzero.empty()) {
    // gcd{0,...,0} = 0 in C_{<=0}
    result.gcd = BoundedPoly::zeros(0);
    for (const auto& p : polys) result.cofactors.push_back(BoundedPoly::zeros(p.bound()));
    return result;
  }
  if (nonzero.size() == 1) {
    // gcd{A, 0} = A, returned verbatim.
    result.gcd = polys[nonzero[0]];
    for (std::size_t k = 0; k < polys.size(); ++k) {
      if (k == nonzero[0]) {
        result.cofactors.push_back(BoundedPoly::constant(cplx{1.0, 0.0}));
      } else {
        result.cofactors.push_back(
            BoundedPoly::zeros(std::max(0, polys[k].bound() - result.gcd.bound())));
      }
    }
    return result;
  }

  std::vector<RootFactorization> facts;
  facts.reserve(nonzero.size());
  for (std::size_t k : nonzero) facts.push_back(find_roots(polys[k], opts.roots));

  // Candidate roots come from the input of smallest bound.
  std::size_t base = 0;
  for (std::size_t i = 1; i < facts.size(); ++i) {
    if (facts[i].degree_bound < facts[base].degree_bound) base = i;
  }

  RootFactorization common;
  common.leading = cplx{1.0, 0.0};

  int inf_mult = facts[base].multiplicity_at_infinity();
  for (const auto& f : facts) {
    inf_mult = std::min(inf_mult, f.multiplicity_at_infinity());
  }
  if (inf_mult > 0) common.roots.push_back({ExtRoot::infinity(), inf_mult});

  for (const auto& cand : facts[base].roots) {
    if (cand.root.is_infinite()) continue;
    int mult = cand.multiplicity;
    cplx value = cand.root.value();
    bool everywhere = true;
    for (std::size_t i = 0; i < facts.size() && everywhere; ++i) {
      if (i == base) continue;
      const auto idx = match_root(facts[i], cand.root.value(), opts.match_tol);
      if (!idx) {
        everywhere = false;
        break;
      }
      mult = std::min(mult, facts[i].roots[*idx].multiplicity);
    }
    if (everywhere && mult > 0) common.roots.push_back({ExtRoot(value), mult});
  }

  int total = 0;
  for (const auto& r : common.roots) total += r.multiplicity;
  common.degree_bound = total;

  result.gcd = from_roots(common);
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].is_zero()) {
      result.cofactors.push_back(
          BoundedPoly::zeros(std::max(0, polys[k].bound() - result.gcd.bound())));
      continue;
    }
    DivisionResult div = ls_divide(polys[k], result.gcd);
    result.residual = std::max(result.residual, div.residual);
    result.cofactors.push_back(std::move(div.quotient));
  }
  return result;
}

GcdResult gcd_many(const std::vector<BoundedPoly>& polys, const GcdOptions& opts) {
  return gcd_many(std::span<const BoundedPoly>(polys.data(), polys.size()), opts);
}

bool sylvester_coprime(const BoundedPoly& x1, const BoundedPoly& x2, double tol_rank) {
  if (x1.bound() != x2.bound()) {
    throw std::invalid_argument("sylvester_coprime: bounds must match");
  }
  const int nm1 = x1.bound();  // N - 1
  if (nm1 == 0) return !(x1.is_zero() && x2.is_zero());

  const int L = nm1 - 1;
  Eigen::MatrixXcd s(2 * nm1, 2 * nm1);
  s << mult_matrix(x1, L), mult_matrix(x2, L);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s);
  const auto& sigma = svd.singularValues();
  const double smax = sigma(0);
  if (smax == 0.0) return false;
  return sigma(sigma.size() - 1) > tol_rank * smax;
}

}  // namespace paf
