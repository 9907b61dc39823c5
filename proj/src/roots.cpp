// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "paf/errors.hpp"

namespace paf {
namespace {

using std::abs;
using std::conj;

struct Stripped {
  std::vector<cplx> coeffs;  // between first and last structural nonzero
  int inf_mult = 0;
  int zero_mult = 0;
};

Stripped strip_structural_zeros(const BoundedPoly& a, double lead_tol) {
  const double scale = a.max_abs();
  const double thresh = lead_tol * scale;
  int hi = a.bound();
  while (hi > 0 && abs(a[hi]) < thresh) --hi;
  int lo = 0;
  while (lo < hi && abs(a[lo]) < thresh) ++lo;
  Stripped s;
  s.inf_mult = a.bound() - hi;
  s.zero_mult = lo;
  s.coeffs.assign(a.coeffs().begin() + lo, a.coeffs().begin() + hi + 1);
  return s;
}

void horner2(const std::vector<cplx>& c, cplx z, cplx& p, cplx& dp) {
  p = c.back();
  dp = cplx{0.0, 0.0};
  for (std::size_t n = c.size() - 1; n-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[n];
  }
}

// Fujiwara upper bound on root moduli of a monic-normalizable polynomial.
double root_radius(const std::vector<cplx>& c) {
  const int d = static_cast<int>(c.size()) - 1;
  const cplx lead = c.back();
  double r = 0.0;
  for (int k = 1; k <= d; ++k) {
    const double term = std::pow(abs(c[d - k] / lead), 1.0 / k);
    r = std::max(r, term);
  }
  return 2.0 * std::max(r, 0.5);
}

// Simultaneous Aberth-Ehrlich iteration on a deflated polynomial with nonzero
// first and last coefficients.  Returns approximations for all deg(c) roots.
std::vector<cplx> aberth(const std::vector<cplx>& c, const RootFindOptions& opts) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d == 0) return {};
  if (d == 1) return {-c[0] / c[1]};

  const double radius = root_radius(c);
  std::vector<cplx> z(d);
  for (int i = 0; i < d; ++i) {
    // Perturbed circle; the irrational angular offset breaks conjugate
    // symmetry that would otherwise stall the iteration on real inputs.
    const double angle =
        2.0 * std::numbers::pi * (i + 0.25) / d + 0.5236 + 1e-3 * i;
    z[i] = radius * cplx{std::cos(angle), std::sin(angle)};
  }

  const double coeff_scale =
      std::accumulate(c.begin(), c.end(), 0.0,
                      [](double m, cplx v) { return std::max(m, abs(v)); });

  int stagnant = 0;
  for (int iter = 0; iter < opts.max_iterations; ++iter) {
    double max_step = 0.0;
    double worst_resid = 0.0;
    for (int i = 0; i < d; ++i) {
      cplx p, dp;
      horner2(c, z[i], p, dp);
      // Residual relative to the coefficient scale blown up to |z|^d, so a
      // root of large modulus is not penalized for the polynomial's growth.
      const double scale_at =
          coeff_scale * std::max(1.0, std::pow(abs(z[i]), d));
      worst_resid = std::max(worst_resid, abs(p) / std::max(scale_at, 1e-300));
      if (abs(p) == 0.0) continue;
      cplx newton = (dp == cplx{0.0, 0.0}) ? cplx{1e-12, 0.0} : p / dp;
      cplx repel{0.0, 0.0};
      for (int j = 0; j < d; ++j) {
        if (j == i) continue;
        cplx diff = z[i] - z[j];
        if (abs(diff) < 1e-300) diff = cplx{1e-300, 0.0};
        repel += 1.0 / diff;
      }
      const cplx denom = 1.0 - newton * repel;
      cplx w = (abs(denom) < 1e-300) ? newton : newton / denom;
      z[i] -= w;
      max_step = std::max(max_step, abs(w));
    }
    if (worst_resid <= opts.residual_stop) return z;
    if (max_step <= 1e-15 * (1.0 + radius)) {
      if (++stagnant >= 2) return z;  // converged as far as fp allows
    } else {
      stagnant = 0;
    }
  }
  // The clustering/validation stage decides whether the approximations are
  // usable; the reconstruction check reports a residual if they are not.
  return z;
}

// Greedy single-linkage clustering of root approximations.
std::vector<std::vector<cplx>> cluster_points(const std::vector<cplx>& pts, double tol) {
  const int n = static_cast<int>(pts.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (abs(pts[i] - pts[j]) <= tol) parent[find(i)] = find(j);
    }
  }
  std::vector<std::vector<cplx>> groups;
  std::vector<int> group_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (group_of[r] < 0) {
      group_of[r] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    groups[group_of[r]].push_back(pts[i]);
  }
  return groups;
}

// Newton refinement of an m-fold root: for multiplicity m the (m-1)-th
// derivative has a simple root there, so plain Newton converges quadratically.
cplx refine_root(const std::vector<cplx>& c, cplx start, int multiplicity,
                 double trust_radius) {
  std::vector<cplx> q = c;
  for (int k = 1; k < multiplicity; ++k) q = rootdetail::derivative(q);
  if (q.size() < 2) return start;
  cplx z = start;
  for (int iter = 0; iter < 40; ++iter) {
    cplx p, dp;
    horner2(q, z, p, dp);
    if (abs(dp) < 1e-300) break;
    const cplx step = p / dp;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    if (abs(step) > trust_radius) break;  // walked out of the cluster
    z -= step;
    if (abs(step) <= 1e-15 * (1.0 + abs(z))) break;
  }
  if (abs(z - start) > trust_radius) return start;
  return z;
}

void sort_roots(std::vector<RootMultiplicity>& roots) {
  std::sort(roots.begin(), roots.end(), [](const RootMultiplicity& a,
                                           const RootMultiplicity& b) {
    if (a.root.is_infinite() != b.root.is_infinite()) return a.root.is_infinite();
    if (a.root.is_infinite()) return false;
    const double ma = abs(a.root.value()), mb = abs(b.root.value());
    if (std::abs(ma - mb) > 1e-14 * (1.0 + ma + mb)) return ma > mb;
    return std::arg(a.root.value()) < std::arg(b.root.value());
  });
}

RootFactorization assemble(const Stripped& s, const std::vector<std::vector<cplx>>& groups,
                           int degree_bound) {
  RootFactorization f;
  f.degree_bound = degree_bound;
  f.leading = s.coeffs.back();
  if (s.inf_mult > 0) {
    f.roots.push_back({ExtRoot::infinity(), s.inf_mult});
  }
  if (s.zero_mult > 0) {
    f.roots.push_back({ExtRoot(cplx{0.0, 0.0}), s.zero_mult});
  }
  const double cluster_scale = 1.0;
  for (const auto& g : groups) {
    cplx centroid{0.0, 0.0};
    for (cplx p : g) centroid += p;
    centroid /= static_cast<double>(g.size());
    double spread = 0.0;
    for (cplx p : g) spread = std::max(spread, abs(p - centroid));
    const double trust = std::max(10.0 * spread, 1e-6 * (1.0 + abs(centroid)));
    const cplx refined =
        refine_root(s.coeffs, centroid, static_cast<int>(g.size()), trust * cluster_scale);
    f.roots.push_back({ExtRoot(refined), static_cast<int>(g.size())});
  }
  sort_roots(f.roots);
  return f;
}

double reconstruction_error(const RootFactorization& f, const BoundedPoly& a) {
  const BoundedPoly rebuilt = from_roots(f);
  if (rebuilt.bound() != a.bound()) return std::numeric_limits<double>::max();
  double diff = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    diff = std::max(diff, abs(rebuilt[n] - a[n]));
  }
  return diff / std::max(a.max_abs(), 1e-300);
}

}  // namespace

namespace rootdetail {

int infinity_multiplicity(const BoundedPoly& a, double lead_tol) {
  if (a.is_zero()) return 0;
  return strip_structural_zeros(a, lead_tol).inf_mult;
}

std::vector<cplx> derivative(const std::vector<cplx>& c) {
  if (c.size() <= 1) return {cplx{0.0, 0.0}};
  std::vector<cplx> d(c.size() - 1);
  for (std::size_t k = 0; k + 1 < c.size(); ++k) {
    d[k] = c[k + 1] * static_cast<double>(k + 1);
  }
  return d;
}

}  // namespace rootdetail

ExtRoot riemann_reflection(const ExtRoot& z) {
  if (z.is_infinite()) return ExtRoot(cplx{0.0, 0.0});
  if (z.value() == cplx{0.0, 0.0}) return ExtRoot::infinity();
  return ExtRoot(1.0 / conj(z.value()));
}

int RootFactorization::multiplicity_at_infinity() const {
  for (const auto& r : roots) {
    if (r.root.is_infinite()) return r.multiplicity;
  }
  return 0;
}

int RootFactorization::multiplicity_at_zero(double tol) const {
  for (const auto& r : roots) {
    if (!r.root.is_infinite() && abs(r.root.value()) <= tol) return r.multiplicity;
  }
  return 0;
}

std::vector<ExtRoot> RootFactorization::expanded() const {
  std::vector<ExtRoot> out;
  for (const auto& r : roots) {
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.root);
  }
  return out;
}

RootFactorization find_roots(const BoundedPoly& a, const RootFindOptions& opts) {
  if (a.is_zero()) {
    throw std::invalid_argument("find_roots: no root factorization of 0");
  }
  const Stripped s = strip_structural_zeros(a, opts.lead_tol);
  const int inner_degree = static_cast<int>(s.coeffs.size()) - 1;

  if (inner_degree == 0) {
    RootFactorization f = assemble(s, {}, a.bound());
    return f;
  }

  const std::vector<cplx> approx = aberth(s.coeffs, opts);

  // Clustering tolerance ladder: start at the configured tolerance and widen
  // only while the reconstructed polynomial fails to match the input.  An
  // m-fold root is recovered by Aberth as a cluster of diameter ~eps^{1/m},
  // which can exceed the base tolerance for m >= 3.
  RootFactorization best;
  double best_err = std::numeric_limits<double>::max();
  for (double tau = opts.cluster_tol; tau <= 2e-3; tau *= 10.0) {
    const auto groups = cluster_points(approx, tau);
    RootFactorization f = assemble(s, groups, a.bound());
    const double err = reconstruction_error(f, a);
    if (err < best_err) {
      best_err = err;
      best = f;
    }
    if (err <= opts.validate_tol) return f;
  }
  if (best_err <= opts.validate_tol) return best;
  throw ConvergenceError("find_roots: root factorization did not converge", best_err);
}

BoundedPoly from_roots(const RootFactorization& f) {
  std::vector<cplx> acc{f.leading};
  int inf_mult = 0;
  for (const auto& r : f.roots) {
    if (r.multiplicity <= 0) {
      throw std::invalid_argument("from_roots: multiplicities must be positive");
    }
    if (r.root.is_infinite()) {
      inf_mult += r.multiplicity;
      continue;
    }
    for (int k = 0; k < r.multiplicity; ++k) {
      // multiply by (z - alpha)
      std::vector<cplx> next(acc.size() + 1, cplx{0.0, 0.0});
      for (std::size_t n = 0; n < acc.size(); ++n) {
        next[n] -= r.root.value() * acc[n];
        next[n + 1] += acc[n];
      }
      acc = std::move(next);
    }
  }
  acc.insert(acc.end(), inf_mult, cplx{0.0, 0.0});
  return BoundedPoly(std::move(acc));
}

RootFactorization conj_reflect(const RootFactorization& f) {
  RootFactorization out;
  out.degree_bound = f.degree_bound;
  cplx lead = conj(f.leading);
  for (const auto& r : f.roots) {
    out.roots.push_back({riemann_reflection(r.root), r.multiplicity});
    // Finite nonzero roots contribute (-conj(alpha))^mu to the new leading
    // scalar; 0 <-> inf factor swaps contribute 1.
    if (!r.root.is_infinite() && r.root.value() != cplx{0.0, 0.0}) {
      for (int k = 0; k < r.multiplicity; ++k) lead *= -conj(r.root.value());
    }
  }
  out.leading = lead;
  sort_roots(out.roots);
  return out;
}

}  // namespace paf
