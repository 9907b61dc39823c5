// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "paf/errors.hpp"
#include "paf/parallel.hpp"

namespace paf {
namespace {

using std::abs;
using std::arg;
using std::conj;
using std::sqrt;

std::vector<BoundedPoly> flatten(const CorrMatrixPoly& gamma) {
  std::vector<BoundedPoly> out;
  out.reserve(static_cast<std::size_t>(gamma.channel_count()) * gamma.channel_count());
  for (const auto& row : gamma.entries()) {
    for (const auto& e : row) out.push_back(e);
  }
  return out;
}

int argmax_coeff(const BoundedPoly& p) {
  int best = 0;
  double best_abs = -1.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double a = abs(p[n]);
    if (a > best_abs) {
      best_abs = a;
      best = static_cast<int>(n);
    }
  }
  return best;
}

// Positive constant lambda with lambda^2 * s0 * conj_reverse(s0) = h, read off
// at h's largest coefficient.  Throws when the ratio is not real positive.
double spectral_scale(const BoundedPoly& h, const BoundedPoly& s0_times_rev) {
  const int at = argmax_coeff(h);
  const cplx den = s0_times_rev[at];
  if (abs(den) < 1e-300) {
    throw MathError("inconsistent spectral factor: degenerate coefficient ratio");
  }
  const cplx ratio = h[at] / den;
  if (abs(ratio.imag()) > 1e-9 * abs(ratio) || ratio.real() <= 0.0) {
    throw MathError("inconsistent spectral factor: lambda^2 ratio not real positive");
  }
  return sqrt(ratio.real());
}

}  // namespace

std::int64_t RootPairStructure::base_count() const {
  std::int64_t n = 1;
  for (const auto& p : offcircle_pairs) n *= (p.multiplicity + 1);
  return n;
}

int RootPairStructure::degree() const {
  int d = 0;
  for (const auto& p : offcircle_pairs) d += 2 * p.multiplicity;
  for (const auto& c : circle_roots) d += c.multiplicity;
  return d;
}

BoundedPoly row_gcd(const CorrMatrixPoly& gamma, int j, const FactorOptions& opts) {
  if (j < 0 || j >= gamma.channel_count()) {
    throw std::invalid_argument("row_gcd: row index out of range");
  }
  const auto& row = gamma.entries()[j];
  double row_scale = 0.0;
  for (const auto& e : row) row_scale = std::max(row_scale, e.max_abs());
  if (row_scale <= 1e-14 * gamma.max_abs() || row_scale == 0.0) {
    throw MathError("channel " + std::to_string(j) + " identically zero");
  }
  return gcd_many(row, opts.gcd).gcd;
}

BoundedPoly common_gcd(const CorrMatrixPoly& gamma, const GcdOptions& opts) {
  return gcd_many(flatten(gamma), opts).gcd;
}

SignalTuple coprime_recover(const CorrMatrixPoly& gamma, int j, const FactorOptions& opts) {
  const BoundedPoly h = common_gcd(gamma, opts.gcd);
  if (h.is_zero()) throw MathError("coprime_recover: gamma is identically zero");
  if (h.bound() != 0) {
    throw NotCoprimeError(
        "coprime_recover: entries share a nontrivial common factor; "
        "use enumerate_all");
  }

  const int n = gamma.signal_length();
  const BoundedPoly a_j = row_gcd(gamma, j, opts);
  if (a_j.bound() != n - 1) {
    throw MathError("inconsistent correlation data: row gcd bound " +
                    std::to_string(a_j.bound()) + ", expected " + std::to_string(n - 1));
  }
  const cplx center = gamma.entry(j, j)[n - 1];
  if (center.real() <= 1e-14 * gamma.max_abs()) {
    throw MathError("inconsistent correlation data: nonpositive channel energy");
  }
  const double c_j = a_j.norm() / sqrt(center.real());

  const BoundedPoly a_rev = conj_reverse(a_j);
  std::vector<BoundedPoly> channels;
  channels.reserve(gamma.channel_count());
  for (int k = 0; k < gamma.channel_count(); ++k) {
    DivisionResult div = ls_divide(gamma.entry(k, j), a_rev);
    if (div.residual > opts.tol_residual) {
      throw MathError("inconsistent correlation data: division residual " +
                      std::to_string(div.residual));
    }
    channels.push_back(div.quotient * cplx{c_j, 0.0});
  }
  SignalTuple y = canonicalize_phase(SignalTuple(std::move(channels)));
  const double res = residual(gamma, y);
  if (res > opts.tol_residual) {
    throw MathError("inconsistent correlation data: reconstruction residual " +
                    std::to_string(res));
  }
  return y;
}

SignalTuple coprime_recover(const CorrMatrixPoly& gamma, const FactorOptions& opts) {
  const int n = gamma.signal_length();
  int best = 0;
  double best_center = -1.0;
  for (int j = 0; j < gamma.channel_count(); ++j) {
    const double c = abs(gamma.entry(j, j)[n - 1]);
    if (c > best_center) {
      best_center = c;
      best = j;
    }
  }
  return coprime_recover(gamma, best, opts);
}

RootPairStructure root_pairs(const BoundedPoly& h, const FactorOptions& opts) {
  if (h.is_zero()) throw MathError("root_pairs: zero polynomial");
  RootPairStructure out;

  RootFactorization fact = find_roots(h, opts.gcd.roots);
  out.leading = fact.leading;

  int inf_mult = 0;
  int zero_mult = 0;
  std::vector<RootMultiplicity> outside;
  std::vector<RootMultiplicity> inside;
  for (const auto& r : fact.roots) {
    if (r.root.is_infinite()) {
      inf_mult = r.multiplicity;
      continue;
    }
    const cplx v = r.root.value();
    if (v == cplx{0.0, 0.0}) {
      zero_mult = r.multiplicity;
      continue;
    }
    const double m = abs(v);
    if (std::abs(m - 1.0) < opts.tol_circle) {
      if (r.multiplicity % 2 != 0) {
        throw MathError("not a valid autocorrelation gcd: unit-circle root of odd "
                        "multiplicity");
      }
      out.circle_roots.push_back({v / m, r.multiplicity});
      continue;
    }
    (m > 1.0 ? outside : inside).push_back(r);
  }

  if (inf_mult != zero_mult) {
    throw MathError("not a valid autocorrelation gcd: unpaired root at infinity");
  }
  if (inf_mult > 0) {
    out.offcircle_pairs.push_back(
        {ExtRoot::infinity(), ExtRoot(cplx{0.0, 0.0}), inf_mult});
  }

  std::vector<bool> used(inside.size(), false);
  for (const auto& o : outside) {
    const cplx expected = 1.0 / conj(o.root.value());
    double best = std::numeric_limits<double>::max();
    std::size_t best_i = 0;
    for (std::size_t i = 0; i < inside.size(); ++i) {
      if (used[i]) continue;
      const double d = abs(inside[i].root.value() - expected);
      if (d < best) {
        best = d;
        best_i = i;
      }
    }
    const double match_tol =
        std::max(opts.gcd.match_tol, 10 * opts.tol_circle) * (1.0 + abs(expected));
    if (best > match_tol) {
      throw MathError("not a valid autocorrelation gcd: unpaired off-circle root");
    }
    if (inside[best_i].multiplicity != o.multiplicity) {
      throw MathError("not a valid autocorrelation gcd: reflected root multiplicity "
                      "mismatch");
    }
    used[best_i] = true;
    out.offcircle_pairs.push_back({o.root, inside[best_i].root, o.multiplicity});
  }
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (!used[i]) {
      throw MathError("not a valid autocorrelation gcd: unpaired off-circle root");
    }
  }

  std::sort(out.offcircle_pairs.begin(), out.offcircle_pairs.end(),
            [](const RootPair& a, const RootPair& b) {
              if (a.representative.is_infinite() != b.representative.is_infinite()) {
                return a.representative.is_infinite();
              }
              if (a.representative.is_infinite()) return false;
              const double ma = abs(a.representative.value());
              const double mb = abs(b.representative.value());
              if (std::abs(ma - mb) > 1e-12 * (1.0 + ma + mb)) return ma > mb;
              return arg(a.representative.value()) < arg(b.representative.value());
            });
  std::sort(out.circle_roots.begin(), out.circle_roots.end(),
            [](const CircleRoot& a, const CircleRoot& b) {
              return arg(a.root) < arg(b.root);
            });
  return out;
}

bool is_unique(const CorrMatrixPoly& gamma, const FactorOptions& opts) {
  const BoundedPoly h = common_gcd(gamma, opts.gcd);
  if (h.is_zero()) throw MathError("is_unique: gamma is identically zero");
  if (h.bound() == 0) return true;
  const RootFactorization fact = find_roots(h, opts.gcd.roots);
  for (const auto& r : fact.roots) {
    if (r.root.is_infinite()) return false;
    if (std::abs(abs(r.root.value()) - 1.0) >= opts.tol_circle) return false;
  }
  return true;
}

SolutionSet::SolutionSet(BoundedPoly h, RootPairStructure pairs,
                         std::vector<BoundedPoly> quotients, CorrMatrixPoly gamma,
                         FactorOptions opts)
    : h_(std::move(h)),
      pairs_(std::move(pairs)),
      quotients_(std::move(quotients)),
      gamma_(std::move(gamma)),
      opts_(opts) {}

std::vector<int> SolutionSet::decode_index(std::int64_t linear) const {
  if (linear < 0 || linear >= base_count()) {
    throw std::out_of_range("SolutionSet: solution index out of range");
  }
  std::vector<int> idx(pairs_.offcircle_pairs.size(), 0);
  for (std::size_t i = pairs_.offcircle_pairs.size(); i-- > 0;) {
    const int radix = pairs_.offcircle_pairs[i].multiplicity + 1;
    idx[i] = static_cast<int>(linear % radix);
    linear /= radix;
  }
  return idx;
}

Solution SolutionSet::solution(std::int64_t linear) const {
  const std::vector<int> idx = decode_index(linear);

  RootFactorization sel;
  sel.leading = cplx{1.0, 0.0};
  for (std::size_t i = 0; i < pairs_.offcircle_pairs.size(); ++i) {
    const RootPair& p = pairs_.offcircle_pairs[i];
    const int l = idx[i];
    if (l > 0) sel.roots.push_back({p.representative, l});
    if (p.multiplicity - l > 0) sel.roots.push_back({p.reflected, p.multiplicity - l});
  }
  for (const auto& c : pairs_.circle_roots) {
    sel.roots.push_back({ExtRoot(c.root), c.multiplicity / 2});
  }
  int total = 0;
  for (const auto& r : sel.roots) total += r.multiplicity;
  sel.degree_bound = total;

  BoundedPoly s0 = from_roots(sel);
  const double lambda = spectral_scale(h_, mul(s0, conj_reverse(s0)));
  BoundedPoly s = s0 * cplx{lambda, 0.0};
  if (!approx_equal(mul(s, conj_reverse(s)), h_, opts_.tol_residual)) {
    throw MathError("inconsistent spectral factor: S * rev(S) does not match gcd");
  }

  std::vector<BoundedPoly> channels;
  channels.reserve(quotients_.size());
  for (const auto& r : quotients_) channels.push_back(mul(s, r));
  SignalTuple y = canonicalize_phase(SignalTuple(std::move(channels)));

  Solution out{idx, std::move(s), sel.expanded(), std::move(y), 0.0};
  out.residual = residual(gamma_, out.signals);
  if (out.residual > opts_.tol_residual) {
    throw MathError("enumerated solution fails residual check: " +
                    std::to_string(out.residual));
  }
  return out;
}

std::vector<Solution> SolutionSet::all() const {
  const std::int64_t count = base_count();
  std::vector<std::optional<Solution>> slots(static_cast<std::size_t>(count));
  detail::parallel_for(static_cast<std::size_t>(count), [&](std::size_t i) {
    slots[i] = solution(static_cast<std::int64_t>(i));
  });
  std::vector<Solution> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

SolutionSet enumerate_all(const CorrMatrixPoly& gamma, const FactorOptions& opts) {
  const int k = gamma.channel_count();
  const int n = gamma.signal_length();

  const BoundedPoly h0 = common_gcd(gamma, opts.gcd);
  if (h0.is_zero()) throw MathError("enumerate_all: gamma is identically zero");
  if (h0.bound() % 2 != 0) {
    throw MathError("not a valid autocorrelation gcd: odd degree bound");
  }
  const int d = h0.bound() / 2;
  if (d > n - 1) throw MathError("gcd/entry inconsistency: gcd degree too large");

  // Entrywise exact division G = Gamma / H.
  std::vector<std::vector<BoundedPoly>> g_raw(
      k, std::vector<BoundedPoly>(k, BoundedPoly()));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      DivisionResult div = ls_divide(gamma.entry(i, j), h0);
      if (div.residual > opts.tol_residual) {
        throw MathError("gcd/entry inconsistency: division residual " +
                        std::to_string(div.residual));
      }
      g_raw[i][j] = std::move(div.quotient);
    }
  }

  // The monic gcd normalization leaves a constant adrift between H and G.
  // Rotate it so G is a genuine correlation matrix (real positive diagonal
  // centers) and H absorbs the phase, keeping H * G = Gamma.
  const int n_g = (n - 1 - d) + 1;
  const int center_g = n_g - 1;
  int j_star = 0;
  double best = -1.0;
  for (int j = 0; j < k; ++j) {
    const double c = abs(g_raw[j][j][center_g]);
    if (c > best) {
      best = c;
      j_star = j;
    }
  }
  const cplx t = g_raw[j_star][j_star][center_g];
  if (abs(t) <= 1e-14 * gamma.max_abs()) {
    throw MathError("gcd/entry inconsistency: vanishing quotient diagonal");
  }
  const cplx u = t / abs(t);
  const BoundedPoly h_spec = h0 * u;
  for (auto& row : g_raw) {
    for (auto& e : row) e *= (1.0 / u);
  }

  const CorrMatrixPoly g(n_g, std::move(g_raw));
  const SignalTuple r = coprime_recover(g, j_star, opts);
  RootPairStructure pairs = root_pairs(h_spec, opts);

  return SolutionSet(h_spec, std::move(pairs), r.channels(), gamma, opts);
}

std::int64_t count_solutions(const CorrMatrixPoly& gamma, const FactorOptions& opts) {
  const BoundedPoly h = common_gcd(gamma, opts.gcd);
  if (h.is_zero()) throw MathError("count_solutions: gamma is identically zero");
  if (h.bound() == 0) return 1;
  return root_pairs(h, opts).base_count();
}

SignalTuple k2_explicit(const CorrMatrixPoly& gamma,
                        const std::vector<cplx>& spectral_roots,
                        const std::vector<cplx>& quotient_roots_1,
                        const std::vector<cplx>& quotient_roots_2,
                        const FactorOptions& opts) {
  if (gamma.channel_count() != 2) {
    throw std::invalid_argument("k2_explicit: requires a 2x2 matrix");
  }
  const int n = gamma.signal_length();
  const int d = static_cast<int>(spectral_roots.size());
  if (static_cast<int>(quotient_roots_1.size()) != n - 1 - d ||
      static_cast<int>(quotient_roots_2.size()) != n - 1 - d) {
    throw std::invalid_argument("k2_explicit: root counts must sum to N-1 per channel");
  }
  auto check_roots = [](const std::vector<cplx>& roots, const char* what) {
    for (const cplx& r : roots) {
      if (abs(r) < 1e-12) {
        throw MathError(std::string("k2_explicit: degenerate ") + what +
                        " root at 0 (shared 0/infinity roots are excluded)");
      }
    }
  };
  check_roots(spectral_roots, "spectral");
  check_roots(quotient_roots_1, "quotient");
  check_roots(quotient_roots_2, "quotient");

  const int top = 2 * (n - 1);
  const cplx g11 = gamma.entry(0, 0)[top];
  const cplx g22 = gamma.entry(1, 1)[top];
  const cplx g12 = gamma.entry(0, 1)[top];
  const double scale = gamma.max_abs();
  if (abs(g11) <= 1e-12 * scale || abs(g22) <= 1e-12 * scale) {
    throw MathError("k2_explicit: corner correlation coefficient vanishes "
                    "(x[0] or x[N-1] has a zero entry)");
  }

  double inv_beta = 1.0;
  double arg_beta = 0.0;
  for (const cplx& b : spectral_roots) {
    inv_beta /= abs(b);
    arg_beta += arg(b);
  }
  double inv_a1 = 1.0;
  for (const cplx& a : quotient_roots_1) inv_a1 /= abs(a);
  double inv_a2 = 1.0;
  double arg_a2 = 0.0;
  for (const cplx& a : quotient_roots_2) {
    inv_a2 /= abs(a);
    arg_a2 += arg(a);
  }

  const double lambda1 = sqrt(abs(g11) * inv_beta * inv_a1);
  const double mod2 = sqrt(abs(g22) * inv_beta * inv_a2);
  const double delta =
      std::numbers::pi * (n - 1) + arg(g12) + arg_beta + arg_a2;
  const cplx lambda2 = std::polar(mod2, -delta);

  auto build = [&](cplx leading, const std::vector<cplx>& quotient_roots) {
    RootFactorization f;
    f.leading = leading;
    for (const cplx& b : spectral_roots) f.roots.push_back({ExtRoot(b), 1});
    for (const cplx& a : quotient_roots) f.roots.push_back({ExtRoot(a), 1});
    f.degree_bound = n - 1;
    return from_roots(f);
  };
  SignalTuple x(std::vector<BoundedPoly>{build(cplx{lambda1, 0.0}, quotient_roots_1),
                                         build(lambda2, quotient_roots_2)});
  const double res = residual(gamma, x);
  if (res > opts.tol_residual) {
    throw MathError("k2_explicit: reconstruction residual " + std::to_string(res));
  }
  return x;
}

}  // namespace paf
