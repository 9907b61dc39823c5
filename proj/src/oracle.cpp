// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "paf/errors.hpp"
#include "paf/gcd.hpp"
#include "paf/roots.hpp"

namespace paf::oracle {
namespace {

using std::abs;
using std::conj;

bool tuples_close(const SignalTuple& a, const SignalTuple& b, double tol) {
  if (a.channel_count() != b.channel_count() || a.length() != b.length()) return false;
  double scale = 0.0;
  for (const auto& c : a.channels()) scale = std::max(scale, c.max_abs());
  for (int k = 0; k < a.channel_count(); ++k) {
    for (std::size_t n = 0; n < a.channel(k).size(); ++n) {
      if (abs(a.channel(k)[n] - b.channel(k)[n]) > tol * std::max(scale, 1.0)) {
        return false;
      }
    }
  }
  return true;
}

// Deterministic order for the accepted list: lexicographic on the
// concatenated coefficients by (re, im).
bool tuple_less(const SignalTuple& a, const SignalTuple& b) {
  for (int k = 0; k < a.channel_count(); ++k) {
    for (std::size_t n = 0; n < a.channel(k).size(); ++n) {
      const cplx x = a.channel(k)[n], y = b.channel(k)[n];
      if (x.real() != y.real()) return x.real() < y.real();
      if (x.imag() != y.imag()) return x.imag() < y.imag();
    }
  }
  return false;
}

}  // namespace

CorrMatrixPoly naive_correlate(const SignalTuple& x) {
  const int k = x.channel_count();
  const int n = x.length();
  // gamma_ij[lag] for lag in [0, n-1]
  auto corr_at = [&](int i, int j, int lag) {
    cplx s{0.0, 0.0};
    for (int m = 0; m + lag <= n - 1; ++m) {
      s += x.channel(i)[m + lag] * conj(x.channel(j)[m]);
    }
    return s;
  };
  std::vector<std::vector<BoundedPoly>> entries(
      k, std::vector<BoundedPoly>(k, BoundedPoly()));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<cplx> coeffs(2 * n - 1, cplx{0.0, 0.0});
      for (int lag = 0; lag <= n - 1; ++lag) {
        coeffs[lag + n - 1] = corr_at(i, j, lag);          // power = lag + N - 1
      }
      for (int lag = 1; lag <= n - 1; ++lag) {
        coeffs[n - 1 - lag] = conj(corr_at(j, i, lag));    // gamma_ij[-lag]
      }
      entries[i][j] = BoundedPoly(std::move(coeffs));
    }
  }
  return CorrMatrixPoly(n, std::move(entries));
}

OracleReport brute_force_factorizations(const CorrMatrixPoly& gamma,
                                        const BruteForceOptions& opts) {
  const int k = gamma.channel_count();
  const int n = gamma.signal_length();

  GcdOptions gcd_opts;
  gcd_opts.match_tol = opts.tol_root;
  gcd_opts.roots.cluster_tol = opts.tol_root;

  const GcdResult hres = gcd_many(
      std::vector<BoundedPoly>([&] {
        std::vector<BoundedPoly> v;
        for (const auto& row : gamma.entries())
          for (const auto& e : row) v.push_back(e);
        return v;
      }()),
      gcd_opts);
  const BoundedPoly& h0 = hres.gcd;
  if (h0.is_zero()) throw std::invalid_argument("oracle: gamma is identically zero");
  if (h0.bound() % 2 != 0) {
    return OracleReport{};  // no valid spectral factor can exist
  }
  const int d = h0.bound() / 2;

  // Entrywise quotient matrix, rotated so its diagonal centers are real
  // positive; h_spec * g = gamma.
  const int n_g = n - d;
  const int center_g = n_g - 1;
  std::vector<std::vector<BoundedPoly>> g_entries(
      k, std::vector<BoundedPoly>(k, BoundedPoly()));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      g_entries[i][j] = ls_divide(gamma.entry(i, j), h0).quotient;
    }
  }
  int j_star = 0;
  double best_center = -1.0;
  for (int j = 0; j < k; ++j) {
    const double c = abs(g_entries[j][j][center_g]);
    if (c > best_center) {
      best_center = c;
      j_star = j;
    }
  }
  const cplx t = g_entries[j_star][j_star][center_g];
  if (abs(t) == 0.0) throw std::invalid_argument("oracle: vanishing quotient diagonal");
  const cplx u = t / abs(t);
  const BoundedPoly h = h0 * u;
  for (auto& row : g_entries) {
    for (auto& e : row) e *= (1.0 / u);
  }

  // Naive quotient recovery on the coprime quotient matrix: row gcd, then
  // entrywise division (the constructive recovery written out by hand).
  const BoundedPoly a_j = gcd_many(g_entries[j_star], gcd_opts).gcd;
  const cplx center = g_entries[j_star][j_star][center_g];
  const double c_j = a_j.norm() / std::sqrt(std::max(center.real(), 1e-300));
  const BoundedPoly a_rev = conj_reverse(a_j);
  std::vector<BoundedPoly> quotients;
  quotients.reserve(k);
  for (int i = 0; i < k; ++i) {
    quotients.push_back(ls_divide(g_entries[i][j_star], a_rev).quotient *
                        cplx{c_j, 0.0});
  }

  // Every assignment of the distinct roots of H (0 <= count <= multiplicity)
  // is a candidate; those of total multiplicity D form the superset of
  // spectral factors to filter.
  const RootFactorization hroots = find_roots(h, gcd_opts.roots);
  const std::size_t m = hroots.roots.size();
  std::int64_t combos = 1;
  for (const auto& r : hroots.roots) {
    combos *= (r.multiplicity + 1);
    if (combos > opts.budget) {
      throw BudgetError("oracle: root assignment count exceeds budget");
    }
  }

  OracleReport report;
  std::vector<int> counts(m, 0);
  for (std::int64_t code = 0; code < combos; ++code) {
    std::int64_t rest = code;
    int total = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const int radix = hroots.roots[i].multiplicity + 1;
      counts[i] = static_cast<int>(rest % radix);
      rest /= radix;
      total += counts[i];
    }
    if (total != d) continue;
    ++report.candidate_count;

    RootFactorization sel;
    sel.leading = cplx{1.0, 0.0};
    sel.degree_bound = d;
    for (std::size_t i = 0; i < m; ++i) {
      if (counts[i] > 0) sel.roots.push_back({hroots.roots[i].root, counts[i]});
    }
    const BoundedPoly s0 = from_roots(sel);
    const BoundedPoly prod0 = mul(s0, conj_reverse(s0));

    // lambda^2 from the largest coefficient of H; reject assignments whose
    // product cannot be rotated onto H by a positive constant.
    int at = 0;
    double top = -1.0;
    for (std::size_t idx = 0; idx < h.size(); ++idx) {
      if (abs(h[idx]) > top) {
        top = abs(h[idx]);
        at = static_cast<int>(idx);
      }
    }
    if (abs(prod0[at]) < 1e-300) continue;
    const cplx ratio = h[at] / prod0[at];
    if (ratio.real() <= 0.0 || abs(ratio.imag()) > 1e-6 * abs(ratio)) continue;
    const BoundedPoly s = s0 * cplx{std::sqrt(ratio.real()), 0.0};
    if (!approx_equal(mul(s, conj_reverse(s)), h, opts.tol_residual)) continue;

    std::vector<BoundedPoly> channels;
    channels.reserve(k);
    for (const auto& q : quotients) channels.push_back(mul(s, q));
    SignalTuple y = canonicalize_phase(SignalTuple(std::move(channels)));
    const double res = residual(gamma, y);
    if (res > opts.tol_residual) continue;

    bool duplicate = false;
    for (const auto& seen : report.accepted) {
      if (tuples_close(seen, y, opts.tol_residual)) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) {
      report.max_residual = std::max(report.max_residual, res);
      report.accepted.push_back(std::move(y));
    }
  }
  std::sort(report.accepted.begin(), report.accepted.end(), tuple_less);
  return report;
}

}  // namespace paf::oracle
