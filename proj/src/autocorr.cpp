// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/autocorr.hpp"

#include <cmath>
#include <stdexcept>

#include "paf/parallel.hpp"

namespace paf {

SignalTuple::SignalTuple(std::vector<BoundedPoly> channels)
    : channels_(std::move(channels)) {
  if (channels_.empty()) {
    throw std::invalid_argument("SignalTuple: needs at least one channel");
  }
  for (const auto& c : channels_) {
    if (c.bound() != channels_.front().bound()) {
      throw std::invalid_argument("SignalTuple: channels must share one length");
    }
  }
}

SignalTuple SignalTuple::from_samples(const std::vector<std::vector<cplx>>& samples) {
  std::vector<BoundedPoly> channels;
  channels.reserve(samples.size());
  for (const auto& s : samples) channels.emplace_back(s);
  return SignalTuple(std::move(channels));
}

CorrMatrixPoly::CorrMatrixPoly(int signal_length,
                               std::vector<std::vector<BoundedPoly>> entries)
    : signal_length_(signal_length), entries_(std::move(entries)) {
  if (signal_length_ < 1) {
    throw std::invalid_argument("CorrMatrixPoly: signal length must be positive");
  }
  const std::size_t k = entries_.size();
  if (k == 0) throw std::invalid_argument("CorrMatrixPoly: empty matrix");
  const int expected_bound = 2 * (signal_length_ - 1);
  for (const auto& row : entries_) {
    if (row.size() != k) {
      throw std::invalid_argument("CorrMatrixPoly: matrix must be square");
    }
    for (const auto& e : row) {
      if (e.bound() != expected_bound) {
        throw std::invalid_argument(
            "CorrMatrixPoly: entries must have bound 2(N-1)");
      }
    }
  }
}

double CorrMatrixPoly::max_abs() const {
  double m = 0.0;
  for (const auto& row : entries_) {
    for (const auto& e : row) m = std::max(m, e.max_abs());
  }
  return m;
}

CorrMatrixPoly correlate(const SignalTuple& x) {
  const int k = x.channel_count();
  std::vector<BoundedPoly> reversed;
  reversed.reserve(k);
  for (int j = 0; j < k; ++j) reversed.push_back(conj_reverse(x.channel(j)));

  std::vector<std::vector<BoundedPoly>> entries(
      k, std::vector<BoundedPoly>(k, BoundedPoly()));
  detail::parallel_for(static_cast<std::size_t>(k) * k, [&](std::size_t idx) {
    const int i = static_cast<int>(idx) / k;
    const int j = static_cast<int>(idx) % k;
    entries[i][j] = mul(x.channel(i), reversed[j]);
  });
  return CorrMatrixPoly(x.length(), std::move(entries));
}

double residual(const CorrMatrixPoly& gamma, const SignalTuple& y) {
  if (gamma.channel_count() != y.channel_count() ||
      gamma.signal_length() != y.length()) {
    throw std::invalid_argument("residual: dimension mismatch");
  }
  const CorrMatrixPoly model = correlate(y);
  const double scale = std::max(gamma.max_abs(), 1e-300);
  double worst = 0.0;
  for (int i = 0; i < gamma.channel_count(); ++i) {
    for (int j = 0; j < gamma.channel_count(); ++j) {
      const auto& g = gamma.entry(i, j);
      const auto& m = model.entry(i, j);
      for (std::size_t n = 0; n < g.size(); ++n) {
        worst = std::max(worst, std::abs(g[n] - m[n]));
      }
    }
  }
  return worst / scale;
}

SignalTuple canonicalize_phase(const SignalTuple& x) {
  double scale = 0.0;
  for (const auto& c : x.channels()) scale = std::max(scale, c.max_abs());
  if (scale == 0.0) return x;
  const double thresh = 1e-9 * scale;
  for (const auto& c : x.channels()) {
    for (std::size_t n = 0; n < c.size(); ++n) {
      if (std::abs(c[n]) > thresh) {
        const cplx beta = std::conj(c[n]) / std::abs(c[n]);
        std::vector<BoundedPoly> out;
        out.reserve(x.channels().size());
        for (const auto& ch : x.channels()) out.push_back(ch * beta);
        return SignalTuple(std::move(out));
      }
    }
  }
  return x;
}

bool palindromic_check(const CorrMatrixPoly& gamma, double tol) {
  const double scale = std::max(gamma.max_abs(), 1e-300);
  const int k = gamma.channel_count();
  const int center = gamma.signal_length() - 1;
  for (int i = 0; i < k; ++i) {
    const cplx c = gamma.entry(i, i)[center];
    if (std::abs(c.imag()) > tol * scale) return false;
    if (c.real() < -tol * scale) return false;
    for (int j = 0; j < k; ++j) {
      const BoundedPoly mirrored = conj_reverse(gamma.entry(i, j));
      const auto& other = gamma.entry(j, i);
      for (std::size_t n = 0; n < mirrored.size(); ++n) {
        if (std::abs(mirrored[n] - other[n]) > tol * scale) return false;
      }
    }
  }
  return true;
}

}  // namespace paf
