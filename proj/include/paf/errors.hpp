// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_ERRORS_HPP
#define PAF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace paf {

/// Mathematical inconsistency in otherwise well-formed data (failed
/// palindromic symmetry, unpaired roots, non-positive spectral ratio, ...).
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Coprime-only machinery was handed a non-coprime matrix; callers should
/// switch to the enumeration path.
class NotCoprimeError : public MathError {
 public:
  explicit NotCoprimeError(const std::string& msg) : MathError(msg) {}
};

/// Iterative root refinement failed to reach the requested residual.
class ConvergenceError : public MathError {
 public:
  ConvergenceError(const std::string& msg, double residual)
      : MathError(msg + " (residual " + std::to_string(residual) + ")"),
        residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Combinatorial work would exceed the configured budget.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input document (bad JSON, wrong shape, missing field).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace paf

#endif  // PAF_ERRORS_HPP
