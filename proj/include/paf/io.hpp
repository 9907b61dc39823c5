// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAF_IO_HPP
#define PAF_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "paf/autocorr.hpp"
#include "paf/poly.hpp"

namespace paf::io {

// Document formats (all complex numbers are [re, im] pairs; all coefficient
// arrays are in ascending powers of z):
//
//   signals  {"K": int, "N": int, "signals": K arrays of N pairs}
//   gamma    {"K": int, "N": int, "entries": K*K row-major arrays of 2N-1
//             pairs; the coefficient at power n is the correlation sample at
//             lag n - (N-1)}
//   poly     {"coeffs": array of pairs}        degree bound = length - 1
//   polys    {"polys": array of poly objects}
//
// Parsers throw ParseError with a field path on any shape or type mismatch.

nlohmann::json parse_text(const std::string& text);
nlohmann::json read_file(const std::string& path);

SignalTuple parse_signals(const nlohmann::json& doc);
nlohmann::json signals_to_json(const SignalTuple& x);

CorrMatrixPoly parse_gamma(const nlohmann::json& doc);
nlohmann::json gamma_to_json(const CorrMatrixPoly& gamma);

BoundedPoly parse_poly(const nlohmann::json& doc);
nlohmann::json poly_to_json(const BoundedPoly& p);

cplx parse_complex(const nlohmann::json& v, const std::string& where);
nlohmann::json complex_to_json(cplx v);

}  // namespace paf::io

#endif  // PAF_IO_HPP
