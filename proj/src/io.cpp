// Copyright 2026 The paf Authors
// SPDX-License-Identifier: Apache-2.0

#include "paf/io.hpp"

#include <fstream>
#include <sstream>

#include "paf/errors.hpp"

namespace paf::io {

using nlohmann::json;

namespace {

int require_int(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw ParseError("field '" + key + "': expected an integer");
  }
  return doc[key].get<int>();
}

const json& require_array(const json& doc, const std::string& key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    throw ParseError("field '" + key + "': expected an array");
  }
  return doc[key];
}

std::vector<cplx> parse_coeff_array(const json& arr, const std::string& where,
                                    int expected_len = -1) {
  if (!arr.is_array()) throw ParseError(where + ": expected an array");
  if (expected_len >= 0 && static_cast<int>(arr.size()) != expected_len) {
    throw ParseError(where + ": expected " + std::to_string(expected_len) +
                     " coefficients, got " + std::to_string(arr.size()));
  }
  std::vector<cplx> out;
  out.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    out.push_back(parse_complex(arr[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

cplx parse_complex(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
    throw ParseError(where + ": expected a [re, im] pair");
  }
  return cplx{v[0].get<double>(), v[1].get<double>()};
}

json complex_to_json(cplx v) { return json::array({v.real(), v.imag()}); }

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str());
}

SignalTuple parse_signals(const json& doc) {
  if (!doc.is_object()) throw ParseError("signals document: expected an object");
  const int k = require_int(doc, "K");
  const int n = require_int(doc, "N");
  if (k < 1 || n < 1) throw ParseError("fields 'K'/'N': must be positive");
  const json& rows = require_array(doc, "signals");
  if (static_cast<int>(rows.size()) != k) {
    throw ParseError("field 'signals': expected " + std::to_string(k) + " channels");
  }
  std::vector<std::vector<cplx>> samples;
  samples.reserve(k);
  for (int i = 0; i < k; ++i) {
    samples.push_back(
        parse_coeff_array(rows[i], "signals[" + std::to_string(i) + "]", n));
  }
  return SignalTuple::from_samples(samples);
}

json signals_to_json(const SignalTuple& x) {
  json rows = json::array();
  for (const auto& c : x.channels()) {
    json row = json::array();
    for (std::size_t n = 0; n < c.size(); ++n) row.push_back(complex_to_json(c[n]));
    rows.push_back(std::move(row));
  }
  return json{{"K", x.channel_count()}, {"N", x.length()}, {"signals", std::move(rows)}};
}

CorrMatrixPoly parse_gamma(const json& doc) {
  if (!doc.is_object()) throw ParseError("gamma document: expected an object");
  const int k = require_int(doc, "K");
  const int n = require_int(doc, "N");
  if (k < 1 || n < 1) throw ParseError("fields 'K'/'N': must be positive");
  const json& flat = require_array(doc, "entries");
  if (static_cast<int>(flat.size()) != k * k) {
    throw ParseError("field 'entries': expected " + std::to_string(k * k) +
                     " row-major entries");
  }
  std::vector<std::vector<BoundedPoly>> entries(k, std::vector<BoundedPoly>());
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      const std::string where = "entries[" + std::to_string(i * k + j) + "]";
      entries[i].emplace_back(parse_coeff_array(flat[i * k + j], where, 2 * n - 1));
    }
  }
  return CorrMatrixPoly(n, std::move(entries));
}

json gamma_to_json(const CorrMatrixPoly& gamma) {
  json flat = json::array();
  for (const auto& row : gamma.entries()) {
    for (const auto& e : row) {
      json coeffs = json::array();
      for (std::size_t n = 0; n < e.size(); ++n) coeffs.push_back(complex_to_json(e[n]));
      flat.push_back(std::move(coeffs));
    }
  }
  return json{{"K", gamma.channel_count()},
              {"N", gamma.signal_length()},
              {"entries", std::move(flat)}};
}

BoundedPoly parse_poly(const json& doc) {
  if (!doc.is_object()) throw ParseError("poly document: expected an object");
  const json& arr = require_array(doc, "coeffs");
  if (arr.empty()) throw ParseError("field 'coeffs': must be nonempty");
  return BoundedPoly(parse_coeff_array(arr, "coeffs"));
}

json poly_to_json(const BoundedPoly& p) {
  json coeffs = json::array();
  for (std::size_t n = 0; n < p.size(); ++n) coeffs.push_back(complex_to_json(p[n]));
  return json{{"coeffs", std::move(coeffs)}};
}

}  // namespace paf::io
