/*! \file json.hpp
 *  \brief JSON serialization: matrices are row-major arrays, Laurent
 *         polynomials are {exponent: coefficient} objects.
 */

#pragma once

#include "longknot/invariants.hpp"
#include "longknot/laurent.hpp"
#include "longknot/matrix.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>

namespace longknot {

inline nlohmann::json to_json(const laurent_poly& p) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      obj[std::to_string(e)] = c.convert_to<std::int64_t>();
    else
      obj[std::to_string(e)] = c.str();  // decimal string once past 64 bits
  }
  return obj;
}

inline laurent_poly laurent_from_json(const nlohmann::json& obj) {
  laurent_poly p;
  for (const auto& [key, value] : obj.items()) {
    bigint c = value.is_string() ? bigint(value.get<std::string>()) : bigint(value.get<std::int64_t>());
    p += laurent_poly::monomial(c, std::stoi(key));
  }
  return p;
}

inline nlohmann::json to_json(const int_matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json to_json(const laurent_matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline nlohmann::json to_json(const verification_report& report) {
  nlohmann::json failures = nlohmann::json::array();
  for (const auto& f : report.failures)
    failures.push_back({{"location", f.location}, {"expected", f.expected}, {"actual", f.actual}});
  return {
      {"theorem_holds", report.theorem_holds},
      {"sign", report.sign},
      {"l", report.l},
      {"proposition_holds", report.proposition_holds},
      {"lemma1_holds", report.lemma1_holds},
      {"lemma2_holds", report.lemma2_holds},
      {"detW", report.det_w},
      {"failures", std::move(failures)},
  };
}

inline nlohmann::json to_json(const invariant_bundle& b) {
  return {
      {"n", b.n},
      {"sigma", b.sigma},
      {"d", b.d},
      {"S", b.s},
      {"l", b.l},
      {"T", to_json(b.T)},
      {"X_neg_S", to_json(b.x_neg_s)},
      {"X_neg_half", to_json(b.x_neg_half)},
      {"A", to_json(b.A)},
      {"W", to_json(b.W)},
      {"beta", to_json(b.beta)},
      {"delta", to_json(b.delta)},
      {"beta_text", b.beta.str()},
      {"delta_text", b.delta.str()},
      {"beta_normalized", b.beta.is_zero() ? std::string("0") : normalize(b.beta).str()},
      {"delta_normalized", b.delta.is_zero() ? std::string("0") : normalize(b.delta).str()},
  };
}

}  // namespace longknot
