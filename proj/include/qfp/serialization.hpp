#pragma once

#include "qfp/congruence.hpp"
#include "qfp/polynomial.hpp"
#include "qfp/verifier.hpp"

#include "json.hpp"

#include <string>

namespace qfp {

/// "c0 + c1*q + c2*q^2" ascending, zero terms omitted, unit coefficients
/// implied ("q", "-q^3"), the zero polynomial as "0".
std::string to_text(const Polynomial& a);

// {"coeffs": ["c0", "c1", ...]}, decimal strings.
nlohmann::ordered_json to_json(const Polynomial& a);
// Accepts decimal strings or JSON integers; throws std::invalid_argument.
Polynomial polynomial_from_json(const nlohmann::json& j);

// Polynomial form plus "p" and "base_power".
nlohmann::ordered_json to_json(const Residue& r);
Residue residue_from_json(const nlohmann::json& j);

/// claim_id, params, passed, skipped, oracle_agreed, lhs, rhs, elapsed_ms and,
/// when present, note. elapsed_ms is written as 0 when with_timing is false.
nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing = true);

std::string params_text(const VerificationReport& r);  // "p=7" or "n=3"

}  // namespace qfp
