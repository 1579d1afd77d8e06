#include "qfp/serialization.hpp"

#include <stdexcept>

namespace qfp {

std::string to_text(const Polynomial& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Integer& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    const bool negative = sgn(c) < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Integer magnitude = abs(c);
    if (i == 0) {
      out += magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out += magnitude.get_str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

nlohmann::ordered_json to_json(const Polynomial& a) {
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : a.coeffs()) coeffs.push_back(c.get_str());
  nlohmann::ordered_json j;
  j["coeffs"] = std::move(coeffs);
  return j;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (c.is_string()) {
      coeffs.push_back(parse_integer(c.get<std::string>()));
    } else if (c.is_number_integer()) {
      coeffs.emplace_back(std::to_string(c.get<std::int64_t>()));
    } else {
      throw std::invalid_argument("polynomial coefficient must be a decimal string or integer");
    }
  }
  return Polynomial(std::move(coeffs));
}

nlohmann::ordered_json to_json(const Residue& r) {
  auto j = to_json(r.rep());
  j["p"] = r.modulus().p();
  j["base_power"] = r.modulus().base_power();
  return j;
}

Residue residue_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j.contains("base_power")) {
    throw std::invalid_argument("residue JSON needs \"p\" and \"base_power\"");
  }
  Modulus m(j.at("p").get<std::int64_t>(), j.at("base_power").get<int>());
  return Residue(std::move(m), polynomial_from_json(j));
}

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["claim_id"] = r.claim_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : r.params) params[key] = value;
  j["params"] = std::move(params);
  j["passed"] = r.passed;
  j["skipped"] = r.skipped;
  j["oracle_agreed"] = r.oracle_agreed;
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  const double ms = with_timing ? std::chrono::duration<double, std::milli>(r.elapsed).count() : 0.0;
  j["elapsed_ms"] = ms;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

std::string params_text(const VerificationReport& r) {
  std::string out;
  for (const auto& [key, value] : r.params) {
    if (!out.empty()) out += ';';
    out += key + "=" + std::to_string(value);
  }
  return out;
}

}  // namespace qfp
