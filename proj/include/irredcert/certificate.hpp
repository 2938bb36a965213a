#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "irredcert/digest.hpp"
#include "irredcert/error.hpp"

namespace irredcert {

inline constexpr const char* kToolkitVersion = "0.1.0";
inline constexpr const char* kCertificateFormat = "irredcert-certificate";

enum class Rule { DVR, RegularOnePrime, HeightOneFamily, DirectOverK };
enum class Conclusion { IrreducibleCertified, ReducibleWithWitness, Inconclusive };
enum class Tower { Auto, Maximal, Linear };

inline std::string to_string(Rule r) {
  switch (r) {
    case Rule::DVR:
      return "DVR";
    case Rule::RegularOnePrime:
      return "RegularOnePrime";
    case Rule::HeightOneFamily:
      return "HeightOneFamily";
    case Rule::DirectOverK:
      break;
  }
  return "DirectOverK";
}

inline std::string to_string(Conclusion c) {
  switch (c) {
    case Conclusion::IrreducibleCertified:
      return "IrreducibleCertified";
    case Conclusion::ReducibleWithWitness:
      return "ReducibleWithWitness";
    case Conclusion::Inconclusive:
      break;
  }
  return "Inconclusive";
}

inline std::string to_string(Tower t) {
  switch (t) {
    case Tower::Auto:
      return "auto";
    case Tower::Maximal:
      return "maximal";
    case Tower::Linear:
      break;
  }
  return "linear";
}

inline Rule rule_from_string(const std::string& s) {
  for (Rule r : {Rule::DVR, Rule::RegularOnePrime, Rule::HeightOneFamily, Rule::DirectOverK})
    if (to_string(r) == s) return r;
  throw ParseError("unknown rule '" + s + "'");
}

inline Conclusion conclusion_from_string(const std::string& s) {
  for (Conclusion c : {Conclusion::IrreducibleCertified, Conclusion::ReducibleWithWitness, Conclusion::Inconclusive})
    if (to_string(c) == s) return c;
  throw ParseError("unknown conclusion '" + s + "'");
}

inline Tower tower_from_string(const std::string& s) {
  for (Tower t : {Tower::Auto, Tower::Maximal, Tower::Linear})
    if (to_string(t) == s) return t;
  throw ParseError("unknown tower strategy '" + s + "'");
}

/// Empty primes means automatic selection.
struct CertifyConfig {
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 1;
  int budget = 200;
  Tower tower = Tower::Auto;
  std::vector<long> points{0, 1, -1};
  std::size_t max_primes = 50;

  friend bool operator==(const CertifyConfig&, const CertifyConfig&) = default;
};

/// One reduction, or the direct probe over K (prime "K"). A LinearPoly
/// step carries the certificate body of its specialization.
struct Step {
  std::string prime;
  std::string residue_field;
  std::string verdict;  // a Verdict name, or "BadPrime"
  nlohmann::json transcript;
  nlohmann::json witness;
  nlohmann::json sub_certificate;
};

struct Certificate {
  std::string input_digest;
  std::string ring;
  nlohmann::json lattice;  // null without an integral model
  CertifyConfig config;
  std::vector<Step> steps;
  std::optional<Rule> rule;
  std::vector<std::string> family;
  Conclusion conclusion = Conclusion::Inconclusive;
  nlohmann::json witness;  // rows over K when ReducibleWithWitness
  std::string reason;      // set when Inconclusive
  std::vector<std::string> reducible_primes;
};

inline nlohmann::json config_to_json(const CertifyConfig& c) {
  nlohmann::json primes = c.primes.empty() ? nlohmann::json("auto") : nlohmann::json(c.primes);
  return {{"primes", primes},         {"seed", c.seed},     {"budget", c.budget},
          {"tower", to_string(c.tower)}, {"points", c.points}, {"max_primes", c.max_primes}};
}

inline CertifyConfig config_from_json(const nlohmann::json& j) {
  CertifyConfig c;
  const auto& p = j.at("primes");
  if (p.is_string()) {
    if (p.get<std::string>() != "auto") throw ParseError("primes must be \"auto\" or a list");
  } else {
    c.primes = p.get<std::vector<std::uint64_t>>();
    if (c.primes.empty()) throw ParseError("explicit prime list is empty");
  }
  c.seed = j.at("seed").get<std::uint64_t>();
  c.budget = j.at("budget").get<int>();
  if (c.budget < 1) throw ParseError("budget must be positive");
  c.tower = tower_from_string(j.at("tower").get<std::string>());
  c.points = j.at("points").get<std::vector<long>>();
  c.max_primes = j.at("max_primes").get<std::size_t>();
  return c;
}

inline nlohmann::json step_to_json(const Step& s) {
  nlohmann::json out = {{"prime", s.prime}, {"residue_field", s.residue_field}, {"verdict", s.verdict}};
  if (!s.transcript.is_null()) out["meataxe"] = s.transcript;
  if (!s.witness.is_null()) out["witness"] = s.witness;
  if (!s.sub_certificate.is_null()) out["sub_certificate"] = s.sub_certificate;
  return out;
}

inline Step step_from_json(const nlohmann::json& j) {
  Step s;
  s.prime = j.at("prime").get<std::string>();
  s.residue_field = j.at("residue_field").get<std::string>();
  s.verdict = j.at("verdict").get<std::string>();
  s.transcript = j.value("meataxe", nlohmann::json());
  s.witness = j.value("witness", nlohmann::json());
  s.sub_certificate = j.value("sub_certificate", nlohmann::json());
  return s;
}

/// Everything except format, version and digest. Also the form nested
/// inside LinearPoly steps.
inline nlohmann::json certificate_body(const Certificate& c) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : c.steps) steps.push_back(step_to_json(s));
  nlohmann::json conclusion = {{"kind", to_string(c.conclusion)}};
  if (c.conclusion == Conclusion::ReducibleWithWitness) conclusion["witness"] = c.witness;
  if (c.conclusion == Conclusion::Inconclusive) {
    conclusion["reason"] = c.reason;
    conclusion["reducible_primes"] = c.reducible_primes;
  }
  return {{"input_digest", c.input_digest},
          {"ring", c.ring},
          {"lattice", c.lattice},
          {"config", config_to_json(c.config)},
          {"steps", std::move(steps)},
          {"rule", c.rule ? nlohmann::json(to_string(*c.rule)) : nlohmann::json(nullptr)},
          {"family", c.family},
          {"conclusion", std::move(conclusion)}};
}

inline Certificate certificate_from_body(const nlohmann::json& j) {
  try {
    Certificate c;
    c.input_digest = j.at("input_digest").get<std::string>();
    c.ring = j.at("ring").get<std::string>();
    c.lattice = j.at("lattice");
    c.config = config_from_json(j.at("config"));
    for (const auto& s : j.at("steps")) c.steps.push_back(step_from_json(s));
    if (!j.at("rule").is_null()) c.rule = rule_from_string(j.at("rule").get<std::string>());
    c.family = j.at("family").get<std::vector<std::string>>();
    const auto& con = j.at("conclusion");
    c.conclusion = conclusion_from_string(con.at("kind").get<std::string>());
    if (c.conclusion == Conclusion::ReducibleWithWitness) c.witness = con.at("witness");
    if (c.conclusion == Conclusion::Inconclusive) {
      c.reason = con.at("reason").get<std::string>();
      c.reducible_primes = con.at("reducible_primes").get<std::vector<std::string>>();
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

/// SHA-256 of the compact sorted-key dump of every field but "digest".
inline std::string certificate_digest(nlohmann::json doc) {
  doc.erase("digest");
  return sha256_hex(doc.dump());
}

inline nlohmann::json certificate_to_json(const Certificate& c) {
  auto doc = certificate_body(c);
  doc["format"] = kCertificateFormat;
  doc["toolkit_version"] = kToolkitVersion;
  doc["digest"] = certificate_digest(doc);
  return doc;
}

}  // namespace irredcert
