#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "irredcert/digest.hpp"
#include "irredcert/representation.hpp"
#include "irredcert/scalar.hpp"

namespace irredcert {

using json = nlohmann::json;

using AnyRepresentation =
    std::variant<Representation<Integers>, Representation<PolyIntegers>, Representation<Rationals>,
                 Representation<RationalFunctions>, Representation<PrimeField>, Representation<ExtensionField>>;

inline json word_to_json(const Word& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back({l.gen, l.exp});
  return out;
}

inline Word word_from_json(const json& j) {
  Word w;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2) throw ParseError("word letters are [generator, exponent] pairs");
    w.push_back({l[0].get<std::size_t>(), l[1].get<int>()});
  }
  return w;
}

template <class R>
json matrix_to_json(const R& ring, const MatrixOver<R>& m) {
  return mat::format(ring, m);
}

template <class R>
MatrixOver<R> matrix_from_json(const R& ring, const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<std::string> r;
    for (const auto& e : row) {
      if (e.is_string())
        r.push_back(e.get<std::string>());
      else if (e.is_number_integer())
        r.push_back(std::to_string(e.get<long long>()));
      else
        throw ParseError("matrix entries must be strings or integers");
    }
    rows.push_back(std::move(r));
  }
  return mat::parse(ring, rows);
}

template <class R>
json rep_to_json(const Representation<R>& rep) {
  json gens = json::array();
  for (const auto& g : rep.generators()) gens.push_back(matrix_to_json(rep.ring(), g));
  json rel = json::array();
  for (const auto& w : rep.relations()) rel.push_back(word_to_json(w));
  json out = {{"ring", rep.ring().descriptor().to_string()},
              {"dim", rep.dim()},
              {"generators", std::move(gens)},
              {"relations", std::move(rel)}};
  if (!rep.label().empty()) out["label"] = rep.label();
  return out;
}

inline json rep_to_json(const AnyRepresentation& rep) {
  return std::visit([](const auto& r) { return rep_to_json(r); }, rep);
}

inline AnyRepresentation rep_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("representation must be a JSON object");
    const auto desc = RingDescriptor::parse(j.at("ring").get<std::string>());
    const auto dim = j.at("dim").get<std::size_t>();
    std::vector<Word> relations;
    if (j.contains("relations"))
      for (const auto& w : j.at("relations")) relations.push_back(word_from_json(w));
    const std::string label = j.value("label", std::string{});
    return visit_ring(desc, [&](auto ring) -> AnyRepresentation {
      using R = decltype(ring);
      std::vector<MatrixOver<R>> gens;
      for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(ring, g));
      return Representation<R>(ring, dim, std::move(gens), relations, label);
    });
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed representation: ") + e.what());
  }
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline AnyRepresentation load_representation(const std::string& path) { return rep_from_json(read_json_file(path)); }

/// Digest of the canonical (sorted-key, compact) serialization.
template <class R>
std::string rep_digest(const Representation<R>& rep) {
  return sha256_hex(rep_to_json(rep).dump());
}

}  // namespace irredcert
