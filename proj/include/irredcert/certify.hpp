#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "irredcert/certificate.hpp"
#include "irredcert/lattice.hpp"
#include "irredcert/meataxe.hpp"
#include "irredcert/oracle.hpp"
#include "irredcert/rep_io.hpp"

namespace irredcert {

namespace certify_detail {

inline MeataxeConfig meataxe_config(const CertifyConfig& cfg) { return {cfg.seed, cfg.budget}; }

template <class F>
Step run_step(const std::string& prime, const Representation<F>& rep, const CertifyConfig& cfg) {
  const auto res = is_irreducible(rep, meataxe_config(cfg));
  Step s{prime, rep.ring().descriptor().to_string(), to_string(res.status), res.transcript, nullptr, nullptr};
  if (res.status == Verdict::Reducible) s.witness = witness_to_json(rep.ring(), res.witness);
  return s;
}

inline Step bad_prime_step(const std::string& prime, const std::string& residue) {
  return {prime, residue, "BadPrime", nullptr, nullptr, nullptr};
}

/// The direct probe over K, then the Inconclusive fallback. Called only
/// when no reduction certified irreducibility.
template <class K>
void finish_over_k(const Representation<K>& rep, const CertifyConfig& cfg, bool have_model, Certificate& c) {
  auto probe = run_step("K", rep, cfg);
  const bool reducible = probe.verdict == to_string(Verdict::Reducible);
  if (reducible) {
    c.conclusion = Conclusion::ReducibleWithWitness;
    c.rule = Rule::DirectOverK;
    c.witness = probe.witness;
  }
  c.steps.push_back(std::move(probe));
  if (reducible) return;
  c.conclusion = Conclusion::Inconclusive;
  c.reason = have_model ? "no-certifying-prime" : "no-integral-model";
  for (const auto& s : c.steps)
    if (s.prime != "K" && s.verdict == to_string(Verdict::Reducible)) c.reducible_primes.push_back(s.prime);
}

inline void mark_certified(Certificate& c, Rule rule, std::vector<std::string> family) {
  c.conclusion = Conclusion::IrreducibleCertified;
  c.rule = rule;
  c.family = std::move(family);
}

/// Candidate primes of Z: the configured list, or ascending primes not
/// dividing `avoid`, at most max_primes of them.
inline std::vector<std::uint64_t> candidate_primes(const CertifyConfig& cfg, const mpz_class& avoid) {
  if (!cfg.primes.empty()) return cfg.primes;
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; out.size() < cfg.max_primes; p = next_prime(p))
    if (avoid == 0 || !mpz_divisible_ui_p(avoid.get_mpz_t(), p)) out.push_back(p);
  return out;
}

inline Certificate certify_q(const Representation<Rationals>& rep, const CertifyConfig& cfg) {
  Certificate c;
  c.input_digest = rep_digest(rep);
  c.ring = rep.ring().descriptor().to_string();
  c.config = cfg;
  std::optional<Saturation<Representation<Integers>>> sat;
  try {
    sat = saturate(rep);
  } catch (const BudgetExceeded&) {
  } catch (const IntegralityError&) {
  }
  if (sat) {
    c.lattice = lattice_to_json(sat->lat);
    const Rationals q;
    mpz_class dets = 1;
    for (const auto& g : sat->int_rep.generators())
      dets *= linalg::det(q, mat::map<mpq_class>(g, [](const mpz_class& a) { return mpq_class(a); })).get_num();
    for (std::uint64_t p : candidate_primes(cfg, dets)) {
      const auto prime = PrimeSpec::integer(p);
      try {
        const auto red = std::get<Representation<PrimeField>>(reduce(sat->int_rep, sat->lat, prime));
        c.steps.push_back(run_step(prime.to_string(), red, cfg));
      } catch (const BadPrime&) {
        c.steps.push_back(bad_prime_step(prime.to_string(), prime.residue_field(RingDescriptor::integers()).to_string()));
        continue;
      }
      if (c.steps.back().verdict == to_string(Verdict::Irreducible)) {
        // Z is regular, so one prime with irreducible reduction suffices.
        mark_certified(c, Rule::RegularOnePrime, {prime.to_string()});
        return c;
      }
    }
  }
  finish_over_k(rep, cfg, sat.has_value(), c);
  return c;
}

inline Certificate certify_qt(const Representation<RationalFunctions>& rep, const CertifyConfig& cfg) {
  Certificate c;
  c.input_digest = rep_digest(rep);
  c.ring = rep.ring().descriptor().to_string();
  c.config = cfg;
  const std::string var = rep.ring().var();
  std::optional<Saturation<Representation<PolyIntegers>>> sat;
  try {
    sat = saturate(rep);
  } catch (const BudgetExceeded&) {
  } catch (const IntegralityError&) {
  }
  if (sat) {
    c.lattice = lattice_to_json(sat->lat);
    const auto base = sat->int_rep.ring().descriptor();
    // Path A: (p, t - c) is maximal and Z[t] localized there is regular local.
    if (cfg.tower != Tower::Linear) {
      for (std::uint64_t p : candidate_primes(cfg, 0)) {
        for (long pt : cfg.points) {
          const auto prime = PrimeSpec::maximal(p, pt);
          try {
            const auto red = std::get<Representation<PrimeField>>(reduce(sat->int_rep, sat->lat, prime));
            c.steps.push_back(run_step(prime.to_string(var), red, cfg));
          } catch (const BadPrime&) {
            c.steps.push_back(bad_prime_step(prime.to_string(var), prime.residue_field(base).to_string()));
            continue;
          }
          if (c.steps.back().verdict == to_string(Verdict::Irreducible)) {
            mark_certified(c, Rule::RegularOnePrime, {prime.to_string(var)});
            return c;
          }
        }
      }
    }
    // Path B: specialize at t = c and certify the rational representation.
    if (cfg.tower != Tower::Maximal) {
      for (long pt : cfg.points) {
        const auto prime = PrimeSpec::linear(pt);
        std::optional<Representation<Rationals>> specialized;
        try {
          specialized = std::get<Representation<Rationals>>(reduce(sat->int_rep, sat->lat, prime));
        } catch (const BadPrime&) {
          c.steps.push_back(bad_prime_step(prime.to_string(var), "Q"));
          continue;
        }
        const auto sub = certify_q(*specialized, cfg);
        std::string verdict = to_string(Verdict::Inconclusive);
        if (sub.conclusion == Conclusion::IrreducibleCertified) verdict = to_string(Verdict::Irreducible);
        if (sub.conclusion == Conclusion::ReducibleWithWitness) verdict = to_string(Verdict::Reducible);
        c.steps.push_back({prime.to_string(var), "Q", verdict, nullptr, nullptr, certificate_body(sub)});
        if (sub.conclusion == Conclusion::IrreducibleCertified) {
          std::vector<std::string> family{prime.to_string(var)};
          family.insert(family.end(), sub.family.begin(), sub.family.end());
          mark_certified(c, Rule::HeightOneFamily, std::move(family));
          return c;
        }
      }
    }
  }
  finish_over_k(rep, cfg, sat.has_value(), c);
  return c;
}

}  // namespace certify_detail

/// Runs the criterion on a representation over Q or Q(t); integral inputs
/// are read over their fraction field. Reductions are tried in a fixed
/// order and the first irreducible one decides; the direct probe over K
/// runs only when none does.
inline Certificate certify(const AnyRepresentation& rep, const CertifyConfig& cfg = {}) {
  return std::visit(
      [&](const auto& r) -> Certificate {
        using R = std::decay_t<decltype(r.ring())>;
        if constexpr (std::is_same_v<R, Rationals>) {
          return certify_detail::certify_q(r, cfg);
        } else if constexpr (std::is_same_v<R, RationalFunctions>) {
          return certify_detail::certify_qt(r, cfg);
        } else if constexpr (std::is_same_v<R, Integers> || std::is_same_v<R, PolyIntegers>) {
          return certify(AnyRepresentation(to_fraction_field(r)), cfg);
        } else {
          throw RingMismatch("certify needs a representation over Z, Z[t], Q or Q(t); got " +
                             r.ring().descriptor().to_string());
        }
      },
      rep);
}

namespace certify_detail {

/// Witness rows over K: proper, nonzero, independent and invariant.
template <class K>
bool witness_holds(const Representation<K>& rep, const nlohmann::json& rows) {
  if (!rows.is_array() || rows.empty() || rows.size() >= rep.dim()) return false;
  std::vector<Vector<K>> basis;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != rep.dim()) return false;
    Vector<K> v;
    for (const auto& e : r) {
      if (!e.is_string()) return false;
      v.push_back(rep.ring().parse(e.get<std::string>()));
    }
    basis.push_back(std::move(v));
  }
  const auto m = mat::from_rows(rep.dim(), basis);
  if (linalg::rank(rep.ring(), m) != basis.size()) return false;
  return linalg::is_invariant(rep.ring(), rep.generators(), basis, rep.dim());
}

/// Hypotheses of the recorded rule, checked against the recorded steps.
inline bool rule_hypotheses_hold(const Certificate& c, bool over_qt) {
  switch (c.conclusion) {
    case Conclusion::Inconclusive:
      return !c.rule && c.family.empty() && !c.reason.empty();
    case Conclusion::ReducibleWithWitness:
      return c.rule == Rule::DirectOverK && !c.steps.empty() && c.steps.back().prime == "K" &&
             c.steps.back().verdict == to_string(Verdict::Reducible) && c.steps.back().witness == c.witness;
    case Conclusion::IrreducibleCertified:
      break;
  }
  if (!c.rule || c.family.empty() || c.steps.empty()) return false;
  const Step& last = c.steps.back();
  if (last.prime != c.family.front() || last.verdict != to_string(Verdict::Irreducible)) return false;
  // Distinct primes: the family has trivial intersection.
  if (std::set<std::string>(c.family.begin(), c.family.end()).size() != c.family.size()) return false;
  PrimeSpec prime;
  try {
    prime = PrimeSpec::parse(last.prime);
  } catch (const Error&) {
    return false;
  }
  if (*c.rule == Rule::RegularOnePrime) {
    const auto want = over_qt ? PrimeSpec::Kind::MaximalPair : PrimeSpec::Kind::IntegerPrime;
    return prime.kind == want && c.family.size() == 1;
  }
  if (*c.rule == Rule::HeightOneFamily) {
    if (!over_qt || prime.kind != PrimeSpec::Kind::LinearPoly || last.sub_certificate.is_null()) return false;
    Certificate sub;
    try {
      sub = certificate_from_body(last.sub_certificate);
    } catch (const Error&) {
      return false;
    }
    if (sub.conclusion != Conclusion::IrreducibleCertified || !rule_hypotheses_hold(sub, false)) return false;
    return std::vector<std::string>(c.family.begin() + 1, c.family.end()) == sub.family;
  }
  return false;
}

}  // namespace certify_detail

/// Replays a certificate against the representation it claims to cover.
/// False on any malformation or mismatch; VersionMismatch when the digest
/// is intact but the certificate comes from another toolkit version.
inline bool verify(const nlohmann::json& doc, const AnyRepresentation& rep) {
  if (!doc.is_object() || !doc.contains("digest") || !doc["digest"].is_string()) return false;
  if (certificate_digest(doc) != doc["digest"].get<std::string>()) return false;
  if (!doc.contains("toolkit_version") || !doc["toolkit_version"].is_string()) return false;
  if (doc["toolkit_version"].get<std::string>() != kToolkitVersion)
    throw VersionMismatch("certificate from toolkit " + doc["toolkit_version"].get<std::string>() +
                          ", this is " + kToolkitVersion);
  if (doc.value("format", std::string{}) != kCertificateFormat) return false;
  Certificate cert;
  try {
    cert = certificate_from_body(doc);
  } catch (const Error&) {
    return false;
  }
  const auto replay = certify(rep, cert.config);
  if (replay.input_digest != cert.input_digest) return false;
  if (certificate_to_json(replay) != doc) return false;
  return std::visit(
      [&](const auto& r) {
        const auto k = to_fraction_field(r);
        using K = std::decay_t<decltype(k.ring())>;
        constexpr bool over_qt = std::is_same_v<K, RationalFunctions>;
        if (!certify_detail::rule_hypotheses_hold(cert, over_qt)) return false;
        if (cert.conclusion == Conclusion::ReducibleWithWitness) return certify_detail::witness_holds(k, cert.witness);
        return true;
      },
      rep);
}

inline bool verify_text(std::string_view text, const AnyRepresentation& rep) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return verify(doc, rep);
}

/// Brute-force check of every finite-field step small enough for the
/// oracle. Sub-certificates are not descended into.
inline nlohmann::json oracle_crosscheck(const AnyRepresentation& rep, const Certificate& cert) {
  nlohmann::json out = nlohmann::json::array();
  if (cert.lattice.is_null()) return out;
  std::visit(
      [&](const auto& r) {
        const auto k = to_fraction_field(r);
        using K = std::decay_t<decltype(k.ring())>;
        if constexpr (std::is_same_v<K, Rationals> || std::is_same_v<K, RationalFunctions>) {
          const auto sat = saturate(k);
          const std::string var = sat.int_rep.ring().descriptor().var;
          for (const auto& s : cert.steps) {
            if (s.verdict != to_string(Verdict::Irreducible) && s.verdict != to_string(Verdict::Reducible)) continue;
            if (s.prime == "K") continue;
            const auto prime = PrimeSpec::parse(s.prime);
            if (prime.kind != PrimeSpec::Kind::IntegerPrime && prime.kind != PrimeSpec::Kind::MaximalPair) continue;
            const auto red = std::get<Representation<PrimeField>>(reduce(sat.int_rep, sat.lat, prime));
            nlohmann::json entry = {{"prime", s.prime}, {"meataxe", s.verdict}};
            try {
              const bool irr = oracle::is_irreducible(red);
              entry["oracle"] = irr ? "Irreducible" : "Reducible";
              entry["agree"] = entry["oracle"] == s.verdict;
            } catch (const SizeBound&) {
              entry["oracle"] = "skipped";
            }
            out.push_back(std::move(entry));
          }
        }
      },
      rep);
  return out;
}

}  // namespace irredcert
