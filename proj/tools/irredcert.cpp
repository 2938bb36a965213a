#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "irredcert/irredcert.hpp"

using namespace irredcert;
using nlohmann::json;

namespace {

constexpr int kDecided = 0;
constexpr int kError = 1;
constexpr int kInconclusive = 2;

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Residual representation at a prime of the saturated lattice; inputs
/// over Z or Z[t] are read over their fraction field first.
std::pair<AnyRepresentation, json> reduce_at(const AnyRepresentation& rep, const std::string& prime_text) {
  const auto prime = PrimeSpec::parse(prime_text);
  return std::visit(
      [&](const auto& r) -> std::pair<AnyRepresentation, json> {
        const auto k = to_fraction_field(r);
        using K = std::decay_t<decltype(k.ring())>;
        if constexpr (std::is_same_v<K, Rationals> || std::is_same_v<K, RationalFunctions>) {
          const auto sat = saturate(k);
          return {reduce(sat.int_rep, sat.lat, prime), lattice_to_json(sat.lat)};
        } else {
          throw RingMismatch("reduction needs a representation over Z, Z[t], Q or Q(t)");
        }
      },
      rep);
}

AnyRepresentation maybe_reduce(const AnyRepresentation& rep, const std::string& prime_text) {
  return prime_text.empty() ? rep : reduce_at(rep, prime_text).first;
}

template <class Fn>
auto on_finite_field(const AnyRepresentation& rep, const std::string& what, Fn&& fn) {
  return std::visit(
      [&](const auto& r) {
        using F = std::decay_t<decltype(r.ring())>;
        if constexpr (F::is_finite) {
          return fn(r);
        } else {
          throw RingMismatch(what + " needs a finite field; pass --prime to reduce first");
          return fn(Representation<PrimeField>(PrimeField(2), 1, {mat::identity(PrimeField(2), 1)}));
        }
      },
      rep);
}

int run_certify(const std::string& path, const CertifyConfig& cfg, bool with_oracle) {
  const auto rep = load_representation(path);
  const auto cert = certify(rep, cfg);
  json out = certificate_to_json(cert);
  if (with_oracle) out = {{"certificate", out}, {"oracle_crosscheck", oracle_crosscheck(rep, cert)}};
  emit(out);
  return cert.conclusion == Conclusion::Inconclusive ? kInconclusive : kDecided;
}

int run_verify(const std::string& cert_path, const std::string& rep_path) {
  const bool ok = verify_text(read_text(cert_path), load_representation(rep_path));
  emit({{"valid", ok}});
  return ok ? kDecided : kError;
}

int run_reduce(const std::string& path, const std::string& prime) {
  const auto [red, lat] = reduce_at(load_representation(path), prime);
  emit({{"prime", PrimeSpec::parse(prime).to_string()}, {"lattice", lat}, {"representation", rep_to_json(red)}});
  return kDecided;
}

int run_meataxe(const std::string& path, const MeataxeConfig& cfg) {
  const auto rep = load_representation(path);
  const auto status = std::visit(
      [&](const auto& r) {
        const auto k = to_fraction_field(r);
        const auto res = is_irreducible(k, cfg);
        emit(meataxe_to_json(k, res));
        return res.status;
      },
      rep);
  return status == Verdict::Inconclusive ? kInconclusive : kDecided;
}

int run_obstruction(const std::string& path, const std::string& prime, const MeataxeConfig& cfg) {
  const auto rep = maybe_reduce(load_representation(path), prime);
  return on_finite_field(rep, "obstruction", [&](const auto& r) {
    const auto report = obstruction_report(r, cfg);
    emit(to_json(report));
    return kDecided;
  });
}

int run_oracle(const std::string& path, const std::string& prime) {
  const auto rep = maybe_reduce(load_representation(path), prime);
  return on_finite_field(rep, "oracle", [&](const auto& r) {
    emit(oracle::to_json(r, oracle::invariant_subspaces(r)));
    return kDecided;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certify irreducibility of integral representations by reduction modulo primes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolkitVersion));

  std::string rep_path, cert_path, prime;
  CertifyConfig cfg;
  std::string tower = "auto";
  bool with_oracle = false;
  MeataxeConfig mcfg;

  auto* certify_cmd = app.add_subcommand("certify", "Certify a representation over Q or Q(t)");
  certify_cmd->add_option("rep", rep_path, "Representation JSON")->required()->check(CLI::ExistingFile);
  certify_cmd->add_option("--primes", cfg.primes, "Candidate primes, comma separated (default: auto)")
      ->delimiter(',');
  certify_cmd->add_option("--seed", cfg.seed, "MeatAxe seed")->capture_default_str();
  certify_cmd->add_option("--budget", cfg.budget, "MeatAxe samples per reduction")->capture_default_str();
  certify_cmd->add_option("--tower", tower, "Q(t) strategy: auto, maximal or linear")
      ->check(CLI::IsMember({"auto", "maximal", "linear"}))
      ->capture_default_str();
  certify_cmd->add_option("--points", cfg.points, "Specialization points c for t - c")->delimiter(',');
  certify_cmd->add_option("--max-primes", cfg.max_primes, "Cap on automatic primes")->capture_default_str();
  certify_cmd->add_flag("--oracle", with_oracle, "Cross-check finite-field steps by enumeration");

  auto* verify_cmd = app.add_subcommand("verify", "Replay a certificate");
  verify_cmd->add_option("cert", cert_path, "Certificate JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("rep", rep_path, "Representation JSON")->required()->check(CLI::ExistingFile);

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce the saturated lattice at a prime");
  reduce_cmd->add_option("rep", rep_path, "Representation JSON")->required()->check(CLI::ExistingFile);
  reduce_cmd->add_option("--prime", prime, "Prime such as (5), (t-3) or (2,t-0)")->required();

  auto* meataxe_cmd = app.add_subcommand("meataxe", "Run the MeatAxe over the representation's field");
  meataxe_cmd->add_option("rep", rep_path, "Representation JSON")->required()->check(CLI::ExistingFile);
  meataxe_cmd->add_option("--seed", mcfg.seed, "Seed")->capture_default_str();
  meataxe_cmd->add_option("--budget", mcfg.budget, "Samples")->capture_default_str();

  auto* obstruction_cmd = app.add_subcommand("obstruction", "Adjoint cohomology and obstruction data");
  obstruction_cmd->add_option("rep", rep_path, "Representation JSON")->required()->check(CLI::ExistingFile);
  obstruction_cmd->add_option("--prime", prime, "Reduce at this prime first");
  obstruction_cmd->add_option("--seed", mcfg.seed, "Seed")->capture_default_str();
  obstruction_cmd->add_option("--budget", mcfg.budget, "Samples")->capture_default_str();

  auto* oracle_cmd = app.add_subcommand("oracle", "Enumerate invariant subspaces over a small finite field");
  oracle_cmd->add_option("rep", rep_path, "Representation JSON")->required()->check(CLI::ExistingFile);
  oracle_cmd->add_option("--prime", prime, "Reduce at this prime first");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*certify_cmd) {
      cfg.tower = tower_from_string(tower);
      return run_certify(rep_path, cfg, with_oracle);
    }
    if (*verify_cmd) return run_verify(cert_path, rep_path);
    if (*reduce_cmd) return run_reduce(rep_path, prime);
    if (*meataxe_cmd) return run_meataxe(rep_path, mcfg);
    if (*obstruction_cmd) return run_obstruction(rep_path, prime, mcfg);
    if (*oracle_cmd) return run_oracle(rep_path, prime);
  } catch (const std::exception& e) {
    emit({{"error", e.what()}});
    return kError;
  }
  return kError;
}
