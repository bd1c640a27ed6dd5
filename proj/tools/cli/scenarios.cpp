// Copyright 2026 The hamol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>

#include "cli/cli.hpp"
#include "hamol/budget/budget.hpp"
#include "hamol/budget/species.hpp"
#include "hamol/crit/eigensolver.hpp"
#include "hamol/crit/observables.hpp"
#include "hamol/crit/spin_chain.hpp"
#include "hamol/crit/weak_measurement.hpp"
#include "hamol/error.hpp"
#include "hamol/gates/hybrid.hpp"
#include "hamol/gates/molecular.hpp"
#include "hamol/parallel.hpp"
#include "hamol/stab/protocols.hpp"

namespace hamol::cli {
namespace {

constexpr double kPi = std::numbers::pi;

double num(const json& p, const char* key) {
  const json& v = p.at(key);
  if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must be a number");
  return v.get<double>();
}

std::uint64_t count_value(const json& v, const std::string& key) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  throw ConfigError("'" + key + "' must be a non-negative integer");
}

std::uint64_t count(const json& p, const char* key) { return count_value(p.at(key), key); }

std::string str(const json& p, const char* key) {
  const json& v = p.at(key);
  if (!v.is_string()) throw ConfigError(std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> num_list(const json& p, const char* key) {
  std::vector<double> out;
  for (const auto& v : p.at(key)) {
    if (!v.is_number()) throw ConfigError(std::string("'") + key + "' must hold numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::size_t> count_list(const json& p, const char* key) {
  std::vector<std::size_t> out;
  for (const auto& v : p.at(key)) out.push_back(count_value(v, key));
  return out;
}

json complex_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

// ---- gate-sim -------------------------------------------------------------

json gate_report_json(const gates::GateReport& r, const std::vector<std::string>& advisories) {
  return {{"protocol", r.protocol},
          {"basis_labels", r.basis_labels},
          {"conditional_phase", r.conditional_phase},
          {"diagonal_phases", r.diagonal_phases},
          {"return_populations", r.return_populations},
          {"leakage", r.leakage},
          {"decay_loss", r.decay_loss},
          {"fidelity_vs_ideal", r.fidelity_vs_ideal},
          {"isometry_defect", r.isometry_defect},
          {"duration", r.duration},
          {"step_count", r.step_count},
          {"warnings", r.warnings},
          {"advisories", advisories}};
}

gates::GateReport run_hybrid(const json& p, double omega_ratio, std::vector<std::string>* adv) {
  const std::string protocol = str(p, "protocol");
  gates::HybridGateSpec spec;
  spec.V_MA = num(p, "V_MA");
  spec.Delta = num(p, "Delta");
  spec.gamma_r = num(p, "gamma_r");
  spec.gamma_R = num(p, "gamma_R");
  spec.pulse.omega_max = omega_ratio * spec.V_MA;
  if (protocol == "hybrid_cz") {
    spec.pulse.area = p.at("area").is_null() ? 2.0 * kPi : num(p, "area");
  } else {
    spec.pulse.laser_detuning = spec.Delta;
    spec.pulse.area = p.at("area").is_null()
                          ? gates::loop_closing_area(spec.pulse.omega_max, spec.Delta)
                          : num(p, "area");
  }
  const gates::SimulationOptions opts{.resolution = num(p, "resolution"),
                                      .verify_convergence = p.at("verify_convergence").get<bool>()};
  if (adv) *adv = spec.advisories();
  return protocol == "hybrid_cz" ? gates::simulate_hybrid_cz(spec, opts)
                                 : gates::simulate_hybrid_phase(spec, opts);
}

json run_gate_sim(const ScenarioConfig& cfg, json& provenance) {
  const json& p = cfg.params;
  const std::string protocol = str(p, "protocol");
  json results;
  if (protocol == "hybrid_cz" || protocol == "hybrid_phase") {
    std::vector<std::string> adv;
    results["report"] = gate_report_json(run_hybrid(p, num(p, "omega_ratio"), &adv), adv);
    const auto ratios = num_list(p, "omega_ratios");
    if (!ratios.empty()) {
      const auto reports =
          parallel_map(ratios, [&](const double& r) { return run_hybrid(p, r, nullptr); });
      json series = json::array();
      for (std::size_t i = 0; i < ratios.size(); ++i) {
        series.push_back({{"omega_ratio", ratios[i]},
                          {"conditional_phase", reports[i].conditional_phase},
                          {"leakage", reports[i].leakage}});
      }
      results["phase_vs_ratio"] = series;
      provenance["phase_vs_ratio"] = "derived";
    }
  } else if (protocol == "iswap" || protocol == "pair_drive") {
    gates::MolMolGateSpec spec;
    spec.V_MM = num(p, "V_MM");
    const gates::SimulationOptions opts{.resolution = num(p, "resolution"),
                                        .verify_convergence = p.at("verify_convergence").get<bool>()};
    gates::GateReport r;
    if (protocol == "iswap") {
      spec.protocol = gates::MolMolProtocol::kIswap;
      spec.hold_time = p.at("hold_time").is_null() ? kPi / (2.0 * spec.V_MM) : num(p, "hold_time");
      r = gates::simulate_iswap(spec, opts);
    } else {
      spec.protocol = gates::MolMolProtocol::kPairDrive;
      spec.drive_rabi = num(p, "drive_ratio") * spec.V_MM;
      r = gates::simulate_pair_drive_cz(spec, opts);
    }
    results["report"] = gate_report_json(r, spec.advisories());
  } else {
    throw ConfigError("unknown gate-sim protocol '" + protocol + "'");
  }
  provenance["report.conditional_phase"] = "derived";
  provenance["report.leakage"] = "derived";
  provenance["report.fidelity_vs_ideal"] = "derived";
  return results;
}

// ---- budget ---------------------------------------------------------------

json run_budget(const ScenarioConfig& cfg, json& provenance) {
  const json& p = cfg.params;
  const budget::SpeciesDatabase db =
      p.at("species_file").is_null()
          ? budget::default_species_database()
          : budget::load_species_database(p.at("species_file").get<std::string>());
  const budget::MoleculeSpecies& species = db.find(str(p, "species"));
  const budget::ErrorBudget b = budget::compute_budget(species, db.anchor, num(p, "field_noise_scale"));
  const bool at_anchor = species.name == db.anchor_species && num(p, "field_noise_scale") == 1.0;

  json results;
  results["species"] = {{"name", species.name},
                        {"f_Hz", species.f_Hz},
                        {"d_Debye", species.d_Debye},
                        {"source", species.source}};
  results["budget"] = {{"decay", b.decay},
                       {"adiabaticity", b.adiabaticity},
                       {"leakage", b.leakage},
                       {"field", b.field},
                       {"total", b.total},
                       {"total_1sf", budget::round_significant(b.total, 1)},
                       {"matched_n", b.matched_n ? json(*b.matched_n) : json(nullptr)}};
  const char* tag = at_anchor ? "paper-anchored" : "derived";
  for (const char* k : {"decay", "adiabaticity", "leakage", "field", "total"}) {
    provenance[std::string("budget.") + k] = tag;
  }
  provenance["budget.matched_n"] = at_anchor ? "paper-anchored" : "derived";
  provenance["species"] = "external";

  const double gate_error = p.at("ghz_gate_error").is_null() ? b.total : num(p, "ghz_gate_error");
  const double readout = num(p, "ghz_readout_error");
  json proj = json::array();
  for (const std::size_t n : count_list(p, "ghz_n")) {
    for (auto scheme : {budget::GhzScheme::kGateOnlyLinear, budget::GhzScheme::kGateOnlyLog,
                        budget::GhzScheme::kMeasurementBased}) {
      const auto g = budget::project_ghz_fidelity(gate_error, readout, static_cast<int>(n), scheme);
      proj.push_back({{"n", n},
                      {"scheme", budget::to_string(scheme)},
                      {"fidelity", g.fidelity},
                      {"gate_count", g.gate_count},
                      {"depth", g.depth},
                      {"readouts", g.readouts}});
    }
  }
  results["ghz_projection"] = {{"gate_error", gate_error}, {"readout_error", readout}, {"rows", proj}};
  provenance["ghz_projection"] = "derived";
  return results;
}

// ---- ghz / toric ----------------------------------------------------------

std::vector<std::uint64_t> run_seeds(std::uint64_t seed, std::uint64_t runs) {
  if (runs == 0) throw ConfigError("'runs' must be at least 1");
  std::vector<std::uint64_t> seeds(runs);
  for (std::uint64_t i = 0; i < runs; ++i) seeds[i] = seed + i;
  return seeds;
}

json generators_json(const stab::QuditTableau& tab) {
  json out = json::array();
  for (const auto& g : tab.generators()) out.push_back(g.to_string());
  return out;
}

json run_ghz(const ScenarioConfig& cfg, json& provenance) {
  const json& p = cfg.params;
  const int d = static_cast<int>(count(p, "d"));
  const std::size_t n = count(p, "n_molecules");
  const stab::ProtocolOptions opts{.debug_checks = p.at("debug_invariants").get<bool>()};
  const auto seeds = run_seeds(cfg.seed, count(p, "runs"));

  struct Run {
    bool verified;
    std::vector<int> outcomes;
    json transcript;
    json generators;
  };
  const auto runs = parallel_map(seeds, [&](const std::uint64_t& s) {
    const auto r = stab::run_ghz_protocol(d, n, s, opts);
    Run out{stab::verify_ghz(r.molecules), {}, nullptr, nullptr};
    for (const auto& m : r.records) out.outcomes.push_back(m.outcome);
    if (s == seeds.front()) {
      out.transcript = stab::to_json(r.transcript);
      out.generators = generators_json(r.molecules);
    }
    return out;
  });

  std::size_t verified = 0, total = 0;
  std::vector<std::size_t> counts(static_cast<std::size_t>(d), 0);
  for (const auto& r : runs) {
    verified += r.verified ? 1 : 0;
    for (int m : r.outcomes) {
      ++counts[static_cast<std::size_t>(m)];
      ++total;
    }
  }
  json hist = json::array();
  for (int m = 0; m < d; ++m) {
    hist.push_back({{"outcome", m},
                    {"count", counts[static_cast<std::size_t>(m)]},
                    {"probability", total ? double(counts[static_cast<std::size_t>(m)]) / double(total) : 0.0}});
  }
  provenance["runs_verified"] = "derived";
  provenance["outcome_histogram"] = "derived";
  return {{"d", d},
          {"n_molecules", n},
          {"runs", seeds.size()},
          {"runs_verified", verified},
          {"all_verified", verified == seeds.size()},
          {"outcome_histogram", hist},
          {"first_run", {{"seed", seeds.front()},
                         {"stabilizers", runs.front().generators},
                         {"transcript", runs.front().transcript}}}};
}

json toric_report_json(const stab::ToricReport& r) {
  return {{"checks_passed", r.checks_passed},
          {"checks_total", r.checks_total},
          {"all_checks", r.all_checks},
          {"stabilizer_rank", r.stabilizer_rank},
          {"logical_dimension", r.logical_dimension},
          {"vertex_product_identity", r.vertex_product_identity},
          {"plaquette_product_identity", r.plaquette_product_identity}};
}

json run_toric(const ScenarioConfig& cfg, json& provenance) {
  const json& p = cfg.params;
  const std::size_t L = count(p, "L");
  const stab::ProtocolOptions opts{.debug_checks = p.at("debug_invariants").get<bool>()};
  const auto seeds = run_seeds(cfg.seed, count(p, "runs"));
  const auto results = parallel_map(seeds, [&](const std::uint64_t& s) {
    const auto r = stab::build_z3_toric_code(L, s, opts);
    return std::pair{toric_report_json(r.report),
                     s == seeds.front() ? stab::to_json(r.transcript) : json(nullptr)};
  });
  std::size_t ok = 0;
  for (const auto& r : results) ok += r.first.at("all_checks").get<bool>() ? 1 : 0;
  provenance["runs_verified"] = "derived";
  provenance["first_run.report"] = "derived";
  return {{"L", L},
          {"runs", seeds.size()},
          {"runs_verified", ok},
          {"all_verified", ok == seeds.size()},
          {"first_run",
           {{"seed", seeds.front()}, {"report", results.front().first},
            {"transcript", results.front().second}}}};
}

// ---- criticality ----------------------------------------------------------

crit::Observable observable_for(const std::string& name, crit::Model model) {
  if (name == "auto") {
    return model == crit::Model::kXxz ? crit::Observable::kZZ : crit::Observable::kPottsShift;
  }
  if (name == "zz") return crit::Observable::kZZ;
  if (name == "xx") return crit::Observable::kXX;
  if (name == "potts_order") return crit::Observable::kPottsOrder;
  if (name == "potts_shift") return crit::Observable::kPottsShift;
  throw ConfigError("unknown observable '" + name + "'");
}

json correlator_json(const qdyn::StateVector& state, crit::Observable obs, std::size_t n,
                     bool connected) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < n; ++j) pairs.emplace_back(0, j);
  const auto c = crit::correlators(state, obs, pairs, connected);
  json out = json::array();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    out.push_back({{"i", pairs[k].first}, {"j", pairs[k].second}, {"value", complex_json(c[k])}});
  }
  return out;
}

crit::WeakMeasurementSpec weak_spec(const json& w, std::size_t n_sites) {
  crit::WeakMeasurementSpec spec;
  spec.theta = num(w, "theta");
  spec.sites = count_list(w, "sites");
  if (spec.sites.empty()) {
    for (std::size_t i = 0; i < n_sites; ++i) spec.sites.push_back(i);
  }
  if (w.at("ancilla_prep").is_null()) {
    const double eta = num(w, "eta");
    qdyn::CVector prep(2);
    prep << std::cos(eta), std::sin(eta);
    spec.ancilla_prep.push_back(prep);
  } else {
    const json& a = w.at("ancilla_prep");
    if (!a.is_array()) throw ConfigError("'ancilla_prep' must be a list of [re, im] pairs");
    qdyn::CVector prep(static_cast<Eigen::Index>(a.size()));
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (!a[k].is_array() || a[k].size() != 2 || !a[k][0].is_number() || !a[k][1].is_number()) {
        throw ConfigError("'ancilla_prep' entries must be [re, im] pairs");
      }
      prep(static_cast<Eigen::Index>(k)) = {a[k][0].get<double>(), a[k][1].get<double>()};
    }
    spec.ancilla_prep.push_back(prep);
  }
  const std::string coupling = str(w, "coupling");
  if (coupling == "projector") {
    spec.coupling.kind = crit::Coupling::Kind::kProjector;
  } else if (coupling == "v_diagonal") {
    spec.coupling.kind = crit::Coupling::Kind::kVDiagonal;
  } else {
    throw ConfigError("unknown coupling '" + coupling + "'");
  }
  spec.coupling.levels = count_list(w, "levels");
  const std::string policy = str(w, "policy");
  if (policy == "sample") {
    spec.policy.kind = crit::OutcomePolicy::Kind::kSample;
  } else if (policy == "post_select") {
    spec.policy.kind = crit::OutcomePolicy::Kind::kPostSelect;
    for (const auto& v : w.at("pattern")) {
      if (!v.is_number_integer()) throw ConfigError("'pattern' must hold integers");
      spec.policy.pattern.push_back(v.get<int>());
    }
  } else {
    throw ConfigError("unknown policy '" + policy + "'");
  }
  return spec;
}

json run_criticality(const ScenarioConfig& cfg, json& provenance) {
  const json& p = cfg.params;
  crit::EigenOptions eopts;
  eopts.tol = num(p, "eigen_tol");
  eopts.seed = cfg.seed;
  const std::string task = str(p, "task");

  if (task == "gap_scan") {
    const auto rows = crit::potts_gap_scan(count_list(p, "n_list"), num_list(p, "J_over_h"), eopts);
    json series = json::array();
    for (const auto& r : rows) {
      series.push_back({{"n", r.n}, {"J_over_h", r.J_over_h}, {"gap", r.gap}, {"energy", r.energy}});
    }
    provenance["gap_scan"] = "derived";
    return {{"model", "potts3"}, {"boundary", "periodic"}, {"h", 1.0}, {"gap_scan", series}};
  }
  if (task != "ground_state") throw ConfigError("unknown criticality task '" + task + "'");

  crit::SpinChainSpec spec{crit::model_from_string(str(p, "model")), count(p, "n_sites"),
                           num(p, "anisotropy"), num(p, "J"), num(p, "h"),
                           crit::boundary_from_string(str(p, "boundary"))};
  spec.validate();
  const auto H = crit::build_hamiltonian(spec);
  const auto gs = crit::ground_state(H, count(p, "k_states"), eopts);
  const qdyn::StateVector state(crit::chain_space(spec), gs.state);
  const auto obs = observable_for(str(p, "observable"), spec.model);
  const bool connected = p.at("connected").get<bool>();

  json results = {{"model", crit::to_string(spec.model)},
                  {"n_sites", spec.n_sites},
                  {"boundary", crit::to_string(spec.boundary)},
                  {"energy", gs.energy},
                  {"energies", gs.energies},
                  {"gap", gs.gap},
                  {"residual", gs.residual},
                  {"dense", gs.dense},
                  {"correlators", correlator_json(state, obs, spec.n_sites, connected)}};
  if (spec.model == crit::Model::kXxz) results["total_z"] = crit::total_z(state);
  provenance["energy"] = "derived";
  provenance["gap"] = "derived";
  provenance["correlators"] = "derived";

  const json& w = p.at("weak_measurement");
  if (w.at("enabled").get<bool>()) {
    const auto wspec = weak_spec(w, spec.n_sites);
    const auto stats = crit::weak_measure(state, wspec, cfg.seed);
    json dist = json::array();
    for (const auto& [pattern, prob] : stats.outcome_probabilities) {
      dist.push_back({{"pattern", pattern}, {"probability", prob}});
    }
    results["weak_measurement"] = {
        {"selected_pattern", stats.selected_pattern},
        {"success_probability", stats.success_probability},
        {"completeness_error", stats.completeness_error},
        {"outcome_distribution", dist},
        {"correlators", correlator_json(stats.selected_state, obs, spec.n_sites, connected)}};
    if (spec.dim() <= 1024) {
      results["weak_measurement"]["channel_perturbation"] = crit::channel_perturbation(state, wspec);
    }
    provenance["weak_measurement"] = "derived";
  }
  return results;
}

}  // namespace

const char* artifact_version() { return HAMOL_VERSION_STRING; }

json run_scenario(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  json provenance = json::object();
  json results;
  if (cfg.scenario == "gate-sim") {
    results = run_gate_sim(cfg, provenance);
  } else if (cfg.scenario == "budget") {
    results = run_budget(cfg, provenance);
  } else if (cfg.scenario == "ghz") {
    results = run_ghz(cfg, provenance);
  } else if (cfg.scenario == "toric") {
    results = run_toric(cfg, provenance);
  } else if (cfg.scenario == "criticality") {
    results = run_criticality(cfg, provenance);
  } else {
    throw ConfigError("unknown scenario '" + cfg.scenario + "'");
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {{"artifact", {{"name", "hamol"}, {"version", artifact_version()}}},
          {"config", cfg.to_json()},
          {"results", results},
          {"provenance", provenance},
          {"timing", {{"wall_seconds", wall}, {"threads", sweep_thread_count()}}}};
}

std::pair<int, json> describe_current_exception() {
  const auto record = [](int code, const char* kind, const char* what) {
    return std::pair{code, json{{"error", {{"kind", kind}, {"message", what}, {"exit_code", code}}}}};
  };
  try {
    throw;
  } catch (const ConfigError& e) {
    return record(kExitConfig, "config", e.what());
  } catch (const InvalidArgument& e) {
    return record(kExitConfig, "config", e.what());
  } catch (const json::exception& e) {
    return record(kExitConfig, "config", e.what());
  } catch (const NumericalError& e) {
    return record(kExitNumerical, "numerical", e.what());
  } catch (const InvariantError& e) {
    return record(kExitInvariant, "invariant", e.what());
  } catch (const std::exception& e) {
    return record(kExitFailure, "internal", e.what());
  } catch (...) {
    return record(kExitFailure, "internal", "unknown error");
  }
}

}  // namespace hamol::cli
