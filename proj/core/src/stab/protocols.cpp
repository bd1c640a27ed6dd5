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

#include "hamol/stab/protocols.hpp"

#include <algorithm>
#include <string>

#include "hamol/error.hpp"

namespace hamol::stab {
namespace {

// Solves A·v ≡ r (mod d) for prime d; free variables are zero.
std::optional<std::vector<int>> solve_mod(std::vector<std::vector<int>> a, std::vector<int> r,
                                          std::size_t n_vars, int d) {
  const std::size_t rows = a.size();
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_vars && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    std::swap(r[p], r[rank]);
    const int inv = inverse_mod(a[rank][c], d);
    for (auto& v : a[rank]) v = mod(v * inv, d);
    r[rank] = mod(r[rank] * inv, d);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || a[i][c] == 0) continue;
      const int f = a[i][c];
      for (std::size_t k = 0; k < n_vars; ++k) a[i][k] = mod(a[i][k] - f * a[rank][k], d);
      r[i] = mod(r[i] - f * r[rank], d);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (r[i] != 0) return std::nullopt;
  }
  std::vector<int> v(n_vars, 0);
  for (std::size_t i = 0; i < rank; ++i) v[pivot_col[i]] = r[i];
  return v;
}

void record_cz(ProtocolTranscript& t, QuditTableau& tab, std::size_t a, std::size_t b, int power) {
  tab.apply_czd(a, b, power);
  t.gates.push_back({"czd", {a, b}, mod(power, tab.d())});
}

}  // namespace

nlohmann::json to_json(const ProtocolTranscript& t) {
  nlohmann::json gates = nlohmann::json::array();
  for (const auto& g : t.gates) gates.push_back({{"gate", g.gate}, {"sites", g.sites}, {"power", g.power}});
  nlohmann::json meas = nlohmann::json::array();
  for (const auto& m : t.measurements) {
    meas.push_back({{"site", m.site},
                    {"basis", std::string(1, m.basis)},
                    {"outcome", m.outcome},
                    {"was_random", m.was_random}});
  }
  nlohmann::json corr = nlohmann::json::array();
  for (const auto& c : t.feedforward.corrections) {
    corr.push_back({{"site", c.site}, {"x_power", c.x_power}, {"z_power", c.z_power}});
  }
  return {{"protocol", t.protocol}, {"d", t.d},           {"n_sites", t.n_sites},
          {"gates", gates},         {"measurements", meas}, {"feedforward", corr}};
}

FeedforwardPlan solve_feedforward(const QuditTableau& tab, const std::vector<Pauli>& targets,
                                  const std::vector<std::size_t>& sites, bool allow_x,
                                  bool allow_z) {
  const int d = tab.d();
  if (!allow_x && !allow_z) throw InvalidArgument("solve_feedforward: no correction type allowed");
  for (auto s : sites) {
    if (s >= tab.n()) throw InvalidArgument("solve_feedforward: site out of range");
  }
  // Variables: a_s (X power) then b_s (Z power) per site, if allowed.
  // Conjugating g by X^a Z^b shifts its ω-phase by Σ (b·x − a·z).
  const std::size_t per = (allow_x ? 1 : 0) + (allow_z ? 1 : 0);
  const std::size_t n_vars = per * sites.size();
  std::vector<std::vector<int>> a;
  std::vector<int> r;
  for (const auto& t : targets) {
    const auto q = tab.group_phase(t);
    if (!q) {
      throw InvariantError("feedforward target " + t.to_string() +
                           " is not in the stabilizer group up to phase");
    }
    const int shift = mod(t.phase() - *q, 2 * d);
    if (shift % 2 != 0) throw InvariantError("feedforward target has an odd phase offset");
    std::vector<int> row(n_vars, 0);
    for (std::size_t k = 0; k < sites.size(); ++k) {
      std::size_t col = per * k;
      if (allow_x) row[col++] = mod(-t.z(sites[k]), d);
      if (allow_z) row[col] = t.x(sites[k]);
    }
    a.push_back(std::move(row));
    r.push_back(mod(shift / 2, d));
  }
  const auto sol = solve_mod(std::move(a), std::move(r), n_vars, d);
  if (!sol) throw NumericalError("feedforward: no Pauli correction reaches the targets");

  FeedforwardPlan plan;
  for (std::size_t k = 0; k < sites.size(); ++k) {
    std::size_t col = per * k;
    Correction c{sites[k], 0, 0};
    if (allow_x) c.x_power = (*sol)[col++];
    if (allow_z) c.z_power = (*sol)[col];
    if (c.x_power != 0 || c.z_power != 0) plan.corrections.push_back(c);
  }
  return plan;
}

void apply_feedforward(QuditTableau& tab, const FeedforwardPlan& plan) {
  for (const auto& c : plan.corrections) {
    if (c.x_power != 0) tab.apply_x(c.site, c.x_power);
    if (c.z_power != 0) tab.apply_z(c.site, c.z_power);
  }
}

// ---- GHZ -------------------------------------------------------------------

std::vector<SiteRole> ghz_chain_layout(std::size_t n_molecules) {
  if (n_molecules < 2) throw InvalidArgument("GHZ chain needs at least 2 molecules");
  std::vector<SiteRole> out;
  for (std::size_t i = 0; i < 2 * n_molecules - 1; ++i) {
    out.push_back({i, i % 2 == 0 ? Role::kMolecule : Role::kAtom});
  }
  return out;
}

std::vector<Pauli> ghz_generators(int d, std::size_t n) {
  require_supported_dimension(d);
  if (n < 1) throw InvalidArgument("ghz_generators: n must be >= 1");
  std::vector<Pauli> gens;
  Pauli all_x(d, n);
  for (std::size_t i = 0; i < n; ++i) all_x.set_x(i, 1);
  gens.push_back(all_x);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    Pauli zz(d, n);
    zz.set_z(i, 1);
    zz.set_z(i + 1, -1);
    gens.push_back(zz);
  }
  return gens;
}

QuditTableau ghz_tableau(int d, std::size_t n) { return QuditTableau(d, ghz_generators(d, n)); }

GhzResult run_ghz_protocol(int d, std::size_t n_molecules, std::uint64_t seed,
                           const ProtocolOptions& opts) {
  require_supported_dimension(d);
  const auto layout = ghz_chain_layout(n_molecules);
  const std::size_t n = layout.size();

  QuditTableau tab = init_plus(d, n);
  tab.set_debug_checks(opts.debug_checks);
  ProtocolTranscript tr;
  tr.protocol = "ghz";
  tr.d = d;
  tr.n_sites = n;

  for (std::size_t atom = 1; atom < n; atom += 2) record_cz(tr, tab, atom, atom - 1, 1);
  for (std::size_t atom = 1; atom < n; atom += 2) record_cz(tr, tab, atom, atom + 1, -1);

  std::mt19937_64 rng(seed);
  std::vector<std::size_t> molecules;
  for (const auto& s : layout) {
    if (s.role == Role::kAtom) {
      tr.measurements.push_back(tab.measure_x(s.index, rng));
    } else {
      molecules.push_back(s.index);
    }
  }

  QuditTableau mol = tab.restrict_to(molecules);
  std::vector<std::size_t> mol_sites(n_molecules);
  for (std::size_t i = 0; i < n_molecules; ++i) mol_sites[i] = i;
  const FeedforwardPlan plan =
      solve_feedforward(mol, ghz_generators(d, n_molecules), mol_sites, true, false);
  apply_feedforward(mol, plan);
  tr.feedforward = plan;

  if (opts.debug_checks && !verify_ghz(mol)) {
    throw InvariantError("GHZ protocol: corrected state is not the GHZ state");
  }
  return {std::move(mol), tr.measurements, plan, std::move(tr)};
}

bool verify_ghz(const QuditTableau& tab) {
  if (tab.n() < 1 || tab.rank() != tab.n()) return false;
  return tab.same_group(ghz_tableau(tab.d(), tab.n()));
}

// ---- toric code --------------------------------------------------------------

ToricLattice::ToricLattice(std::size_t L) : L_(L) {
  if (L < 2 || L > 3) throw InvalidArgument("toric code: L must be 2 or 3");
}

std::size_t ToricLattice::h_edge(std::size_t x, std::size_t y) const {
  return (y % L_) * L_ + (x % L_);
}

std::size_t ToricLattice::v_edge(std::size_t x, std::size_t y) const {
  return L_ * L_ + (y % L_) * L_ + (x % L_);
}

std::vector<std::pair<std::size_t, int>> ToricLattice::face_boundary(std::size_t face) const {
  if (face >= n_faces()) throw InvalidArgument("face out of range");
  const std::size_t x = face % L_;
  const std::size_t y = face / L_;
  return {{h_edge(x, y), +1}, {v_edge(x + 1, y), +1}, {h_edge(x, y + 1), -1}, {v_edge(x, y), -1}};
}

std::vector<std::pair<std::size_t, int>> ToricLattice::vertex_star(std::size_t vertex) const {
  if (vertex >= n_vertices()) throw InvalidArgument("vertex out of range");
  const std::size_t x = vertex % L_;
  const std::size_t y = vertex / L_;
  return {{h_edge(x, y), +1},
          {v_edge(x, y), +1},
          {h_edge(x + L_ - 1, y), -1},
          {v_edge(x, y + L_ - 1), -1}};
}

std::vector<Pauli> ToricLattice::vertex_operators(int d) const {
  std::vector<Pauli> out;
  for (std::size_t v = 0; v < n_vertices(); ++v) {
    Pauli p(d, n_edges());
    for (auto [e, eta] : vertex_star(v)) p.set_x(e, p.x(e) + eta);
    out.push_back(p);
  }
  return out;
}

std::vector<Pauli> ToricLattice::plaquette_operators(int d) const {
  std::vector<Pauli> out;
  for (std::size_t f = 0; f < n_faces(); ++f) {
    Pauli p(d, n_edges());
    for (auto [e, eps] : face_boundary(f)) p.set_z(e, p.z(e) + eps);
    out.push_back(p);
  }
  return out;
}

ToricReport verify_toric_code(const QuditTableau& edges, const ToricLattice& lattice) {
  if (edges.n() != lattice.n_edges()) throw DimensionError("toric verify: register size mismatch");
  const int d = edges.d();
  const auto av = lattice.vertex_operators(d);
  const auto bp = lattice.plaquette_operators(d);

  ToricReport rep;
  std::vector<Pauli> all = av;
  all.insert(all.end(), bp.begin(), bp.end());
  rep.checks_total = all.size();
  rep.checks_passed = static_cast<std::size_t>(
      std::count_if(all.begin(), all.end(), [&](const Pauli& p) { return edges.contains(p); }));
  rep.all_checks = rep.checks_passed == rep.checks_total;
  rep.stabilizer_rank = symplectic_rank(all);
  rep.logical_dimension = 1;
  for (std::size_t i = rep.stabilizer_rank; i < lattice.n_edges(); ++i) {
    rep.logical_dimension *= static_cast<std::size_t>(d);
  }
  const Pauli id(d, lattice.n_edges());
  Pauli prod_a = id;
  for (const auto& p : av) prod_a *= p;
  Pauli prod_b = id;
  for (const auto& p : bp) prod_b *= p;
  rep.vertex_product_identity = prod_a == id;
  rep.plaquette_product_identity = prod_b == id;
  return rep;
}

ToricResult build_z3_toric_code(std::size_t L, std::uint64_t seed, const ProtocolOptions& opts) {
  constexpr int d = 3;
  const ToricLattice lat(L);
  const std::size_t ne = lat.n_edges();
  const std::size_t n = ne + lat.n_faces();

  QuditTableau tab = init_plus(d, n);
  tab.set_debug_checks(opts.debug_checks);
  ProtocolTranscript tr;
  tr.protocol = "z3-toric";
  tr.d = d;
  tr.n_sites = n;

  for (std::size_t f = 0; f < lat.n_faces(); ++f) {
    for (auto [e, eps] : lat.face_boundary(f)) record_cz(tr, tab, ne + f, e, eps);
  }
  std::mt19937_64 rng(seed);
  for (std::size_t f = 0; f < lat.n_faces(); ++f) {
    tr.measurements.push_back(tab.measure_x(ne + f, rng));
  }

  std::vector<std::size_t> edge_sites(ne);
  for (std::size_t e = 0; e < ne; ++e) edge_sites[e] = e;
  QuditTableau code = tab.restrict_to(edge_sites);

  std::vector<Pauli> targets = lat.vertex_operators(d);
  const auto bp = lat.plaquette_operators(d);
  targets.insert(targets.end(), bp.begin(), bp.end());
  const FeedforwardPlan plan = solve_feedforward(code, targets, edge_sites, true, false);
  apply_feedforward(code, plan);
  tr.feedforward = plan;

  ToricReport rep = verify_toric_code(code, lat);
  if (opts.debug_checks && !rep.all_checks) {
    throw InvariantError("toric code: corrected state fails a vertex/plaquette check");
  }
  return {std::move(code), tr.measurements, plan, std::move(tr), rep};
}

}  // namespace hamol::stab
