#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "udm/dieudonne.hpp"
#include "udm/strata.hpp"

namespace udm {

inline constexpr int kModuleSchemaVersion = 1;

inline const std::vector<std::string>& canonical_module_ids() {
  static const std::vector<std::string> ids = {"mu-ordinary", "gss-braid", "ssp"};
  return ids;
}

inline DieudonneLattice canonical_lattice(const std::string& id, const RingPtr& R) {
  if (id == "mu-ordinary") return make_mu_ordinary_lattice(R);
  if (id == "gss-braid") return make_gss_braid_lattice(R);
  if (id == "ssp") return make_ssp_lattice(R);
  throw std::invalid_argument("unknown module id '" + id + "'");
}

namespace detail {

inline nlohmann::json matrix_json(const GaloisRing& R, const GRMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(R.coeffs(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

inline GRMatrix matrix_from_json(const GaloisRing& R, const nlohmann::json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw std::invalid_argument("matrix has the wrong number of rows");
  GRMatrix m(n, n, R.zero());
  for (std::size_t r = 0; r < n; ++r) {
    if (!j[r].is_array() || j[r].size() != n) throw std::invalid_argument("matrix row has the wrong length");
    for (std::size_t c = 0; c < n; ++c) {
      const auto coeffs = j[r][c].get<std::vector<int>>();
      if (static_cast<int>(coeffs.size()) != R.degree()) throw std::invalid_argument("entry has the wrong degree");
      for (int x : coeffs)
        if (x < 0 || x >= R.modulus()) throw std::invalid_argument("coefficient out of range");
      m(r, c) = R.from_coeffs(coeffs);
    }
  }
  return m;
}

}  // namespace detail

// Entries are coefficient vectors over Z/p^2 in the power basis of the Galois ring.
inline nlohmann::json module_to_json(const std::string& id, const DieudonneLattice& L) {
  const GaloisRing& R = L.ring();
  const Field& k = R.residue_field();
  nlohmann::json j;
  j["schema"] = kModuleSchemaVersion;
  j["id"] = id;
  j["p"] = k.p();
  j["field_degree"] = k.degree();
  j["modulus"] = k.modulus();
  j["precision"] = R.n();
  nlohmann::json g = nlohmann::json::array();
  for (Grade x : L.grading()) g.push_back(grade_name(x));
  j["grading"] = g;
  j["F"] = detail::matrix_json(R, L.F_matrix());
  j["V"] = detail::matrix_json(R, L.V_matrix());
  if (L.has_pairing()) j["pairing"] = detail::matrix_json(R, L.pairing());
  return j;
}

struct LoadedModule {
  std::string id;
  DieudonneLattice lattice;
};

inline LoadedModule module_from_json(const nlohmann::json& j) {
  if (j.value("schema", 0) != kModuleSchemaVersion) throw std::invalid_argument("unsupported module schema");
  const int p = j.at("p").get<int>(), d = j.at("field_degree").get<int>();
  auto k = Field::make(p, d);
  if (j.at("modulus").get<Poly>() != k->modulus()) throw std::invalid_argument("field modulus does not match");
  if (j.at("precision").get<int>() != 2) throw std::invalid_argument("only precision 2 is supported");
  auto R = GaloisRing::make(k, 2);
  Grading g;
  for (const auto& x : j.at("grading")) {
    const auto s = x.get<std::string>();
    if (s == grade_name(Grade::Sigma)) g.push_back(Grade::Sigma);
    else if (s == grade_name(Grade::SigmaBar)) g.push_back(Grade::SigmaBar);
    else throw std::invalid_argument("unknown grade '" + s + "'");
  }
  const std::size_t n = g.size();
  std::optional<GRMatrix> form;
  if (j.contains("pairing")) form = detail::matrix_from_json(*R, j["pairing"], n);
  return {j.at("id").get<std::string>(),
          DieudonneLattice(R, g, detail::matrix_from_json(*R, j.at("F"), n), detail::matrix_from_json(*R, j.at("V"), n), form)};
}

inline std::string dump_module(const std::string& id, const DieudonneLattice& L) { return module_to_json(id, L).dump(2) + "\n"; }

inline LoadedModule load_module(const std::string& text) { return module_from_json(nlohmann::json::parse(text)); }

}  // namespace udm
