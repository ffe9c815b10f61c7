#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl2q/classify.hpp"

namespace sl2q {

enum class Format { json, markdown, csv };
Format parse_format(const std::string& text);

// Everything known about one space.
struct Dossier {
  UnipotentClass cls;
  HomotopyReport homotopy;
  std::optional<IdealProfile> ktheory;  // absent for the trivial class
};

Dossier make_dossier(DossierCache& cache, const UnipotentClass& c);

nlohmann::json to_json(const UnipotentClass& c);
nlohmann::json to_json(const HomotopyReport& h);
nlohmann::json to_json(const IdealProfile& k);
nlohmann::json to_json(const Dossier& d);  // {"space", "homotopy", "ktheory"}
nlohmann::json to_json(const SpaceId& a, const SpaceId& b, const Verdict& v);

UnipotentClass class_from_json(const nlohmann::json& j);
HomotopyReport homotopy_from_json(const nlohmann::json& j);
IdealProfile ideal_profile_from_json(const nlohmann::json& j);
Dossier dossier_from_json(const nlohmann::json& j);

bool same_dossier(const Dossier& a, const Dossier& b);

// "(x-2)^3", "x^2", "1" for the ideal ((x - d)^a) over F_p.
std::string format_reduced_ideal(const std::string& var, long d, long p, int a);

// A rectangular table rendered in any format (json: array of objects).
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::string render(Format f) const;
};

std::string render_dossier(const Dossier& d, Format f);
std::string render_verdict(const SpaceId& a, const SpaceId& b, const Verdict& v, Format f);
std::string render_classification(const ClassificationReport& r, Format f);
Table enumerate_table(DossierCache& cache, const std::vector<UnipotentClass>& classes);

// The four case-study tables.
Table b6_orbits_table(DossierCache& cache, const OrbitCatalog& catalog);
Table c6_orbits_table(DossierCache& cache, const OrbitCatalog& catalog);
Table iu_mod_p_table(DossierCache& cache, const OrbitCatalog& catalog);
Table d4_table(long prime_bound);

}  // namespace sl2q
