#pragma once

#include <json.hpp>

#include "core/cayley.hpp"
#include "core/search.hpp"

namespace hamcay {

// Tagged-union group specs, e.g. {"format":1,"type":"semidirect_cyclic","m":12,"p":5,"u":3}.
// Elements are coordinate arrays per spec kind (a bare index for table specs).
nlohmann::json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const nlohmann::json& j);

nlohmann::json element_to_json(const FiniteGroup& g, int e);
int element_from_json(const FiniteGroup& g, const nlohmann::json& j);

nlohmann::json certificate_to_json(const CayleyDigraph& d, const Certificate& c);

struct LoadedCertificate {
  GroupPtr group;
  std::vector<int> generators;
  Certificate cert;
};
// Certificates are self-contained: group spec, generators, start, labels, kind.
LoadedCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const CayleyDigraph& d, const SearchReport& r,
                              const std::string& kind);

// Group plus generator list, the shape emitted by family generators.
struct LoadedDigraph {
  GroupPtr group;
  std::vector<int> generators;
};
LoadedDigraph digraph_from_json(const nlohmann::json& spec_json,
                                const nlohmann::json* gens_json);

}  // namespace hamcay
