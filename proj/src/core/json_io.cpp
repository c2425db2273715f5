#include "core/json_io.hpp"

namespace hamcay {

using nlohmann::json;

json spec_to_json(const GroupSpec& spec) {
  json j;
  j["format"] = 1;
  if (auto* c = std::get_if<CyclicSpec>(&spec.kind)) {
    j["type"] = "cyclic";
    j["n"] = c->n;
  } else if (auto* d = std::get_if<DirectProductSpec>(&spec.kind)) {
    j["type"] = "direct_product";
    json factors = json::array();
    for (const auto& f : d->factors) factors.push_back(spec_to_json(f));
    j["factors"] = std::move(factors);
  } else if (auto* s = std::get_if<SemidirectCyclicSpec>(&spec.kind)) {
    j["type"] = "semidirect_cyclic";
    j["m"] = s->m;
    j["p"] = s->p;
    j["u"] = s->u;
  } else if (auto* m = std::get_if<SemidirectMetacyclicSpec>(&spec.kind)) {
    j["type"] = "semidirect_metacyclic";
    j["alpha"] = m->alpha;
    j["beta"] = m->beta;
    j["p"] = m->p;
    j["r"] = m->r;
  } else if (auto* p = std::get_if<PermutationSpec>(&spec.kind)) {
    j["type"] = "permutation";
    j["degree"] = p->degree;
    j["generators"] = p->generators;
  } else if (auto* t = std::get_if<TableSpec>(&spec.kind)) {
    j["type"] = "table";
    j["order"] = t->order;
    j["table"] = t->table;
  }
  return j;
}

GroupSpec spec_from_json(const json& j) {
  try {
    std::string type = j.at("type").get<std::string>();
    if (type == "cyclic") return GroupSpec{CyclicSpec{j.at("n").get<long long>()}};
    if (type == "direct_product") {
      DirectProductSpec d;
      for (const auto& f : j.at("factors")) d.factors.push_back(spec_from_json(f));
      return GroupSpec{std::move(d)};
    }
    if (type == "semidirect_cyclic")
      return GroupSpec{SemidirectCyclicSpec{j.at("m").get<long long>(), j.at("p").get<long long>(),
                                            j.at("u").get<long long>()}};
    if (type == "semidirect_metacyclic")
      return GroupSpec{SemidirectMetacyclicSpec{j.at("alpha").get<long long>(),
                                                j.at("beta").get<long long>(),
                                                j.at("p").get<long long>(),
                                                j.at("r").get<long long>()}};
    if (type == "permutation") {
      PermutationSpec p;
      p.degree = j.at("degree").get<int>();
      p.generators = j.at("generators").get<std::vector<std::vector<int>>>();
      return GroupSpec{std::move(p)};
    }
    if (type == "table") {
      TableSpec t;
      t.order = j.at("order").get<int>();
      t.table = j.at("table").get<std::vector<std::vector<int>>>();
      return GroupSpec{std::move(t)};
    }
    fail(errc::parse_error, "unknown group spec type: " + type);
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("malformed group spec: ") + e.what());
  }
}

json element_to_json(const FiniteGroup& g, int e) {
  if (std::holds_alternative<TableSpec>(g.spec().kind)) return g.coords(e)[0];
  return g.coords(e);
}

int element_from_json(const FiniteGroup& g, const json& j) {
  std::vector<int> coords;
  try {
    if (j.is_number_integer()) {
      coords = {j.get<int>()};
    } else {
      coords = j.get<std::vector<int>>();
    }
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("malformed element: ") + e.what());
  }
  auto idx = g.find_coords(coords);
  if (!idx) fail(errc::parse_error, "coordinates do not name a group element");
  return *idx;
}

json certificate_to_json(const CayleyDigraph& d, const Certificate& c) {
  json j;
  j["format"] = 1;
  j["group"] = spec_to_json(d.group().spec());
  json gens = json::array();
  for (int s = 0; s < d.num_generators(); ++s)
    gens.push_back(element_to_json(d.group(), d.generator(s)));
  j["generators"] = std::move(gens);
  j["start"] = element_to_json(d.group(), c.start);
  j["labels"] = c.labels;
  j["kind"] = c.kind == Certificate::Kind::path ? "path" : "cycle";
  return j;
}

LoadedCertificate certificate_from_json(const json& j) {
  LoadedCertificate out;
  try {
    out.group = FiniteGroup::build(spec_from_json(j.at("group")));
    for (const auto& e : j.at("generators"))
      out.generators.push_back(element_from_json(*out.group, e));
    out.cert.start = element_from_json(*out.group, j.at("start"));
    out.cert.labels = j.at("labels").get<std::vector<int>>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "path" && kind != "cycle") fail(errc::parse_error, "kind must be path or cycle");
    out.cert.kind = kind == "path" ? Certificate::Kind::path : Certificate::Kind::cycle;
  } catch (const json::exception& e) {
    fail(errc::parse_error, std::string("malformed certificate: ") + e.what());
  }
  return out;
}

json report_to_json(const CayleyDigraph& d, const SearchReport& r, const std::string& kind) {
  json j;
  j["format"] = 1;
  j["kind"] = kind;
  j["method"] = r.method;
  switch (r.verdict) {
    case Verdict::yes: j["verdict"] = "exists"; break;
    case Verdict::no: j["verdict"] = "not_exists"; break;
    case Verdict::unknown: j["verdict"] = "unknown"; break;
  }
  j["stats"] = {{"nodes", r.stats.nodes}, {"patterns", r.stats.patterns}};
  if (r.certificate) {
    j["certificate"] = certificate_to_json(d, *r.certificate);
  } else {
    j["certificate"] = nullptr;
  }
  return j;
}

LoadedDigraph digraph_from_json(const json& spec_json, const json* gens_json) {
  LoadedDigraph out;
  const json* spec = &spec_json;
  const json* gens = gens_json;
  if (spec_json.is_object() && spec_json.contains("group")) {
    // combined {"group": ..., "generators": [...]} document
    spec = &spec_json.at("group");
    if (!gens && spec_json.contains("generators")) gens = &spec_json.at("generators");
  }
  out.group = FiniteGroup::build(spec_from_json(*spec));
  if (gens) {
    for (const auto& e : *gens) out.generators.push_back(element_from_json(*out.group, e));
  }
  return out;
}

}  // namespace hamcay
