#include "hamcay.h"

#include <cstring>
#include <fstream>

#include "core/abelian3.hpp"
#include "core/construct.hpp"
#include "core/families.hpp"
#include "core/json_io.hpp"
#include "core/search.hpp"
#include "core/survey.hpp"

using nlohmann::json;
using namespace hamcay;

struct hc_group {
  GroupPtr g;
};
struct hc_digraph {
  std::shared_ptr<CayleyDigraph> d;
};

namespace {

thread_local std::string t_last_error;

hc_status status_of(const error& e) {
  switch (e.code()) {
    case errc::parse_error: return HC_EPARSE;
    case errc::invalid_spec:
    case errc::invalid_action:
    case errc::not_primitive_root:
    case errc::identity_in_s:
    case errc::duplicate_generator:
    case errc::bad_prime: return HC_EINVALID_SPEC;
    case errc::not_a_group: return HC_ENOT_A_GROUP;
    case errc::budget_exceeded:
    case errc::pattern_limit: return HC_EBUDGET;
    case errc::condition_failed: return HC_ENOT_FOUND;
    case errc::io_error: return HC_EIO;
    case errc::not_normal:
    case errc::not_two_generated:
    case errc::not_connected:
    case errc::not_abelian:
    case errc::not_generating:
    case errc::commutator_not_contained:
    case errc::not_ham_cycle_in_quotient:
    case errc::skewed_set_not_generating:
    case errc::inner_cycle_not_found:
    case errc::not_cyclic_normal:
    case errc::precondition_failed:
    case errc::arc_not_in_digraph:
    case errc::improvement_stalled: return HC_EPRECONDITION;
    default: return HC_ERROR;
  }
}

template <typename F>
hc_status guarded(F&& f) {
  try {
    return f();
  } catch (const error& e) {
    t_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return HC_ERROR;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json parse(const char* text, const char* what) {
  if (!text) fail(errc::parse_error, std::string(what) + " is null");
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, std::string("invalid JSON in ") + what);
  return j;
}

}  // namespace

extern "C" {

const char* hc_last_error(void) { return t_last_error.c_str(); }

void hc_string_free(char* s) { std::free(s); }

hc_status hc_group_from_json(const char* spec_json, hc_group** out) {
  return guarded([&] {
    auto spec = spec_from_json(parse(spec_json, "group spec"));
    *out = new hc_group{FiniteGroup::build(spec)};
    return HC_OK;
  });
}

hc_status hc_group_to_json(const hc_group* g, char** out_json) {
  return guarded([&] {
    *out_json = dup_string(spec_to_json(g->g->spec()).dump());
    return HC_OK;
  });
}

int hc_group_order(const hc_group* g) { return g ? g->g->order() : -1; }

void hc_group_free(hc_group* g) { delete g; }

hc_status hc_digraph_new(const hc_group* g, const char* gens_json, hc_digraph** out) {
  return guarded([&] {
    json jg = parse(gens_json, "generators");
    std::vector<int> gens;
    for (const auto& e : jg) gens.push_back(element_from_json(*g->g, e));
    *out = new hc_digraph{std::make_shared<CayleyDigraph>(g->g, gens)};
    return HC_OK;
  });
}

int hc_digraph_connected(const hc_digraph* d) { return d && d->d->connected() ? 1 : 0; }

void hc_digraph_free(hc_digraph* d) { delete d; }

hc_status hc_digraph_load(const char* doc_json, const char* gens_json, hc_group** out_group,
                          hc_digraph** out_digraph) {
  return guarded([&] {
    json doc = parse(doc_json, "document");
    std::optional<json> gens;
    if (gens_json) gens = parse(gens_json, "generators");
    auto loaded = digraph_from_json(doc, gens ? &*gens : nullptr);
    if (loaded.generators.empty() && !(gens && gens->is_array() && gens->empty()))
      fail(errc::parse_error, "no generators given");
    *out_group = new hc_group{loaded.group};
    *out_digraph = new hc_digraph{std::make_shared<CayleyDigraph>(loaded.group, loaded.generators)};
    return HC_OK;
  });
}

hc_status hc_decide(const hc_digraph* dd, const char* options_json, char** report_json) {
  return guarded([&] {
    const CayleyDigraph& d = *dd->d;
    json opt = options_json ? parse(options_json, "options") : json::object();
    std::string kind = opt.value("kind", "path");
    std::string method = opt.value("method", "auto");
    bool sharp = opt.value("sharp", false);
    DfsOptions dfs_opt;
    dfs_opt.node_cap = opt.value("node_cap", dfs_opt.node_cap);

    SearchReport rep;
    if (kind == "cycle") {
      if (method == "structured")
        fail(errc::parse_error, "the travel-pattern search decides paths only");
      rep = dfs_ham_cycle(d, dfs_opt);
    } else if (method == "dfs") {
      std::optional<int> start;
      if (opt.contains("start")) start = element_from_json(d.group(), opt.at("start"));
      rep = dfs_ham_path(d, start, dfs_opt);
    } else if (method == "structured") {
      rep = structured_ham_path_2gen(d);
    } else if (method == "auto") {
      if (d.num_generators() == 2 &&
          milnor_test(d.group(), d.generator(0), d.generator(1), sharp) ==
              MilnorVerdict::no_path) {
        rep.verdict = Verdict::no;
        rep.method = sharp ? "milnor-sharp" : "milnor";
      } else if (d.num_generators() == 2 && d.connected()) {
        try {
          rep = structured_ham_path_2gen(d);
          rep.method = "auto:structured";
        } catch (const error& e) {
          if (e.code() != errc::pattern_limit) throw;
          rep = dfs_ham_path(d, std::nullopt, dfs_opt);
          rep.method = "auto:dfs";
        }
      } else {
        rep = dfs_ham_path(d, std::nullopt, dfs_opt);
        rep.method = "auto:dfs";
      }
    } else {
      fail(errc::parse_error, "unknown method: " + method);
    }
    *report_json = dup_string(report_to_json(d, rep, kind).dump());
    return rep.verdict == Verdict::unknown ? HC_EBUDGET : HC_OK;
  });
}

hc_status hc_construct(const hc_digraph* dd, const char* options_json, char** cert_json) {
  return guarded([&] {
    const CayleyDigraph& d = *dd->d;
    json opt = parse(options_json, "options");
    std::string method = opt.at("method").get<std::string>();
    Certificate cert;
    if (method == "abelian") {
      cert = abelian_ham_path(d);
    } else if (method == "rankin") {
      if (d.num_generators() != 2) fail(errc::not_two_generated, "rankin needs |S| = 2");
      auto w = rankin_decide(d.group(), d.generator(0), d.generator(1));
      if (!w) fail(errc::condition_failed, "no (k,l) witness: the digraph has no hamiltonian cycle");
      cert = rankin_cycle(d, *w);
    } else if (method == "fgl") {
      if (!opt.contains("subgroup")) fail(errc::parse_error, "fgl needs \"subgroup\"");
      std::vector<int> ngens;
      for (const auto& e : opt.at("subgroup")) ngens.push_back(element_from_json(d.group(), e));
      Subgroup n = subgroup_generated(d.group(), ngens);
      // enumerate quotient hamiltonian cycles until the lifting criterion holds
      CosetDigraph q = coset_quotient_digraph(d, n);
      std::optional<Certificate> found;
      std::function<bool(std::vector<int>&, std::vector<char>&, int)> rec =
          [&](std::vector<int>& labels, std::vector<char>& seen, int cur) {
            if (static_cast<int>(labels.size()) == q.order() - 1) {
              for (int s = 0; s < d.num_generators(); ++s)
                if (q.succ[s][cur] == q.coset_of[0]) {
                  labels.push_back(s);
                  auto res = factor_group_cycle(d, n, labels);
                  labels.pop_back();
                  if (res.ok) {
                    found = res.cycle;
                    return true;
                  }
                }
              return false;
            }
            for (int s = 0; s < d.num_generators(); ++s) {
              int nxt = q.succ[s][cur];
              if (seen[nxt]) continue;
              seen[nxt] = 1;
              labels.push_back(s);
              if (rec(labels, seen, nxt)) return true;
              labels.pop_back();
              seen[nxt] = 0;
            }
            return false;
          };
      std::vector<int> labels;
      std::vector<char> seen(q.order(), 0);
      seen[q.coset_of[0]] = 1;
      if (q.order() == 1) {
        // quotient is a point: any single generating loop unwinds to the cycle
        for (int s = 0; s < d.num_generators() && !found; ++s) {
          std::vector<int> one{s};
          auto res = factor_group_cycle(d, n, one);
          if (res.ok) found = res.cycle;
        }
      } else {
        rec(labels, seen, q.coset_of[0]);
      }
      if (!found)
        fail(errc::condition_failed, "no quotient cycle satisfies the factor-group criterion");
      cert = *found;
    } else if (method == "small-commutator") {
      cert = small_commutator_path(d);
    } else if (method == "abelian3") {
      if (!opt.contains("k")) fail(errc::parse_error, "abelian3 needs \"k\"");
      int k = element_from_json(d.group(), opt.at("k"));
      if (d.num_generators() != 3) fail(errc::precondition_failed, "abelian3 needs |S| = 3");
      // generators must be (a, b, b+k)
      int a = d.generator(0), b = d.generator(1);
      if (d.generator(2) != d.group().mul(b, k))
        fail(errc::precondition_failed, "generators must be (a, b, b+k)");
      std::ofstream trace;
      if (opt.contains("trace")) {
        trace.open(opt.at("trace").get<std::string>(), std::ios::binary);
        if (!trace) fail(errc::io_error, "cannot open trace file");
      }
      cert = abelian3_ham_cycle(d.group_ptr(), a, b, k, trace.is_open() ? &trace : nullptr);
    } else {
      fail(errc::parse_error, "unknown method: " + method);
    }
    auto v = verify_certificate(d, cert);
    if (!v.ok) fail(errc::internal, "refusing to emit unverified certificate: " + v.reason);
    *cert_json = dup_string(certificate_to_json(d, cert).dump());
    return HC_OK;
  });
}

hc_status hc_verify(const char* cert_json, char** result_json) {
  return guarded([&] {
    auto loaded = certificate_from_json(parse(cert_json, "certificate"));
    CayleyDigraph d(loaded.group, loaded.generators);
    auto v = verify_certificate(d, loaded.cert);
    json out;
    out["ok"] = v.ok;
    out["reason"] = v.reason;
    out["step"] = v.step;
    *result_json = dup_string(out.dump());
    return HC_OK;
  });
}

hc_status hc_export_dot(const hc_digraph* dd, const char* names_json, char** dot_text) {
  return guarded([&] {
    std::vector<std::string> names;
    if (names_json) names = parse(names_json, "names").get<std::vector<std::string>>();
    *dot_text = dup_string(to_dot(*dd->d, names));
    return HC_OK;
  });
}

hc_status hc_family(const char* name, const char* params_json, char** out_json) {
  return guarded([&] {
    std::string n = name ? name : "";
    json p = params_json ? parse(params_json, "params") : json::object();
    auto pack = [](const FamilyInstance& inst) {
      json j;
      j["format"] = 1;
      j["name"] = inst.name;
      j["group"] = spec_to_json(inst.spec);
      auto g = FiniteGroup::build(inst.spec);
      json gens = json::array();
      for (const auto& c : inst.gen_coords)
        gens.push_back(element_to_json(*g, resolve_element(*g, c)));
      j["generators"] = std::move(gens);
      return j;
    };
    json out;
    if (n == "metacyclic") {
      out = pack(metacyclic_family(p.at("p").get<long long>(), p.at("n").get<long long>(),
                                   p.value("unsafe_any_prime", false)));
    } else if (n == "z12z5") {
      out = pack(z12_z5_example());
    } else if (n == "a4z2") {
      out = pack(a4_z2_example());
    } else if (n == "lw12k") {
      out = pack(locke_witte_12k(p.at("k").get<long long>()));
    } else if (n == "lw2k") {
      out = pack(locke_witte_2k(p.at("a").get<long long>(), p.at("b").get<long long>(),
                                p.at("k").get<long long>()));
    } else if (n == "milnor") {
      out = json::array();
      for (const auto& inst : milnor_instances(p.value("max_order", 72))) out.push_back(pack(inst));
    } else {
      fail(errc::parse_error, "unknown family: " + n);
    }
    *out_json = dup_string(out.dump());
    return HC_OK;
  });
}

hc_status hc_survey(const char* options_json, const char* out_path) {
  return guarded([&] {
    json opt = options_json ? parse(options_json, "options") : json::object();
    SurveyOptions so;
    so.max_order = opt.value("max_order", so.max_order);
    so.workers = opt.value("workers", so.workers);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) fail(errc::io_error, std::string("cannot open ") + out_path);
    run_survey(so, out);
    if (!out.good()) fail(errc::io_error, "write failure");
    return HC_OK;
  });
}

}  // extern "C"
