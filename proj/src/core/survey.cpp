#include "core/survey.hpp"

#include <ostream>
#include <thread>

#include "core/construct.hpp"
#include "core/families.hpp"
#include "core/json_io.hpp"
#include "core/search.hpp"

namespace hamcay {

using nlohmann::json;

namespace {

struct Job {
  int entry;
  int a, b;
};

std::string survey_record(const CatalogEntry& entry, const GroupPtr& g, int a, int b,
                          const SurveyOptions& opt) {
  json rec;
  rec["format"] = 1;
  rec["name"] = entry.name;
  rec["group"] = spec_to_json(entry.spec);
  rec["generators"] = json::array({element_to_json(*g, a), element_to_json(*g, b)});
  CayleyDigraph d(g, {a, b});
  auto verdict_str = [](Verdict v) {
    return v == Verdict::yes ? "exists" : (v == Verdict::no ? "not_exists" : "unknown");
  };

  auto dfs = dfs_ham_path(d, std::nullopt, {opt.dfs_node_cap});
  rec["path_dfs"] = verdict_str(dfs.verdict);
  std::string structured_verdict = "skipped";
  bool agree = true;
  try {
    auto st = structured_ham_path_2gen(d);
    structured_verdict = verdict_str(st.verdict);
    agree = st.verdict == dfs.verdict;
    rec["patterns"] = st.stats.patterns;
  } catch (const error& e) {
    if (e.code() != errc::pattern_limit) throw;
  }
  rec["path_structured"] = structured_verdict;
  rec["agree"] = agree;
  rec["milnor"] =
      milnor_test(*g, a, b) == MilnorVerdict::no_path ? "no_path" : "inconclusive";

  auto cyc = dfs_ham_cycle(d, {opt.dfs_node_cap});
  rec["cycle_dfs"] = verdict_str(cyc.verdict);
  if (g->is_abelian()) {
    auto w = rankin_decide(*g, a, b);
    rec["rankin"] = w ? "cycle" : "no_cycle";
    if ((cyc.verdict == Verdict::yes) != w.has_value()) rec["agree"] = false;
  }
  return rec.dump();
}

}  // namespace

long long run_survey(const SurveyOptions& opt, std::ostream& out) {
  auto catalog = standard_catalog(opt.max_order);
  std::vector<GroupPtr> groups;
  std::vector<Job> jobs;
  for (size_t e = 0; e < catalog.size(); ++e) {
    auto g = FiniteGroup::build(catalog[e].spec);
    groups.push_back(g);
    for (int a = 1; a < g->order(); ++a)
      for (int b = a + 1; b < g->order(); ++b)
        if (subgroup_generated(*g, std::array<int, 2>{a, b}).order() == g->order())
          jobs.push_back({static_cast<int>(e), a, b});
  }

  std::vector<std::string> lines(jobs.size());
  int workers = std::max(1, opt.workers);
  if (workers == 1) {
    for (size_t i = 0; i < jobs.size(); ++i)
      lines[i] = survey_record(catalog[jobs[i].entry], groups[jobs[i].entry], jobs[i].a, jobs[i].b,
                               opt);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (size_t i = w; i < jobs.size(); i += workers)
          lines[i] = survey_record(catalog[jobs[i].entry], groups[jobs[i].entry], jobs[i].a,
                                   jobs[i].b, opt);
      });
    for (auto& t : pool) t.join();
  }
  for (const auto& l : lines) out << l << "\n";
  return static_cast<long long>(lines.size());
}

}  // namespace hamcay
