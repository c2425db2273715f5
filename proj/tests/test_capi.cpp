// Exercises the shared-library C interface end to end: handles, status
// codes, JSON round-trips, and every exported entry point.

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "hamcay.h"

static int failures = 0;

#define EXPECT(cond)                                                   \
  do {                                                                 \
    if (!(cond)) {                                                     \
      std::printf("FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond);      \
      ++failures;                                                      \
    }                                                                  \
  } while (0)

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hc_string_free(s);
  return out;
}

bool contains(const std::string& hay, const char* needle) {
  return hay.find(needle) != std::string::npos;
}

void group_and_digraph_lifecycle() {
  hc_group* g = nullptr;
  EXPECT(hc_group_from_json("{\"type\":\"semidirect_cyclic\",\"m\":12,\"p\":5,\"u\":3}", &g) ==
         HC_OK);
  EXPECT(hc_group_order(g) == 60);
  char* spec = nullptr;
  EXPECT(hc_group_to_json(g, &spec) == HC_OK);
  EXPECT(contains(take(spec), "semidirect_cyclic"));

  hc_digraph* d = nullptr;
  EXPECT(hc_digraph_new(g, "[[2,1],[3,1]]", &d) == HC_OK);
  EXPECT(hc_digraph_connected(d) == 1);
  hc_digraph_free(d);
  hc_group_free(g);

  // parse failures set a message
  hc_group* bad = nullptr;
  EXPECT(hc_group_from_json("{nope", &bad) == HC_EPARSE);
  EXPECT(std::strlen(hc_last_error()) > 0);
  EXPECT(hc_group_from_json("{\"type\":\"semidirect_cyclic\",\"m\":3,\"p\":5,\"u\":2}", &bad) ==
         HC_EINVALID_SPEC);
  EXPECT(hc_group_from_json("{\"type\":\"table\",\"order\":2,\"table\":[[0,1],[1,1]]}", &bad) ==
         HC_ENOT_A_GROUP);
}

void decide_paths_and_cycles() {
  hc_group* g = nullptr;
  hc_digraph* d = nullptr;
  EXPECT(hc_digraph_load("{\"group\":{\"type\":\"semidirect_cyclic\",\"m\":12,\"p\":5,\"u\":3},"
                         "\"generators\":[[2,1],[3,1]]}",
                         nullptr, &g, &d) == HC_OK);
  char* rep = nullptr;
  EXPECT(hc_decide(d, "{\"kind\":\"path\",\"method\":\"structured\"}", &rep) == HC_OK);
  std::string r = take(rep);
  EXPECT(contains(r, "\"verdict\":\"not_exists\""));
  EXPECT(contains(r, "\"patterns\":192"));
  // milnor pre-test leaves the verdict alone here; auto falls to structured
  EXPECT(hc_decide(d, "{\"kind\":\"path\",\"method\":\"auto\"}", &rep) == HC_OK);
  EXPECT(contains(take(rep), "auto:structured"));
  hc_digraph_free(d);
  hc_group_free(g);

  // budget exhaustion surfaces as HC_EBUDGET with an unknown verdict
  EXPECT(hc_digraph_load("{\"group\":{\"type\":\"permutation\",\"degree\":6,\"generators\":"
                         "[[1,0,3,2,5,4],[1,2,0,3,4,5]]},"
                         "\"generators\":[[1,0,3,2,5,4],[1,2,0,3,4,5]]}",
                         nullptr, &g, &d) == HC_OK);
  EXPECT(hc_decide(d, "{\"kind\":\"path\",\"method\":\"dfs\",\"node_cap\":5}", &rep) == HC_EBUDGET);
  EXPECT(contains(take(rep), "\"verdict\":\"unknown\""));
  hc_digraph_free(d);
  hc_group_free(g);
}

void construct_and_verify() {
  hc_group* g = nullptr;
  hc_digraph* d = nullptr;
  EXPECT(hc_digraph_load("{\"type\":\"cyclic\",\"n\":12}", "[[2],[3]]", &g, &d) == HC_OK);
  char* cert = nullptr;
  EXPECT(hc_construct(d, "{\"method\":\"abelian\"}", &cert) == HC_OK);
  std::string cert_text = take(cert);
  char* result = nullptr;
  EXPECT(hc_verify(cert_text.c_str(), &result) == HC_OK);
  EXPECT(contains(take(result), "\"ok\":true"));

  // tampering any label is rejected with the violating step
  std::string broken = cert_text;
  auto pos = broken.find("\"labels\":[");
  broken[pos + 10] = broken[pos + 10] == '0' ? '1' : '0';
  EXPECT(hc_verify(broken.c_str(), &result) == HC_OK);
  EXPECT(contains(take(result), "\"ok\":false"));

  // rankin on Cay(Z12; 2, 3) fails the criterion
  EXPECT(hc_construct(d, "{\"method\":\"rankin\"}", &cert) == HC_ENOT_FOUND);
  hc_digraph_free(d);
  hc_group_free(g);

  // rankin witness cycle on Cay(Z4; 1, 3)
  EXPECT(hc_digraph_load("{\"type\":\"cyclic\",\"n\":4}", "[[1],[3]]", &g, &d) == HC_OK);
  EXPECT(hc_construct(d, "{\"method\":\"rankin\"}", &cert) == HC_OK);
  EXPECT(contains(take(cert), "\"kind\":\"cycle\""));
  // factor-group lift over N = <2>
  EXPECT(hc_construct(d, "{\"method\":\"fgl\",\"subgroup\":[[2]]}", &cert) == HC_OK);
  EXPECT(hc_verify(take(cert).c_str(), &result) == HC_OK);
  EXPECT(contains(take(result), "\"ok\":true"));
  hc_digraph_free(d);
  hc_group_free(g);

  // small-commutator on S3
  EXPECT(hc_digraph_load("{\"type\":\"permutation\",\"degree\":3,\"generators\":"
                         "[[1,0,2],[1,2,0]]}",
                         "[[1,0,2],[1,2,0]]", &g, &d) == HC_OK);
  EXPECT(hc_construct(d, "{\"method\":\"small-commutator\"}", &cert) == HC_OK);
  EXPECT(contains(take(cert), "\"kind\":\"path\""));
  hc_digraph_free(d);
  hc_group_free(g);

  // abelian3 cycle on Z4 x Z2
  EXPECT(hc_digraph_load(
             "{\"type\":\"direct_product\",\"factors\":[{\"type\":\"cyclic\",\"n\":4},"
             "{\"type\":\"cyclic\",\"n\":2}]}",
             "[[3,0],[2,0],[2,1]]", &g, &d) == HC_OK);
  EXPECT(hc_construct(d, "{\"method\":\"abelian3\",\"k\":[0,1]}", &cert) == HC_OK);
  std::string a3 = take(cert);
  EXPECT(contains(a3, "\"kind\":\"cycle\""));
  EXPECT(hc_verify(a3.c_str(), &result) == HC_OK);
  EXPECT(contains(take(result), "\"ok\":true"));
  // precondition violations are reported as such
  EXPECT(hc_construct(d, "{\"method\":\"abelian3\",\"k\":[2,0]}", &cert) == HC_EPRECONDITION);
  hc_digraph_free(d);
  hc_group_free(g);
}

void families_and_export() {
  char* out = nullptr;
  EXPECT(hc_family("metacyclic", "{\"p\":7,\"n\":1}", &out) == HC_OK);
  std::string fam = take(out);
  EXPECT(contains(fam, "semidirect_metacyclic"));
  EXPECT(contains(fam, "\"alpha\":2"));
  // family output loads directly as a digraph bundle
  hc_group* g = nullptr;
  hc_digraph* d = nullptr;
  EXPECT(hc_digraph_load(fam.c_str(), nullptr, &g, &d) == HC_OK);
  EXPECT(hc_group_order(g) == 42);
  char* dot = nullptr;
  EXPECT(hc_export_dot(d, "[\"a\",\"b\"]", &dot) == HC_OK);
  std::string dtext = take(dot);
  EXPECT(contains(dtext, "digraph"));
  EXPECT(contains(dtext, "label=\"a\""));
  hc_digraph_free(d);
  hc_group_free(g);

  EXPECT(hc_family("lw2k", "{\"a\":3,\"b\":2,\"k\":6}", &out) == HC_OK);
  EXPECT(contains(take(out), "\"n\":12"));
  EXPECT(hc_family("lw2k", "{\"a\":2,\"b\":2,\"k\":2}", &out) == HC_ENOT_FOUND);
  EXPECT(hc_family("nope", "{}", &out) == HC_EPARSE);
  EXPECT(hc_family("milnor", "{\"max_order\":12}", &out) == HC_OK);
  EXPECT(take(out) == "[]");
}

void survey_to_file() {
  const char* path = "/tmp/hamcay_capi_survey.jsonl";
  EXPECT(hc_survey("{\"max_order\":8}", path) == HC_OK);
  FILE* f = std::fopen(path, "rb");
  EXPECT(f != nullptr);
  if (f) {
    char buf[512];
    EXPECT(std::fgets(buf, sizeof buf, f) != nullptr);
    EXPECT(contains(buf, "\"agree\":true"));
    std::fclose(f);
  }
  std::remove(path);
}

}  // namespace

int main() {
  group_and_digraph_lifecycle();
  decide_paths_and_cycles();
  construct_and_verify();
  families_and_export();
  survey_to_file();
  if (failures) {
    std::printf("%d C API check(s) failed\n", failures);
    return 1;
  }
  std::printf("C API checks passed\n");
  return 0;
}
