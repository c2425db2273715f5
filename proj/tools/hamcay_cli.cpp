// Command-line front end over the hamcay C API.
//
// Exit codes for `decide`: 0 = exists, 1 = does not exist, 2 = error/unknown.
// `verify`: 0 = certificate accepted, 1 = rejected, 2 = error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hamcay.h"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (text.empty() || text.back() != '\n') out << "\n";
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { hc_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

int die(const char* what) {
  std::cerr << "error: " << what << ": " << hc_last_error() << "\n";
  return 2;
}

struct DigraphGuard {
  hc_group* g = nullptr;
  hc_digraph* d = nullptr;
  ~DigraphGuard() {
    hc_digraph_free(d);
    hc_group_free(g);
  }
};

// Accepts either a bare group spec or a {"group":...,"generators":...} bundle;
// --gens overrides the bundled generators.
int load_digraph(const std::string& spec_path, const std::string& gens, DigraphGuard& out) {
  std::string text = read_file(spec_path);
  if (hc_digraph_load(text.c_str(), gens.empty() ? nullptr : gens.c_str(), &out.g, &out.d) != HC_OK)
    return die("load digraph");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hamiltonian paths and cycles in Cayley digraphs"};
  app.require_subcommand(1);

  // decide
  std::string spec_path, gens, method = "auto", out_path;
  bool want_cycle = false, want_path = false, sharp = false;
  long long node_cap = 100'000'000;
  auto* decide = app.add_subcommand("decide", "decide hamiltonian path/cycle existence");
  decide->add_option("spec", spec_path, "group spec JSON file")->required();
  decide->add_option("--gens", gens, "generators as a JSON array of elements");
  decide->add_flag("--path", want_path, "decide path existence (default)");
  decide->add_flag("--cycle", want_cycle, "decide cycle existence");
  decide->add_option("--method", method, "dfs|structured|auto")->capture_default_str();
  decide->add_flag("--sharp", sharp, "use the sharpened order bound in the quick test");
  decide->add_option("--node-cap", node_cap, "backtracking node budget")->capture_default_str();
  decide->add_option("--out", out_path, "write the JSON report here instead of stdout");

  // construct
  std::string c_spec, c_gens, c_method, c_out, c_subgroup, c_k, c_trace;
  auto* construct = app.add_subcommand("construct", "build a verified certificate");
  construct->add_option("spec", c_spec, "group spec JSON file")->required();
  construct->add_option("--gens", c_gens, "generators as a JSON array");
  construct->add_option("--method", c_method, "abelian|rankin|fgl|small-commutator|abelian3")
      ->required();
  construct->add_option("--subgroup", c_subgroup, "fgl: generators of N as a JSON array");
  construct->add_option("--k", c_k, "abelian3: the order-2 element k");
  construct->add_option("--trace", c_trace, "abelian3: write one JSONL record per surgery");
  construct->add_option("--out", c_out, "certificate output file (default stdout)");

  // family
  std::string f_name, f_out;
  long long f_p = 7, f_n = 1, f_k = 1, f_a = 1, f_b = 1;
  int f_max_order = 72;
  bool f_unsafe = false;
  auto* family = app.add_subcommand("family", "emit a named example family");
  family->add_option("name", f_name, "metacyclic|z12z5|a4z2|lw12k|lw2k|milnor")->required();
  family->add_option("--p", f_p, "prime (metacyclic)");
  family->add_option("--n", f_n, "generator-order lower bound (metacyclic)");
  family->add_flag("--unsafe-any-prime", f_unsafe,
                   "metacyclic: build for any odd prime, with no claim attached");
  family->add_option("--k", f_k, "k (lw12k, lw2k)");
  family->add_option("--a", f_a, "a (lw2k)");
  family->add_option("--b", f_b, "b (lw2k)");
  family->add_option("--max-order", f_max_order, "cap (milnor)");
  family->add_option("--out", f_out, "output file (default stdout)");

  // verify
  std::string v_cert;
  auto* verify = app.add_subcommand("verify", "check a certificate file");
  verify->add_option("cert", v_cert, "certificate JSON file")->required();

  // export
  std::string e_spec, e_gens, e_dot, e_names;
  auto* exporter = app.add_subcommand("export", "write the digraph in DOT format");
  exporter->add_option("spec", e_spec, "group spec JSON file")->required();
  exporter->add_option("--gens", e_gens, "generators as a JSON array");
  exporter->add_option("--dot", e_dot, "output .dot path")->required();
  exporter->add_option("--names", e_names, "arc label names as a JSON array of strings");

  // survey
  int s_max_order = 24, s_workers = 0;
  std::string s_out;
  auto* survey = app.add_subcommand("survey", "census over the standard catalog");
  survey->add_option("--max-order", s_max_order, "largest group order")->capture_default_str();
  survey->add_option("--out", s_out, "JSONL output path")->required();
  survey->add_option("--workers", s_workers, "0 = honor HAMCAY_WORKERS, default 1");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*decide) {
      DigraphGuard dg;
      if (int rc = load_digraph(spec_path, gens, dg)) return rc;
      std::string opts = std::string("{\"kind\":\"") + (want_cycle ? "cycle" : "path") +
                         "\",\"method\":\"" + method + "\",\"sharp\":" +
                         (sharp ? "true" : "false") + ",\"node_cap\":" + std::to_string(node_cap) +
                         "}";
      StringGuard report;
      hc_status st = hc_decide(dg.d, opts.c_str(), &report.s);
      if (st != HC_OK && st != HC_EBUDGET) return die("decide");
      write_output(out_path, report.str());
      if (st == HC_EBUDGET) return 2;
      return report.str().find("\"verdict\":\"exists\"") != std::string::npos ? 0 : 1;
    }
    if (*construct) {
      DigraphGuard dg;
      if (int rc = load_digraph(c_spec, c_gens, dg)) return rc;
      std::string opts = "{\"method\":\"" + c_method + "\"";
      if (!c_subgroup.empty()) opts += ",\"subgroup\":" + c_subgroup;
      if (!c_k.empty()) opts += ",\"k\":" + c_k;
      if (!c_trace.empty()) opts += ",\"trace\":\"" + c_trace + "\"";
      opts += "}";
      StringGuard cert;
      if (hc_construct(dg.d, opts.c_str(), &cert.s) != HC_OK) return die("construct");
      write_output(c_out, cert.str());
      return 0;
    }
    if (*family) {
      std::string params = "{\"p\":" + std::to_string(f_p) + ",\"n\":" + std::to_string(f_n) +
                           ",\"k\":" + std::to_string(f_k) + ",\"a\":" + std::to_string(f_a) +
                           ",\"b\":" + std::to_string(f_b) +
                           ",\"max_order\":" + std::to_string(f_max_order) +
                           ",\"unsafe_any_prime\":" + (f_unsafe ? "true" : "false") + "}";
      StringGuard out;
      if (hc_family(f_name.c_str(), params.c_str(), &out.s) != HC_OK) return die("family");
      write_output(f_out, out.str());
      return 0;
    }
    if (*verify) {
      StringGuard res;
      std::string cert = read_file(v_cert);
      if (hc_verify(cert.c_str(), &res.s) != HC_OK) return die("verify");
      std::cout << res.str() << "\n";
      return res.str().find("\"ok\":true") != std::string::npos ? 0 : 1;
    }
    if (*exporter) {
      DigraphGuard dg;
      if (int rc = load_digraph(e_spec, e_gens, dg)) return rc;
      StringGuard dot;
      if (hc_export_dot(dg.d, e_names.empty() ? nullptr : e_names.c_str(), &dot.s) != HC_OK)
        return die("export");
      write_output(e_dot, dot.str());
      return 0;
    }
    if (*survey) {
      std::string opts = "{\"max_order\":" + std::to_string(s_max_order);
      if (s_workers > 0) {
        opts += ",\"workers\":" + std::to_string(s_workers);
      } else if (const char* w = std::getenv("HAMCAY_WORKERS")) {
        opts += ",\"workers\":" + std::string(w);
      }
      opts += "}";
      if (hc_survey(opts.c_str(), s_out.c_str()) != HC_OK) return die("survey");
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
