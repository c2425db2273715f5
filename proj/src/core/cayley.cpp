#include "core/cayley.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace hamcay {

CayleyDigraph::CayleyDigraph(GroupPtr group, std::vector<int> generators)
    : group_(std::move(group)), gens_(std::move(generators)) {
  const auto& g = *group_;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i] < 0 || gens_[i] >= g.order()) fail(errc::invalid_spec, "generator index out of range");
    if (gens_[i] == g.identity()) fail(errc::identity_in_s, "identity cannot be a generator");
    for (size_t j = 0; j < i; ++j)
      if (gens_[i] == gens_[j]) fail(errc::duplicate_generator, "duplicate generator");
  }
  succ_.resize(gens_.size());
  for (size_t s = 0; s < gens_.size(); ++s) {
    succ_[s].resize(g.order());
    for (int v = 0; v < g.order(); ++v) succ_[s][v] = g.mul(v, gens_[s]);
  }
  connected_ = subgroup_generated(g, gens_).order() == g.order();
}

VerifyResult verify_certificate(const CayleyDigraph& d, const Certificate& c) {
  const int n = d.order();
  const size_t want = c.kind == Certificate::Kind::path ? static_cast<size_t>(n - 1)
                                                        : static_cast<size_t>(n);
  if (c.labels.size() != want)
    return {false, "wrong length: expected " + std::to_string(want) + " labels", -1};
  if (c.start < 0 || c.start >= n) return {false, "start out of range", -1};
  std::vector<char> visited(n, 0);
  visited[c.start] = 1;
  int cur = c.start;
  for (size_t i = 0; i < c.labels.size(); ++i) {
    int s = c.labels[i];
    if (s < 0 || s >= d.num_generators())
      return {false, "label out of range", static_cast<int>(i)};
    cur = d.succ(cur, s);
    bool last = i + 1 == c.labels.size();
    if (c.kind == Certificate::Kind::cycle && last) {
      if (cur != c.start) return {false, "not closed", static_cast<int>(i)};
    } else if (visited[cur]) {
      return {false, "repeat vertex at step " + std::to_string(i), static_cast<int>(i)};
    } else {
      visited[cur] = 1;
    }
  }
  return {true, "", -1};
}

Subgroup arc_forcing_subgroup(const CayleyDigraph& d) {
  const auto& g = d.group();
  std::vector<int> gens;
  for (int s : d.generators())
    for (int t : d.generators()) {
      int x = g.mul(s, g.inv(t));
      if (x != 0) gens.push_back(x);
    }
  return subgroup_generated(g, gens);
}

CosetClassification classify_cosets(const CayleyDigraph& d) {
  if (d.num_generators() == 0) fail(errc::invalid_spec, "coset classification needs generators");
  const auto& g = d.group();
  CosetClassification out;
  out.subgroup = arc_forcing_subgroup(d);
  auto cosets = left_cosets(g, out.subgroup);
  out.coset_of.assign(g.order(), -1);
  // terminal coset a^-1 H, independent of the choice of a in S
  int terminal_vertex = g.inv(d.generator(0));
  for (size_t c = 0; c < cosets.size(); ++c) {
    CosetInfo info;
    info.rep = cosets[c].front();
    info.members = cosets[c];
    for (int m : info.members) out.coset_of[m] = static_cast<int>(c);
    out.cosets.push_back(std::move(info));
  }
  out.terminal = out.coset_of[terminal_vertex];
  out.cosets[out.terminal].terminal = true;
  return out;
}

CosetDigraph coset_quotient_digraph(const CayleyDigraph& d, const Subgroup& k) {
  const auto& g = d.group();
  auto cosets = right_cosets(g, k);
  CosetDigraph q;
  q.coset_of.assign(g.order(), -1);
  for (size_t c = 0; c < cosets.size(); ++c) {
    q.reps.push_back(cosets[c].front());
    for (int m : cosets[c]) q.coset_of[m] = static_cast<int>(c);
  }
  q.succ.resize(d.num_generators());
  for (int s = 0; s < d.num_generators(); ++s) {
    q.succ[s].resize(q.reps.size());
    for (size_t c = 0; c < q.reps.size(); ++c)
      q.succ[s][c] = q.coset_of[d.succ(q.reps[c], s)];  // Kg -> Kgs, rep choice immaterial
  }
  return q;
}

bool is_ham_cycle_in_cosets(const CosetDigraph& q, std::span<const int> labels) {
  const int n = q.order();
  if (static_cast<int>(labels.size()) != n) return false;
  std::vector<char> visited(n, 0);
  int cur = q.coset_of[0];
  int start = cur;
  visited[cur] = 1;
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] < 0 || labels[i] >= static_cast<int>(q.succ.size())) return false;
    cur = q.succ[labels[i]][cur];
    if (i + 1 == labels.size()) return cur == start;
    if (visited[cur]) return false;
    visited[cur] = 1;
  }
  return n == 1;  // zero-length: only the trivial quotient
}

std::string to_dot(const CayleyDigraph& d, std::span<const std::string> gen_names) {
  std::ostringstream os;
  os << "digraph cayley {\n";
  const auto& g = d.group();
  for (int v = 0; v < d.order(); ++v)
    os << "  n" << v << " [label=\"" << g.element_name(v) << "\"];\n";
  for (int v = 0; v < d.order(); ++v)
    for (int s = 0; s < d.num_generators(); ++s) {
      std::string name = s < static_cast<int>(gen_names.size())
                             ? gen_names[s]
                             : std::string(1, static_cast<char>('a' + s));
      os << "  n" << v << " -> n" << d.succ(v, s) << " [label=\"" << name << "\"];\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hamcay
