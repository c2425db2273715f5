#pragma once

#include <iosfwd>
#include <optional>

#include "core/cayley.hpp"

namespace hamcay {

// Spanning subdigraph of Cay(G; a, b, b+k) with in/out-valence 1 everywhere:
// a disjoint union of directed cycles. Labels are generator positions
// (0 = a, 1 = b, 2 = b+k).
struct ArcSystem {
  std::vector<int> succ;
  std::vector<int> label;
};

// Hamiltonian cycles in Cay(G; a, b, b+k) for non-cyclic abelian G with
// |k| = 2, via an initial one-regular subdigraph and arc-surgery amalgamation.
class Abelian3 {
 public:
  // Validates: G abelian and not cyclic, |k| = 2, {a, b, b+k} distinct
  // nontrivial, <a, b, k> = G.
  Abelian3(GroupPtr group, int a, int b, int k);

  const CayleyDigraph& digraph() const { return d_; }
  const FiniteGroup& group() const { return *g_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int k() const { return k_; }
  int bk() const { return bk_; }

  // Vertex coordinates used by the initial subdigraph, plus the projection of
  // a and b onto <a-b> when G = <a-b> + <k> (kept for inspection).
  struct Frame {
    bool k_in_a = false;
    std::vector<int> x, y, z;  // z unused when k_in_a
    int index_ak = 0;          // |G : <a, k>|
    int index_bk = 0;          // |G : <b, k>|
    std::optional<int> a_prime, b_prime, k1, k2;  // a = a' + k', b = b' + k''
  };
  const Frame& frame() const { return frame_; }

  // The initial member of class E. Requires <a-b, k> = G.
  ArcSystem h0() const;
  // Component count the construction is expected to produce.
  int h0_expected_components() const;

  // Replace arcs u_i -> succ(u_i) by u1 -> v2, u2 -> v3, u3 -> v1. The new
  // arcs must exist in the digraph; preserves component-count parity.
  ArcSystem three_arc_rotate(const ArcSystem& h, int u1, int u2, int u3) const;

  // u travels by a; u, u+k, u+a+k on three different components. Merges the
  // three into one (count drops by exactly 2), staying in class E.
  ArcSystem amalgamate(const ArcSystem& h, int u) const;

  // u travels by a; u+k and u+a+k share a component, u is elsewhere. Joins u
  // with the successor of u+k and splits u+a+k off (count unchanged).
  ArcSystem amalgamate_pair(const ArcSystem& h, int u) const;

  // Iterative improvement for <a-b, k> != G; strictly reduces the component
  // count each round. comp_trace, when given, records the count per round
  // (-1 marks a stall incident before the search fallback).
  Certificate reduce_components_nongenerating(std::vector<int>* comp_trace = nullptr,
                                              std::ostream* trace_jsonl = nullptr) const;

  // Top-level dispatcher; always returns a verified hamiltonian cycle.
  Certificate ham_cycle(std::ostream* trace_jsonl = nullptr) const;

  int component_count(const ArcSystem& h) const;
  std::vector<int> components(const ArcSystem& h) const;  // vertex -> component id
  bool in_class_c(const ArcSystem& h) const;
  bool in_class_e(const ArcSystem& h) const;

 private:
  int add(int x, int y) const { return g_->mul(x, y); }
  int neg(int x) const { return g_->inv(x); }
  int label_of_diff(int diff) const;  // generator position or -1
  std::vector<int> preds(const ArcSystem& h) const;
  void check_class_e(const ArcSystem& h, const char* who) const;
  void emit_trace(std::ostream* os, const char* step, const ArcSystem& h) const;
  Certificate extract_cycle(const ArcSystem& h, const char* who) const;

  GroupPtr g_;
  int a_, b_, k_, bk_;
  CayleyDigraph d_;
  Frame frame_;
};

Certificate abelian3_ham_cycle(GroupPtr group, int a, int b, int k,
                               std::ostream* trace_jsonl = nullptr);

}  // namespace hamcay
