#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "core/group.hpp"

namespace hamcay {

// Cayley digraph: vertices are group elements, one arc v -> v*s per generator.
// Generators are an ordered list of distinct non-identity elements; the listed
// order is the tie-break order everywhere.
class CayleyDigraph {
 public:
  CayleyDigraph(GroupPtr group, std::vector<int> generators);

  const FiniteGroup& group() const { return *group_; }
  GroupPtr group_ptr() const { return group_; }
  int order() const { return group_->order(); }
  int num_generators() const { return static_cast<int>(gens_.size()); }
  int generator(int s) const { return gens_[s]; }
  const std::vector<int>& generators() const { return gens_; }
  int succ(int v, int s) const { return succ_[s][v]; }
  bool connected() const { return connected_; }

 private:
  GroupPtr group_;
  std::vector<int> gens_;
  std::vector<std::vector<int>> succ_;
  bool connected_ = false;
};

struct Certificate {
  enum class Kind { path, cycle };
  Kind kind = Kind::path;
  int start = 0;
  std::vector<int> labels;  // generator positions
};

struct VerifyResult {
  bool ok = false;
  std::string reason;  // empty on accept
  int step = -1;       // first violating step, -1 if not applicable
};

// Accepts iff the walk visits every vertex exactly once (and closes, for cycles).
VerifyResult verify_certificate(const CayleyDigraph& d, const Certificate& c);

// H = <S S^-1>; for S = {a, b} this is <a b^-1>.
Subgroup arc_forcing_subgroup(const CayleyDigraph& d);

struct CosetInfo {
  int rep = 0;               // minimal member index
  std::vector<int> members;  // sorted
  bool terminal = false;
};

struct CosetClassification {
  Subgroup subgroup;             // the arc-forcing subgroup
  std::vector<CosetInfo> cosets; // left cosets, ascending by rep
  int terminal = -1;             // index into cosets
  std::vector<int> coset_of;     // vertex -> coset index
};

// Left cosets of the arc-forcing subgroup; exactly one is terminal (a^-1 H).
CosetClassification classify_cosets(const CayleyDigraph& d);

// Digraph on right cosets Kg with arcs Kg -> Kgs.
struct CosetDigraph {
  std::vector<int> reps;      // minimal representatives, ascending
  std::vector<int> coset_of;  // vertex -> coset
  std::vector<std::vector<int>> succ;  // [s][coset]

  int order() const { return static_cast<int>(reps.size()); }
};

CosetDigraph coset_quotient_digraph(const CayleyDigraph& d, const Subgroup& k);

// Walk the coset digraph from the coset of e; true iff the labels trace a
// hamiltonian cycle.
bool is_ham_cycle_in_cosets(const CosetDigraph& q, std::span<const int> labels);

std::string to_dot(const CayleyDigraph& d, std::span<const std::string> gen_names = {});

}  // namespace hamcay
