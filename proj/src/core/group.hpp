#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "core/errors.hpp"

namespace hamcay {

struct GroupSpec;

// Declarative group descriptions. Element coordinates per kind:
//   cyclic                -> [x]
//   direct_product        -> [i1, .., ik]  (canonical factor element indices)
//   semidirect_cyclic     -> [h, e]        meaning h-part h, z-exponent e
//   semidirect_metacyclic -> [i, j, e]     meaning a^i b^j z^e (h-part first)
//   permutation           -> image tuple
//   table                 -> [x]           (row/col index)
struct CyclicSpec {
  long long n = 1;
};
struct DirectProductSpec {
  std::vector<GroupSpec> factors;
};
// Z_m acting on Z_p by z^h = z^u.
struct SemidirectCyclicSpec {
  long long m = 1, p = 3, u = 1;
};
// (Z_alpha x Z_beta) acting on Z_p by z^a = z^{-1}, z^b = z^{r^2}.
struct SemidirectMetacyclicSpec {
  long long alpha = 2, beta = 1, p = 3, r = 2;
};
struct PermutationSpec {
  int degree = 1;
  std::vector<std::vector<int>> generators;
};
struct TableSpec {
  int order = 1;
  std::vector<std::vector<int>> table;
};

struct GroupSpec {
  std::variant<CyclicSpec, DirectProductSpec, SemidirectCyclicSpec, SemidirectMetacyclicSpec,
               PermutationSpec, TableSpec>
      kind;
};

// A finite group with indexed elements. Index 0 is always the identity.
// Immutable after construction; safe for concurrent reads.
class FiniteGroup {
 public:
  static std::shared_ptr<const FiniteGroup> build(const GroupSpec& spec);
  // For internally computed tables (quotients, subgroup copies); skips the
  // untrusted-input axiom scan.
  static std::shared_ptr<const FiniteGroup> build_trusted_table(std::vector<std::vector<int>> table,
                                                                std::vector<std::string> names = {});

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int a, int b) const;
  int inv(int a) const { return inverse_[check(a)]; }
  // x^g = g^-1 x g
  int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
  // [a,b] = a^-1 b^-1 a b
  int commutator(int a, int b) const { return mul(mul(inv(a), inv(b)), mul(a, b)); }
  int power(int g, long long e) const;
  int element_order(int g) const;
  bool is_abelian() const;

  const std::vector<int>& coords(int g) const { return coords_[check(g)]; }
  std::optional<int> find_coords(std::span<const int> c) const;
  std::string element_name(int g) const;
  const GroupSpec& spec() const { return spec_; }

 private:
  FiniteGroup() = default;
  int check(int g) const {
    if (g < 0 || g >= order_) fail(errc::invalid_spec, "element index out of range");
    return g;
  }
  std::vector<int> mul_coords(const std::vector<int>& a, const std::vector<int>& b) const;
  std::vector<int> inv_coords(const std::vector<int>& a) const;
  int index_of(const std::vector<int>& c) const;
  void finish_build();

  enum class Kind { cyclic, product, semidirect_cyclic, metacyclic, permutation, table };
  Kind kind_ = Kind::cyclic;
  GroupSpec spec_;
  int order_ = 0;
  std::vector<std::vector<int>> coords_;
  std::vector<int> inverse_;
  std::vector<int> table_;  // full multiplication table when small enough

  std::vector<std::shared_ptr<const FiniteGroup>> factors_;
  std::vector<long long> strides_;
  long long sd_m_ = 0, sd_p_ = 0, sd_u_ = 0;
  std::vector<int> sd_upow_;
  long long mc_alpha_ = 0, mc_beta_ = 0, mc_p_ = 0, mc_r_ = 0;
  std::vector<int> mc_r2pow_;
  int perm_degree_ = 0;
  std::vector<std::string> names_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  std::vector<int> members;  // sorted ascending, contains 0
  std::vector<int> witness;  // generating elements as given
  std::vector<char> mask;    // size |G|

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int g) const { return mask[g] != 0; }
  bool operator==(const Subgroup& o) const { return members == o.members; }
};

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens);
Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h);
bool is_normal(const FiniteGroup& g, const Subgroup& h);

// Left cosets xH, ordered by minimal member index; each coset sorted.
std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h);
// Right cosets Hx, same ordering conventions.
std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const Subgroup& h);

struct Quotient {
  GroupPtr group;             // table-backed group on the cosets
  std::vector<int> coset_of;  // G index -> quotient index
  std::vector<int> rep;       // quotient index -> minimal representative in G
};
Quotient quotient_group(const FiniteGroup& g, const Subgroup& n);

struct SubgroupGroup {
  GroupPtr group;               // table-backed group of order |H|
  std::vector<int> to_parent;   // H index -> G index
  std::vector<int> from_parent; // G index -> H index, -1 outside H
};
SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);

bool is_cyclic(const FiniteGroup& g);
std::optional<int> cyclic_generator(const FiniteGroup& g);

// Small number-theory helpers used by group construction and families.
bool is_prime(long long n);
long long pow_mod(long long b, long long e, long long m);
bool is_primitive_root(long long r, long long p);
long long smallest_primitive_root(long long p);

}  // namespace hamcay
