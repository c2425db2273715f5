#pragma once

#include <optional>
#include <span>

#include "core/cayley.hpp"
#include "core/search.hpp"

namespace hamcay {

// Hamiltonian path on any connected Cayley digraph of an abelian group, by the
// quotient recursion: pick s in S, lift a path of Cay(G/<s>; S \ {s}) to
// ((s^{|s|-1}, t_i)_i, s^{|s|-1}). The first generator is always picked.
Certificate abelian_ham_path(const CayleyDigraph& d);

// Lift of an inner path on Cay(N; a, b), N = <a, b> containing [G,G], through
// an abelian-quotient path: (((t_j)_j, s_i)_i, (t_j)_j). Inner labels are over
// {0 -> a, 1 -> b}.
Certificate concat_lift_path(const CayleyDigraph& d, int a_pos, int b_pos,
                             std::span<const int> inner_labels);

// Skewed-generators lift: given a hamiltonian cycle (s_i)_{i=1..n} in
// K \ Cay(G;S) with <S s_2..s_n> = K, produce the path
// ((t_j, (s_i)_{i=2..n})_{j=1..m-1}, t_m, (s_i)_{i=2..n-1}).
// The inner object is found by search on Cay(K; S s_2..s_n): a hamiltonian
// cycle from e when n >= 2 (the concatenation only spans G when the inner
// prefix products return to e), a plain path when n = 1.
Certificate skewed_generators_path(const CayleyDigraph& d, const Subgroup& k,
                                   std::span<const int> outer_labels);

struct FactorGroupResult {
  bool ok = false;             // false: criterion <s_1..s_d> = N fails
  Certificate cycle;           // valid when ok
  int product = -1;            // s_1 s_2 ... s_d in G
};

// Factor-group lift: N cyclic normal, (s_i)_{i=1..d} a hamiltonian cycle of
// Cay(G/N; S); the repeated cycle ((s_i)_{i=1..d})^{|N|} is hamiltonian iff
// the cycle product generates N.
FactorGroupResult factor_group_cycle(const CayleyDigraph& d, const Subgroup& n,
                                     std::span<const int> quotient_labels);

struct RankinWitness {
  long long k = 0, l = 0;
};

// Hamiltonian-cycle criterion on abelian <a, b>: a cycle exists iff some
// k + l = |G : <a b^-1>| with k, l >= 0 has <a^k b^l> = <a b^-1>.
// Scans k descending; nullopt means no hamiltonian cycle.
std::optional<RankinWitness> rankin_decide(const FiniteGroup& g, int a, int b);
Certificate rankin_cycle(const CayleyDigraph& d, const RankinWitness& w);

// gcd(a, n) > 1 and gcd(a+1, n) > 1 forces Cay(Z_n; a, a+1) non-hamiltonian.
bool easy_no_ham_check(long long n, long long a);

struct ConstructTrace {
  std::vector<std::string> steps;
  void note(std::string s) { steps.push_back(std::move(s)); }
};

// Constructive path for groups whose commutator subgroup is cyclic of
// prime-power order and is centralized or inverted by every element:
//   (1) reduce to two generators with <[a,b]> = [G,G] (concat lift),
//   (2) H^G != G: unique-maximal-subgroup route through the coset cycle
//       (a^{n-1}, c) or (a^{n-2}, b, c), then the skewed lift,
//   (3) both generators invert [G,G]: complete structured search,
//   (4) a centralizes [G,G]: outer cycle [H](a^n), then the skewed lift.
Certificate small_commutator_path(const CayleyDigraph& d, ConstructTrace* trace = nullptr);

}  // namespace hamcay
