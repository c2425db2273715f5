#pragma once

#include <functional>
#include <optional>

#include "core/cayley.hpp"

namespace hamcay {

enum class Verdict { yes, no, unknown };

struct SearchStats {
  long long nodes = 0;
  long long patterns = 0;
};

struct SearchReport {
  Verdict verdict = Verdict::unknown;
  std::optional<Certificate> certificate;
  SearchStats stats;
  std::string method;
};

struct DfsOptions {
  long long node_cap = 100'000'000;
};

// Exhaustive backtracking with visited-set pruning; generator order is the
// tie-break. Path searches fix start = e unless one is given (legitimate by
// vertex-transitivity); cycle searches fix the first vertex = e.
// A blown node budget reports unknown, never a verdict.
SearchReport dfs_ham_path(const CayleyDigraph& d, std::optional<int> start = std::nullopt,
                          const DfsOptions& opt = {});
SearchReport dfs_ham_cycle(const CayleyDigraph& d, const DfsOptions& opt = {});

// Enumerates every hamiltonian path from `start`; callback returns false to stop.
void enumerate_ham_paths(const CayleyDigraph& d, int start,
                         const std::function<bool(const Certificate&)>& cb,
                         long long node_cap = 100'000'000);

// One candidate in the complete search space for 2-generated traceability:
// a generator per regular coset plus a split position d in the terminal coset.
struct TravelPattern {
  std::vector<int> regular_label;  // per regular coset, ascending rep order
  int d = 0;                       // in [0, |H|)
};

// Terminal coset enumerated as a^-1 (b a^-1)^i for i in [0, |H|); position d is
// the terminal vertex, positions below d travel by b, above d by a.
// Returns the functional successor map (-1 where a vertex has no successor)
// and the labels used.
struct PatternExpansion {
  std::vector<int> succ;   // vertex -> vertex or -1
  std::vector<int> label;  // vertex -> generator position or -1
};
PatternExpansion pattern_successors(const CayleyDigraph& d, const CosetClassification& cc,
                                    const TravelPattern& p);

// The pattern induced by a hamiltonian path from e, if it is legal.
std::optional<TravelPattern> induce_pattern(const CayleyDigraph& d, const CosetClassification& cc,
                                            const Certificate& path);

// Complete decision procedure for connected Cay(G; a, b): tries all
// 2^(#regular cosets) * |H| travel patterns; each expands to at most one
// spanning path from e. Guarded by a 2^24 pattern limit.
SearchReport structured_ham_path_2gen(const CayleyDigraph& d);

enum class MilnorVerdict { no_path, inconclusive };

// Non-traceability test for |a| = 2, |b| = 3: fires when |G| >= 9|ab^2|
// (sharp variant: |G| >= 9|ab^2| - 2). Never claims traceability.
MilnorVerdict milnor_test(const FiniteGroup& g, int a, int b, bool sharp = false);

}  // namespace hamcay
