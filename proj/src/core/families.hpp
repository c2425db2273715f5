#pragma once

#include <optional>
#include <tuple>

#include "core/group.hpp"

namespace hamcay {

// A group together with a distinguished generator list, ready to serialize.
struct FamilyInstance {
  std::string name;
  GroupSpec spec;
  std::vector<std::vector<int>> gen_coords;
};

// Resolve serialized coordinates against a built group.
int resolve_element(const FiniteGroup& g, std::span<const int> coords);
std::vector<int> resolve_elements(const FiniteGroup& g,
                                  const std::vector<std::vector<int>>& coords);

// Metacyclic family with non-traceable Cay(G; a, b) and generator orders
// beyond n: picks the smallest even alpha > n coprime to (p-1)/2, the
// smallest multiple beta of (p-1)/2 beyond n coprime to alpha, and the
// smallest primitive root mod p. Requires p > 3 with p = 3 (mod 4) unless
// unsafe_any_prime, which builds the group without any non-traceability claim.
FamilyInstance metacyclic_family(long long p, long long n, bool unsafe_any_prime = false);

// Z_12 x| Z_5 (z^h = z^3) with a = h^2 z, b = h^3 z: connected, commutator
// subgroup of order 5, no hamiltonian path.
FamilyInstance z12_z5_example();

// A4 x Z2 with a = ((1 2)(3 4), 1), b = ((1 2 3), 0): |[G,G]| = 4 (not
// cyclic), no hamiltonian path.
FamilyInstance a4_z2_example();

// Catalog scan for |a| = 2, |b| = 3, <a,b> = G, |G| >= 9|a b^2|.
std::vector<FamilyInstance> milnor_instances(int max_order);

// Cay(Z_12k; 6k, 6k+2, 6k+3): no hamiltonian cycle.
FamilyInstance locke_witte_12k(long long k);

// Cay(Z_2k; a, b, b+k) under the five technical conditions; throws
// ConditionFailed naming the first violated clause.
FamilyInstance locke_witte_2k(long long a, long long b, long long k);

// Smallest (k, a, b) lexicographically with all conditions satisfied.
std::optional<std::tuple<long long, long long, long long>> smallest_locke_witte_2k(long long max_k);

struct CatalogEntry {
  std::string name;
  GroupSpec spec;
};

// Deterministic list of concrete groups used by surveys and sweeps; not a
// census of all groups of a given order.
std::vector<CatalogEntry> standard_catalog(int max_order);

// Every abelian group of order <= max_order (one spec per isomorphism type).
std::vector<GroupSpec> all_abelian_specs(int max_order, bool noncyclic_only = false);

}  // namespace hamcay
