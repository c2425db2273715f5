#include <doctest.h>

#include "core/construct.hpp"
#include "core/families.hpp"
#include "core/search.hpp"

using namespace hamcay;

TEST_CASE("metacyclic family parameter choice") {
  auto f1 = metacyclic_family(7, 1);
  auto& m1 = std::get<SemidirectMetacyclicSpec>(f1.spec.kind);
  CHECK(m1.alpha == 2);
  CHECK(m1.beta == 3);
  CHECK(m1.r == 3);
  CHECK(FiniteGroup::build(f1.spec)->order() == 42);

  auto f4 = metacyclic_family(7, 4);
  auto& m4 = std::get<SemidirectMetacyclicSpec>(f4.spec.kind);
  CHECK(m4.alpha == 8);
  CHECK(m4.beta == 9);
  CHECK(FiniteGroup::build(f4.spec)->order() == 504);

  CHECK_THROWS_AS(metacyclic_family(5, 1), error);   // 5 = 1 mod 4
  CHECK_THROWS_AS(metacyclic_family(3, 1), error);   // p must exceed 3
  CHECK_THROWS_AS(metacyclic_family(9, 1), error);   // not prime
  // the unsafe flag builds the group anyway, claiming nothing
  auto f5 = metacyclic_family(5, 1, /*unsafe_any_prime=*/true);
  CHECK(FiniteGroup::build(f5.spec)->order() > 0);
}

TEST_CASE("metacyclic family invariants") {
  for (auto [p, n] : {std::pair<long long, long long>{7, 1}, {7, 2}, {11, 1}, {19, 1}}) {
    auto f = metacyclic_family(p, n);
    auto g = FiniteGroup::build(f.spec);
    auto gens = resolve_elements(*g, f.gen_coords);
    CHECK(g->element_order(gens[0]) > n);
    CHECK(g->element_order(gens[1]) > n);
    CHECK(commutator_subgroup(*g).order() == p);
    CayleyDigraph d(g, gens);
    CHECK(d.connected());
  }
}

TEST_CASE("z12z5 example invariants") {
  auto f = z12_z5_example();
  auto g = FiniteGroup::build(f.spec);
  CHECK(commutator_subgroup(*g).order() == 5);
  CayleyDigraph d(g, resolve_elements(*g, f.gen_coords));
  CHECK(d.connected());
}

TEST_CASE("a4z2 example invariants") {
  auto f = a4_z2_example();
  auto g = FiniteGroup::build(f.spec);
  REQUIRE(g->order() == 24);
  auto comm = commutator_subgroup(*g);
  CHECK(comm.order() == 4);
  CHECK(!is_cyclic(*subgroup_as_group(*g, comm).group));
  auto gens = resolve_elements(*g, f.gen_coords);
  CHECK(subgroup_generated(*g, gens).order() == 24);
}

TEST_CASE("milnor instance scan") {
  CHECK(milnor_instances(40).empty());  // A5 at order 60 is the first to fire
  auto insts = milnor_instances(60);
  REQUIRE(!insts.empty());
  for (const auto& inst : insts) {
    auto g = FiniteGroup::build(inst.spec);
    auto gens = resolve_elements(*g, inst.gen_coords);
    CHECK(g->element_order(gens[0]) == 2);
    CHECK(g->element_order(gens[1]) == 3);
    CHECK(subgroup_generated(*g, gens).order() == g->order());
    long long m = g->element_order(g->mul(gens[0], g->mul(gens[1], gens[1])));
    CHECK(g->order() >= 9 * m);
  }
}

TEST_CASE("locke-witte families") {
  auto f = locke_witte_12k(1);
  auto g = FiniteGroup::build(f.spec);
  CHECK(g->order() == 12);
  auto gens = resolve_elements(*g, f.gen_coords);
  CHECK(gens == std::vector<int>{6, 8, 9});

  auto f2 = locke_witte_12k(2);
  CHECK(FiniteGroup::build(f2.spec)->order() == 24);
  CHECK(resolve_elements(*FiniteGroup::build(f2.spec), f2.gen_coords) ==
        std::vector<int>{12, 14, 15});

  // smallest valid 2k instance: scan order (k, a, b)
  auto smallest = smallest_locke_witte_2k(12);
  REQUIRE(smallest.has_value());
  auto [k, a, b] = *smallest;
  CHECK(k == 6);
  CHECK(a == 3);
  CHECK(b == 2);
  auto inst = locke_witte_2k(a, b, k);
  auto g2 = FiniteGroup::build(inst.spec);
  CHECK(g2->order() == 12);

  // violated clause (iii) is reported by name
  try {
    locke_witte_2k(3, 6, 6);
    FAIL("expected ConditionFailed");
  } catch (const error& e) {
    CHECK(e.code() == errc::condition_failed);
    CHECK(std::string(e.what()).find("(iii)") != std::string::npos);
  }
}

TEST_CASE("family instances fail their hamiltonicity searches at desk scale") {
  // the two 2-generated families have no hamiltonian path
  for (auto inst : {z12_z5_example(), metacyclic_family(7, 1)}) {
    auto g = FiniteGroup::build(inst.spec);
    CayleyDigraph d(g, resolve_elements(*g, inst.gen_coords));
    CHECK(structured_ham_path_2gen(d).verdict == Verdict::no);
  }
  // the 3-generated families have no hamiltonian cycle
  for (auto inst : {locke_witte_12k(1), locke_witte_2k(3, 2, 6)}) {
    auto g = FiniteGroup::build(inst.spec);
    CayleyDigraph d(g, resolve_elements(*g, inst.gen_coords));
    CHECK(dfs_ham_cycle(d).verdict == Verdict::no);
  }
}

TEST_CASE("catalog is deterministic and within bounds") {
  auto c1 = standard_catalog(24);
  auto c2 = standard_catalog(24);
  REQUIRE(c1.size() == c2.size());
  for (size_t i = 0; i < c1.size(); ++i) {
    CHECK(c1[i].name == c2[i].name);
    auto g = FiniteGroup::build(c1[i].spec);
    CHECK(g->order() <= 24);
  }
}

TEST_CASE("abelian spec enumeration") {
  // orders 1..8: 1,1,1,2,1,1,1,3 isomorphism types, cumulative 11
  CHECK(all_abelian_specs(8).size() == 11);
  CHECK(all_abelian_specs(8, /*noncyclic_only=*/true).size() == 3);  // Z2^2, Z4xZ2, Z2^3
  for (const auto& spec : all_abelian_specs(36)) {
    auto g = FiniteGroup::build(spec);
    CHECK(g->is_abelian());
    bool is_product = std::holds_alternative<DirectProductSpec>(spec.kind);
    CHECK(is_cyclic(*g) == !is_product);
  }
}
