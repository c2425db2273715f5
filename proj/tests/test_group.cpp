#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "core/families.hpp"
#include "core/group.hpp"

using namespace hamcay;

namespace {

GroupPtr g5_group() { return FiniteGroup::build(GroupSpec{SemidirectCyclicSpec{12, 5, 3}}); }

GroupPtr meta237() {
  return FiniteGroup::build(GroupSpec{SemidirectMetacyclicSpec{2, 3, 7, 3}});
}

GroupPtr s3() {
  PermutationSpec ps;
  ps.degree = 3;
  ps.generators = {{1, 0, 2}, {1, 2, 0}};
  return FiniteGroup::build(GroupSpec{std::move(ps)});
}

int at(const FiniteGroup& g, std::initializer_list<int> coords) {
  auto idx = g.find_coords(std::vector<int>(coords));
  REQUIRE(idx.has_value());
  return *idx;
}

}  // namespace

TEST_CASE("semidirect product multiplication matches h^2 z = z^4 h^2") {
  auto g = g5_group();
  // (0,4)*(2,0) = (2, 4*3^2 mod 5) = (2,1)
  CHECK(g->mul(at(*g, {0, 4}), at(*g, {2, 0})) == at(*g, {2, 1}));
}

TEST_CASE("trivial group multiplies to identity") {
  auto g = FiniteGroup::build(GroupSpec{CyclicSpec{1}});
  CHECK(g->order() == 1);
  CHECK(g->mul(0, 0) == 0);
}

TEST_CASE("metacyclic(2,3,7,3) has order 42 and is associative") {
  auto g = meta237();
  REQUIRE(g->order() == 42);
  for (int a = 0; a < 42; ++a)
    for (int b = 0; b < 42; ++b)
      for (int c = 0; c < 42; ++c)
        REQUIRE(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
}

TEST_CASE("group axioms hold on catalog groups") {
  for (const auto& entry : standard_catalog(64)) {
    auto g = FiniteGroup::build(entry.spec);
    for (int a = 0; a < g->order(); ++a) {
      CHECK(g->mul(a, 0) == a);
      CHECK(g->mul(0, a) == a);
      CHECK(g->mul(a, g->inv(a)) == 0);
      CHECK(g->mul(g->inv(a), a) == 0);
    }
    // full associativity scan up to order 100, sampled above
    bool assoc = true;
    if (g->order() <= 100) {
      for (int a = 0; a < g->order() && assoc; ++a)
        for (int b = 0; b < g->order() && assoc; ++b)
          for (int c = 0; c < g->order(); ++c)
            if (g->mul(g->mul(a, b), c) != g->mul(a, g->mul(b, c))) {
              assoc = false;
              break;
            }
    } else {
      std::mt19937 rng(7);
      std::uniform_int_distribution<int> pick(0, g->order() - 1);
      for (int t = 0; t < 100000 && assoc; ++t) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        assoc = g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c));
      }
    }
    REQUIRE(assoc);
  }
}

TEST_CASE("ab^-1 and conjugation in the Z12 x| Z5 example") {
  auto g = g5_group();
  int a = at(*g, {2, 1}), b = at(*g, {3, 1});
  int ab1 = g->mul(a, g->inv(b));
  CHECK(ab1 == at(*g, {11, 0}));
  CHECK(g->element_order(ab1) == 12);
  // z^h = z^3
  CHECK(g->conj(at(*g, {0, 1}), at(*g, {1, 0})) == at(*g, {0, 3}));
  CHECK(g->element_order(0) == 1);
}

TEST_CASE("metacyclic generator a = a z has order alpha") {
  auto g = meta237();
  int a = at(*g, {1, 0, 1});
  CHECK(g->element_order(a) == 2);
  int b = at(*g, {0, 1, 1});
  CHECK(g->element_order(b) == 3);
}

TEST_CASE("subgroup generation") {
  auto g = g5_group();
  CHECK(subgroup_generated(*g, std::vector<int>{}).order() == 1);
  int a = at(*g, {2, 1}), b = at(*g, {3, 1});
  CHECK(subgroup_generated(*g, std::array<int, 1>{g->mul(a, g->inv(b))}).order() == 12);

  auto m = meta237();
  int ma = at(*m, {1, 0, 1}), mb = at(*m, {0, 1, 1});
  auto h = subgroup_generated(*m, std::array<int, 1>{m->mul(ma, m->inv(mb))});
  CHECK(h.order() == 6);
}

TEST_CASE("commutator subgroups") {
  auto z12 = FiniteGroup::build(GroupSpec{CyclicSpec{12}});
  CHECK(commutator_subgroup(*z12).order() == 1);
  CHECK(commutator_subgroup(*g5_group()).order() == 5);
  auto a4z2 = FiniteGroup::build(a4_z2_example().spec);
  REQUIRE(a4z2->order() == 24);
  auto c = commutator_subgroup(*a4z2);
  CHECK(c.order() == 4);
  // not cyclic: every nontrivial element has order 2
  auto cg = subgroup_as_group(*a4z2, c);
  CHECK(!is_cyclic(*cg.group));
}

TEST_CASE("normal closure") {
  auto g = s3();
  auto h = subgroup_generated(*g, std::array<int, 1>{at(*g, {1, 0, 2})});
  CHECK(h.order() == 2);
  CHECK(!is_normal(*g, h));
  auto cl = normal_closure(*g, h);
  CHECK(cl.order() == 6);  // brute closure reaches all of S3
  CHECK(is_normal(*g, cl));
  // independent fixed-point oracle: conjugate-and-regenerate until stable
  {
    std::set<int> cur(h.members.begin(), h.members.end());
    for (;;) {
      std::vector<int> gens(cur.begin(), cur.end());
      for (int x : std::vector<int>(cur.begin(), cur.end()))
        for (int t = 0; t < g->order(); ++t) gens.push_back(g->conj(x, t));
      auto grown = subgroup_generated(*g, gens);
      std::set<int> next(grown.members.begin(), grown.members.end());
      if (next == cur) break;
      cur = std::move(next);
    }
    CHECK(std::vector<int>(cur.begin(), cur.end()) == cl.members);
  }
  // already-normal subgroups are fixed points
  auto a3 = subgroup_generated(*g, std::array<int, 1>{at(*g, {1, 2, 0})});
  CHECK(normal_closure(*g, a3).members == a3.members);
  auto triv = trivial_subgroup(*g);
  CHECK(normal_closure(*g, triv).order() == 1);
}

TEST_CASE("cosets and quotients") {
  auto g = g5_group();
  // quotient by the Z5 part is cyclic of order 12
  std::vector<int> zgens{at(*g, {0, 1})};
  auto z5 = subgroup_generated(*g, zgens);
  REQUIRE(z5.order() == 5);
  auto q = quotient_group(*g, z5);
  CHECK(q.group->order() == 12);
  CHECK(is_cyclic(*q.group));

  // trivial quotient
  auto full = full_subgroup(*g);
  CHECK(quotient_group(*g, full).group->order() == 1);

  // every left coset of H = <a b^-1> in the metacyclic group is z^i H
  auto m = meta237();
  int ma = at(*m, {1, 0, 1}), mb = at(*m, {0, 1, 1});
  auto h = subgroup_generated(*m, std::array<int, 1>{m->mul(ma, m->inv(mb))});
  auto cosets = left_cosets(*m, h);
  REQUIRE(cosets.size() == 7);
  for (const auto& coset : cosets) {
    bool has_z_power = false;
    for (int v : coset) {
      auto& c = m->coords(v);
      has_z_power = has_z_power || (c[0] == 0 && c[1] == 0);
    }
    CHECK(has_z_power);
  }

  // non-normal subgroup is rejected
  auto s = s3();
  auto refl = subgroup_generated(*s, std::array<int, 1>{at(*s, {1, 0, 2})});
  CHECK_THROWS_AS(quotient_group(*s, refl), error);
}

TEST_CASE("Lagrange and abelianization across the catalog") {
  for (const auto& entry : standard_catalog(24)) {
    auto g = FiniteGroup::build(entry.spec);
    for (int x = 0; x < g->order(); x += std::max(1, g->order() / 6)) {
      auto h = subgroup_generated(*g, std::array<int, 1>{x});
      auto cosets = left_cosets(*g, h);
      REQUIRE(g->order() == h.order() * static_cast<int>(cosets.size()));
    }
    auto q = quotient_group(*g, commutator_subgroup(*g));
    CHECK(q.group->is_abelian());
  }
}

TEST_CASE("subgroup monotonicity") {
  auto g = s3();
  for (int x = 0; x < g->order(); ++x) {
    auto h = subgroup_generated(*g, std::array<int, 1>{x});
    for (int y = 0; y < g->order(); ++y) {
      auto h2 = subgroup_generated(*g, std::array<int, 2>{x, y});
      for (int m : h.members) CHECK(h2.contains(m));
    }
  }
}

TEST_CASE("build rejections") {
  CHECK_THROWS_AS(FiniteGroup::build(GroupSpec{SemidirectCyclicSpec{3, 5, 2}}), error);  // 2^3 != 1
  CHECK_THROWS_AS(FiniteGroup::build(GroupSpec{SemidirectMetacyclicSpec{2, 3, 7, 2}}),
                  error);  // 2 is not a primitive root mod 7
  CHECK_THROWS_AS(FiniteGroup::build(GroupSpec{SemidirectMetacyclicSpec{3, 3, 7, 3}}),
                  error);  // alpha odd
  TableSpec bad;
  bad.order = 2;
  bad.table = {{0, 1}, {1, 1}};  // 1 has no inverse
  CHECK_THROWS_AS(FiniteGroup::build(GroupSpec{std::move(bad)}), error);
  TableSpec shifted;
  shifted.order = 2;
  shifted.table = {{1, 0}, {0, 1}};  // identity not at index 0
  CHECK_THROWS_AS(FiniteGroup::build(GroupSpec{std::move(shifted)}), error);
}

TEST_CASE("element indexing is lexicographic and identity-first") {
  for (const auto& entry : standard_catalog(16)) {
    auto g = FiniteGroup::build(entry.spec);
    if (std::holds_alternative<TableSpec>(entry.spec.kind)) continue;  // given order kept
    for (int v = 1; v < g->order(); ++v) CHECK(g->coords(v - 1) < g->coords(v));
  }
  auto g = FiniteGroup::build(GroupSpec{CyclicSpec{5}});
  CHECK(g->coords(3) == std::vector<int>{3});
}

TEST_CASE("powers and orders") {
  auto g = FiniteGroup::build(GroupSpec{CyclicSpec{12}});
  CHECK(g->power(2, 3) == 6);
  CHECK(g->power(2, -1) == 10);
  CHECK(g->element_order(2) == 6);
}

TEST_CASE("groups beyond the product-table cap use coordinate arithmetic") {
  // order 3300: multiplication runs through the per-kind formulas
  auto g = FiniteGroup::build(GroupSpec{SemidirectMetacyclicSpec{12, 25, 11, 2}});
  REQUIRE(g->order() == 3300);
  int a = *g->find_coords(std::vector<int>{1, 0, 1});
  int b = *g->find_coords(std::vector<int>{0, 1, 1});
  CHECK(g->element_order(a) == 12);
  CHECK(g->element_order(b) == 25);
  CHECK(g->mul(a, g->inv(a)) == 0);
  CHECK(g->mul(g->inv(b), b) == 0);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> pick(0, g->order() - 1);
  for (int t = 0; t < 20000; ++t) {
    int x = pick(rng), y = pick(rng), z = pick(rng);
    REQUIRE(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
  }

  auto big_cyclic = FiniteGroup::build(GroupSpec{CyclicSpec{5000}});
  CHECK(big_cyclic->mul(4999, 2) == 1);
  CHECK(big_cyclic->inv(1) == 4999);
  CHECK(big_cyclic->element_order(2) == 2500);
}

TEST_CASE("number theory helpers") {
  CHECK(is_prime(7));
  CHECK(!is_prime(9));
  CHECK(smallest_primitive_root(7) == 3);
  CHECK(is_primitive_root(3, 7));
  CHECK(!is_primitive_root(2, 7));
  CHECK(pow_mod(3, 6, 7) == 1);
}
