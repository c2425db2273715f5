#include "core/families.hpp"

#include <algorithm>
#include <numeric>

namespace hamcay {

int resolve_element(const FiniteGroup& g, std::span<const int> coords) {
  auto idx = g.find_coords(coords);
  if (!idx) fail(errc::invalid_spec, "element coordinates do not name a group element");
  return *idx;
}

std::vector<int> resolve_elements(const FiniteGroup& g,
                                  const std::vector<std::vector<int>>& coords) {
  std::vector<int> out;
  out.reserve(coords.size());
  for (const auto& c : coords) out.push_back(resolve_element(g, c));
  return out;
}

FamilyInstance metacyclic_family(long long p, long long n, bool unsafe_any_prime) {
  if (!is_prime(p) || p <= 3) fail(errc::bad_prime, "p must be a prime greater than 3");
  if (!unsafe_any_prime && p % 4 != 3) fail(errc::bad_prime, "p must be 3 mod 4");
  long long half = (p - 1) / 2;
  long long alpha = n + 1;
  if (alpha % 2) ++alpha;
  long long beta = (n / half + 1) * half;
  if (p % 4 == 3) {
    while (std::gcd(alpha, half) != 1) alpha += 2;
    while (beta <= n || std::gcd(alpha, beta) != 1) beta += half;
  } else {
    // (p-1)/2 is even, so no even alpha is coprime to it and the coprimality
    // constraints are unsatisfiable; build the nearest group shape with no
    // claim attached
    while (beta <= n) beta += half;
  }
  long long r = smallest_primitive_root(p);
  FamilyInstance out;
  out.name = "metacyclic(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")";
  out.spec.kind = SemidirectMetacyclicSpec{alpha, beta, p, r};
  out.gen_coords = {{1, 0, 1}, {0, 1, 1}};  // a = a z, b = b z
  return out;
}

FamilyInstance z12_z5_example() {
  FamilyInstance out;
  out.name = "z12_z5";
  out.spec.kind = SemidirectCyclicSpec{12, 5, 3};
  out.gen_coords = {{2, 1}, {3, 1}};  // h^2 z, h^3 z
  return out;
}

FamilyInstance a4_z2_example() {
  FamilyInstance out;
  out.name = "a4_z2";
  PermutationSpec ps;
  ps.degree = 6;
  ps.generators = {{1, 0, 3, 2, 5, 4},   // (0 1)(2 3) x flip
                   {1, 2, 0, 3, 4, 5}};  // (0 1 2)
  out.spec.kind = ps;
  out.gen_coords = ps.generators;
  return out;
}

std::vector<FamilyInstance> milnor_instances(int max_order) {
  std::vector<FamilyInstance> out;
  for (const auto& entry : standard_catalog(max_order)) {
    auto g = FiniteGroup::build(entry.spec);
    for (int a = 1; a < g->order(); ++a) {
      if (g->element_order(a) != 2) continue;
      for (int b = 1; b < g->order(); ++b) {
        if (g->element_order(b) != 3) continue;
        if (subgroup_generated(*g, std::array<int, 2>{a, b}).order() != g->order()) continue;
        long long m = g->element_order(g->mul(a, g->mul(b, b)));
        if (g->order() < 9 * m) continue;
        FamilyInstance inst;
        inst.name = entry.name + ":milnor";
        inst.spec = entry.spec;
        inst.gen_coords = {g->coords(a), g->coords(b)};
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

FamilyInstance locke_witte_12k(long long k) {
  if (k < 1) fail(errc::invalid_spec, "k must be positive");
  FamilyInstance out;
  out.name = "locke_witte_12k(k=" + std::to_string(k) + ")";
  out.spec.kind = CyclicSpec{12 * k};
  out.gen_coords = {{static_cast<int>(6 * k)}, {static_cast<int>(6 * k + 2)},
                    {static_cast<int>(6 * k + 3)}};
  return out;
}

namespace {

const char* locke_witte_2k_violation(long long a, long long b, long long k) {
  long long n = 2 * k;
  auto md = [&](long long x) { return ((x % n) + n) % n; };
  if (a % 2 == 0 && k % 2 == 0) return "(i): either a or k must be odd";
  if (a % 2 != 0 && (b % 2 != 0 || k % 2 != 0))
    return "(ii): either a is even or b and k are both even";
  if (std::gcd(md(a - b), k) != 1) return "(iii): gcd(a-b, k) = 1";
  if (std::gcd(a, n) == 1) return "(iv): gcd(a, 2k) != 1";
  if (std::gcd(b, k) == 1) return "(v): gcd(b, k) != 1";
  if (md(a) == 0 || md(b) == 0 || md(b + k) == 0)
    return "elements must be nontrivial mod 2k";
  if (md(a) == md(b) || md(a) == md(b + k) || md(b) == md(b + k))
    return "elements must be distinct mod 2k";
  return nullptr;
}

}  // namespace

FamilyInstance locke_witte_2k(long long a, long long b, long long k) {
  if (k < 1 || a < 1 || b < 1) fail(errc::invalid_spec, "parameters must be positive");
  if (const char* why = locke_witte_2k_violation(a, b, k)) fail(errc::condition_failed, why);
  long long n = 2 * k;
  FamilyInstance out;
  out.name = "locke_witte_2k(a=" + std::to_string(a) + ",b=" + std::to_string(b) +
             ",k=" + std::to_string(k) + ")";
  out.spec.kind = CyclicSpec{n};
  out.gen_coords = {{static_cast<int>(a % n)}, {static_cast<int>(b % n)},
                    {static_cast<int>((b + k) % n)}};
  return out;
}

std::optional<std::tuple<long long, long long, long long>> smallest_locke_witte_2k(long long max_k) {
  for (long long k = 1; k <= max_k; ++k)
    for (long long a = 1; a < 2 * k; ++a)
      for (long long b = 1; b < 2 * k; ++b)
        if (!locke_witte_2k_violation(a, b, k)) return std::make_tuple(k, a, b);
  return std::nullopt;
}

namespace {

void push_spec(std::vector<GroupSpec>& out, std::vector<GroupSpec> factors) {
  if (factors.size() == 1) {
    out.push_back(factors.front());
  } else {
    DirectProductSpec d;
    d.factors = std::move(factors);
    out.push_back(GroupSpec{std::move(d)});
  }
}

// all multisets of prime powers with product n, as cyclic factors
void abelian_specs_of_order(int n, std::vector<GroupSpec>& out) {
  // factor n
  std::vector<std::pair<int, int>> pf;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p)
    if (rest % p == 0) {
      int e = 0;
      while (rest % p == 0) {
        rest /= p;
        ++e;
      }
      pf.push_back({p, e});
    }
  if (rest > 1) pf.push_back({rest, 1});

  // partitions of each exponent
  std::vector<std::vector<std::vector<int>>> parts(pf.size());
  for (size_t i = 0; i < pf.size(); ++i) {
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
      if (left == 0) {
        parts[i].push_back(cur);
        return;
      }
      for (int c = std::min(left, maxpart); c >= 1; --c) {
        cur.push_back(c);
        rec(left - c, c);
        cur.pop_back();
      }
    };
    rec(pf[i].second, pf[i].second);
  }
  // combine into invariant factors d_1, d_2, ... with d_{j+1} | d_j, so each
  // isomorphism type appears exactly once and cyclic means one factor
  std::vector<size_t> choice(pf.size(), 0);
  for (;;) {
    size_t rank = 0;
    for (size_t i = 0; i < pf.size(); ++i) rank = std::max(rank, parts[i][choice[i]].size());
    std::vector<long long> invariant(rank, 1);
    for (size_t i = 0; i < pf.size(); ++i) {
      const auto& part = parts[i][choice[i]];  // non-increasing
      for (size_t j = 0; j < part.size(); ++j) {
        long long q = 1;
        for (int t = 0; t < part[j]; ++t) q *= pf[i].first;
        invariant[j] *= q;
      }
    }
    std::vector<GroupSpec> factors;
    for (long long q : invariant) factors.push_back(GroupSpec{CyclicSpec{q}});
    if (factors.empty()) factors.push_back(GroupSpec{CyclicSpec{1}});
    push_spec(out, std::move(factors));
    size_t i = 0;
    while (i < pf.size() && ++choice[i] == parts[i].size()) choice[i++] = 0;
    if (i == pf.size()) break;
  }
}

GroupSpec perm_spec(int degree, std::vector<std::vector<int>> gens) {
  PermutationSpec ps;
  ps.degree = degree;
  ps.generators = std::move(gens);
  return GroupSpec{std::move(ps)};
}

GroupSpec quaternion8_spec() {
  // 1, -1, i, -i, j, -j, k, -k with sign bit s and basis index
  auto code = [](int sign, int basis) { return basis * 2 + sign; };  // basis 0=1,1=i,2=j,3=k
  // product of basis units: bas = resulting basis, sign_tab = sign flip
  static const int bas[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign_tab[4][4] = {
      {0, 0, 0, 0},  // 1*x
      {0, 1, 0, 1},  // i*1=i, i*i=-1, i*j=k, i*k=-j
      {0, 1, 1, 0},  // j*1=j, j*i=-k, j*j=-1, j*k=i
      {0, 0, 1, 1},  // k*1=k, k*i=j, k*j=-i, k*k=-1
  };
  TableSpec ts;
  ts.order = 8;
  ts.table.assign(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int s1 = x & 1, b1 = x >> 1, s2 = y & 1, b2 = y >> 1;
      int b = bas[b1][b2];
      int s = (s1 + s2 + sign_tab[b1][b2]) & 1;
      ts.table[x][y] = code(s, b);
    }
  return GroupSpec{std::move(ts)};
}

}  // namespace

std::vector<GroupSpec> all_abelian_specs(int max_order, bool noncyclic_only) {
  std::vector<GroupSpec> out;
  for (int n = 1; n <= max_order; ++n) {
    std::vector<GroupSpec> at_n;
    abelian_specs_of_order(n, at_n);
    for (auto& s : at_n) {
      if (noncyclic_only && std::holds_alternative<CyclicSpec>(s.kind)) continue;
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<CatalogEntry> standard_catalog(int max_order) {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, GroupSpec spec, int order) {
    if (order <= max_order) out.push_back({std::move(name), std::move(spec)});
  };

  for (int n = 1; n <= max_order; ++n) add("Z" + std::to_string(n), GroupSpec{CyclicSpec{n}}, n);
  for (const auto& spec : all_abelian_specs(max_order, /*noncyclic_only=*/true)) {
    std::string name = "ab";
    const auto& d = std::get<DirectProductSpec>(spec.kind);
    for (const auto& f : d.factors)
      name += "_" + std::to_string(std::get<CyclicSpec>(f.kind).n);
    out.push_back({std::move(name), spec});
  }
  // semidirect Z_m x| Z_p over small parameters, every valid nontrivial action
  for (long long p : {3, 5, 7, 11, 13}) {
    for (long long m = 2; m * p <= max_order && m <= 16; ++m) {
      for (long long u = 2; u < p; ++u) {
        if (pow_mod(u, m, p) != 1) continue;
        add("sd_" + std::to_string(m) + "_" + std::to_string(p) + "_" + std::to_string(u),
            GroupSpec{SemidirectCyclicSpec{m, p, u}}, static_cast<int>(m * p));
      }
    }
  }
  add("S3", perm_spec(3, {{1, 0, 2}, {1, 2, 0}}), 6);
  add("D4", perm_spec(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}), 8);
  add("Q8", quaternion8_spec(), 8);
  add("A4", perm_spec(4, {{1, 0, 3, 2}, {1, 2, 0, 3}}), 12);
  add("D8", perm_spec(8, {{1, 2, 3, 4, 5, 6, 7, 0}, {0, 7, 6, 5, 4, 3, 2, 1}}), 16);
  add("S4", perm_spec(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}), 24);
  {
    auto a4z2 = a4_z2_example();
    add("A4xZ2", a4z2.spec, 24);
  }
  add("A5", perm_spec(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}}), 60);
  // small mixed products
  auto product = [&](std::string name, GroupSpec x, GroupSpec y, int order) {
    DirectProductSpec d;
    d.factors = {std::move(x), std::move(y)};
    add(std::move(name), GroupSpec{std::move(d)}, order);
  };
  product("S3xZ2", perm_spec(3, {{1, 0, 2}, {1, 2, 0}}), GroupSpec{CyclicSpec{2}}, 12);
  product("S3xZ3", perm_spec(3, {{1, 0, 2}, {1, 2, 0}}), GroupSpec{CyclicSpec{3}}, 18);
  product("S3xZ4", perm_spec(3, {{1, 0, 2}, {1, 2, 0}}), GroupSpec{CyclicSpec{4}}, 24);
  product("Q8xZ2", quaternion8_spec(), GroupSpec{CyclicSpec{2}}, 16);
  product("S3xS3", perm_spec(3, {{1, 0, 2}, {1, 2, 0}}), perm_spec(3, {{1, 0, 2}, {1, 2, 0}}), 36);
  {
    auto meta = metacyclic_family(7, 1);
    add("metacyclic_7_1", meta.spec, 42);
  }
  return out;
}

}  // namespace hamcay
