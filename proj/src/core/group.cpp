#include "core/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <sstream>

namespace hamcay {

namespace {

constexpr int kTableCap = 1200;     // precompute n*n product table up to this order
constexpr long long kMaxOrder = 200000;

long long checked_order(long long n) {
  if (n < 1 || n > kMaxOrder) fail(errc::invalid_spec, "group order out of supported range");
  return n;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long pow_mod(long long b, long long e, long long m) {
  b %= m;
  if (b < 0) b += m;
  long long r = 1 % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

bool is_primitive_root(long long r, long long p) {
  if (r % p == 0) return false;
  long long ord = p - 1;
  for (long long q = 2; q * q <= ord; ++q) {
    if (ord % q) continue;
    if (pow_mod(r, ord / q, p) == 1) return false;
    while (ord % q == 0) ord /= q;
  }
  if (ord > 1 && pow_mod(r, (p - 1) / ord, p) == 1) return false;
  return true;
}

long long smallest_primitive_root(long long p) {
  for (long long r = 2; r < p; ++r)
    if (is_primitive_root(r, p)) return r;
  fail(errc::not_primitive_root, "no primitive root found");
}

int FiniteGroup::mul(int a, int b) const {
  check(a);
  check(b);
  if (!table_.empty()) return table_[static_cast<size_t>(a) * order_ + b];
  return index_of(mul_coords(coords_[a], coords_[b]));
}

std::vector<int> FiniteGroup::mul_coords(const std::vector<int>& a, const std::vector<int>& b) const {
  switch (kind_) {
    case Kind::cyclic:
      return {static_cast<int>((static_cast<long long>(a[0]) + b[0]) % order_)};
    case Kind::product: {
      std::vector<int> r(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i) r[i] = factors_[i]->mul(a[i], b[i]);
      return r;
    }
    case Kind::semidirect_cyclic: {
      int h = static_cast<int>((a[0] + b[0]) % sd_m_);
      long long e = (static_cast<long long>(a[1]) * sd_upow_[b[0]] + b[1]) % sd_p_;
      return {h, static_cast<int>(e)};
    }
    case Kind::metacyclic: {
      int i = static_cast<int>((a[0] + b[0]) % mc_alpha_);
      int j = static_cast<int>((a[1] + b[1]) % mc_beta_);
      long long phi = mc_r2pow_[b[1] % mc_r2pow_.size()];
      if (b[0] & 1) phi = (mc_p_ - phi) % mc_p_;  // action of a-part is inversion
      long long e = (static_cast<long long>(a[2]) * phi + b[2]) % mc_p_;
      return {i, j, static_cast<int>(e)};
    }
    case Kind::permutation: {
      std::vector<int> r(perm_degree_);
      for (int x = 0; x < perm_degree_; ++x) r[x] = b[a[x]];
      return r;
    }
    case Kind::table:
      return {table_[static_cast<size_t>(a[0]) * order_ + b[0]]};
  }
  fail(errc::internal, "bad kind");
}

std::vector<int> FiniteGroup::inv_coords(const std::vector<int>& a) const {
  switch (kind_) {
    case Kind::cyclic:
      return {static_cast<int>((order_ - a[0]) % order_)};
    case Kind::product: {
      std::vector<int> r(factors_.size());
      for (size_t i = 0; i < factors_.size(); ++i) r[i] = factors_[i]->inv(a[i]);
      return r;
    }
    case Kind::semidirect_cyclic: {
      int h = static_cast<int>((sd_m_ - a[0]) % sd_m_);
      long long e = (sd_p_ - static_cast<long long>(a[1]) * sd_upow_[h] % sd_p_) % sd_p_;
      return {h, static_cast<int>(e)};
    }
    case Kind::metacyclic: {
      int i = static_cast<int>((mc_alpha_ - a[0]) % mc_alpha_);
      int j = static_cast<int>((mc_beta_ - a[1]) % mc_beta_);
      long long phi = mc_r2pow_[j % mc_r2pow_.size()];
      if (i & 1) phi = (mc_p_ - phi) % mc_p_;
      long long e = (mc_p_ - static_cast<long long>(a[2]) * phi % mc_p_) % mc_p_;
      return {i, j, static_cast<int>(e)};
    }
    case Kind::permutation: {
      std::vector<int> r(perm_degree_);
      for (int x = 0; x < perm_degree_; ++x) r[a[x]] = x;
      return r;
    }
    case Kind::table: {
      for (int x = 0; x < order_; ++x)
        if (table_[static_cast<size_t>(a[0]) * order_ + x] == 0) return {x};
      fail(errc::not_a_group, "element without inverse");
    }
  }
  fail(errc::internal, "bad kind");
}

int FiniteGroup::index_of(const std::vector<int>& c) const {
  switch (kind_) {
    case Kind::cyclic:
    case Kind::table:
      return c[0];
    case Kind::product: {
      long long idx = 0;
      for (size_t i = 0; i < factors_.size(); ++i) idx += c[i] * strides_[i];
      return static_cast<int>(idx);
    }
    case Kind::semidirect_cyclic:
      return static_cast<int>(c[0] * sd_p_ + c[1]);
    case Kind::metacyclic:
      return static_cast<int>((c[0] * mc_beta_ + c[1]) * mc_p_ + c[2]);
    case Kind::permutation: {
      auto it = std::lower_bound(coords_.begin(), coords_.end(), c);
      if (it == coords_.end() || *it != c) fail(errc::internal, "product left the group");
      return static_cast<int>(it - coords_.begin());
    }
  }
  fail(errc::internal, "bad kind");
}

std::optional<int> FiniteGroup::find_coords(std::span<const int> c) const {
  std::vector<int> v(c.begin(), c.end());
  auto ok_range = [&](size_t len) { return v.size() == len; };
  switch (kind_) {
    case Kind::cyclic:
    case Kind::table:
      if (!ok_range(1) || v[0] < 0 || v[0] >= order_) return std::nullopt;
      return v[0];
    case Kind::product: {
      if (!ok_range(factors_.size())) return std::nullopt;
      for (size_t i = 0; i < factors_.size(); ++i)
        if (v[i] < 0 || v[i] >= factors_[i]->order()) return std::nullopt;
      return index_of(v);
    }
    case Kind::semidirect_cyclic:
      if (!ok_range(2) || v[0] < 0 || v[0] >= sd_m_ || v[1] < 0 || v[1] >= sd_p_) return std::nullopt;
      return index_of(v);
    case Kind::metacyclic:
      if (!ok_range(3) || v[0] < 0 || v[0] >= mc_alpha_ || v[1] < 0 || v[1] >= mc_beta_ || v[2] < 0 ||
          v[2] >= mc_p_)
        return std::nullopt;
      return index_of(v);
    case Kind::permutation: {
      if (!ok_range(static_cast<size_t>(perm_degree_))) return std::nullopt;
      auto it = std::lower_bound(coords_.begin(), coords_.end(), v);
      if (it == coords_.end() || *it != v) return std::nullopt;
      return static_cast<int>(it - coords_.begin());
    }
  }
  return std::nullopt;
}

int FiniteGroup::power(int g, long long e) const {
  int n = element_order(g);
  e %= n;
  if (e < 0) e += n;
  int acc = 0, base = g;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteGroup::element_order(int g) const {
  check(g);
  int n = 1, x = g;
  while (x != 0) {
    x = mul(x, g);
    ++n;
    if (n > order_) fail(errc::internal, "order runaway");
  }
  return n;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::element_name(int g) const {
  check(g);
  if (!names_.empty()) return names_[g];
  const auto& c = coords_[g];
  std::ostringstream os;
  switch (kind_) {
    case Kind::cyclic:
      os << c[0];
      break;
    case Kind::product: {
      os << "(";
      for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << ",";
        os << factors_[i]->element_name(c[i]);
      }
      os << ")";
      break;
    }
    case Kind::semidirect_cyclic:
      if (c[0] == 0 && c[1] == 0) return "e";
      if (c[0]) os << "h^" << c[0];
      if (c[1]) os << (c[0] ? " " : "") << "z^" << c[1];
      break;
    case Kind::metacyclic:
      if (c[0] == 0 && c[1] == 0 && c[2] == 0) return "e";
      if (c[0]) os << "a^" << c[0];
      if (c[1]) os << (os.str().empty() ? "" : " ") << "b^" << c[1];
      if (c[2]) os << (os.str().empty() ? "" : " ") << "z^" << c[2];
      break;
    case Kind::permutation: {
      // cycle notation
      std::vector<char> seen(perm_degree_, 0);
      bool any = false;
      for (int s = 0; s < perm_degree_; ++s) {
        if (seen[s] || c[s] == s) continue;
        os << "(";
        int x = s;
        bool first = true;
        while (!seen[x]) {
          seen[x] = 1;
          if (!first) os << " ";
          os << x;
          first = false;
          x = c[x];
        }
        os << ")";
        any = true;
      }
      if (!any) return "e";
      break;
    }
    case Kind::table:
      os << "g" << c[0];
      break;
  }
  return os.str();
}

void FiniteGroup::finish_build() {
  inverse_.resize(order_);
  for (int g = 0; g < order_; ++g) inverse_[g] = index_of(inv_coords(coords_[g]));
  if (kind_ != Kind::table && order_ <= kTableCap) {
    table_.assign(static_cast<size_t>(order_) * order_, 0);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        table_[static_cast<size_t>(a) * order_ + b] = index_of(mul_coords(coords_[a], coords_[b]));
  }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::build(const GroupSpec& spec) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  g->spec_ = spec;

  if (auto* c = std::get_if<CyclicSpec>(&spec.kind)) {
    if (c->n < 1) fail(errc::invalid_spec, "cyclic order must be positive");
    g->kind_ = Kind::cyclic;
    g->order_ = static_cast<int>(checked_order(c->n));
    g->coords_.resize(g->order_);
    for (int i = 0; i < g->order_; ++i) g->coords_[i] = {i};
  } else if (auto* d = std::get_if<DirectProductSpec>(&spec.kind)) {
    if (d->factors.empty()) fail(errc::invalid_spec, "direct product needs at least one factor");
    g->kind_ = Kind::product;
    long long n = 1;
    for (const auto& f : d->factors) {
      g->factors_.push_back(build(f));
      n = checked_order(n * g->factors_.back()->order());
    }
    g->order_ = static_cast<int>(n);
    g->strides_.assign(g->factors_.size(), 1);
    for (int i = static_cast<int>(g->factors_.size()) - 2; i >= 0; --i)
      g->strides_[i] = g->strides_[i + 1] * g->factors_[i + 1]->order();
    g->coords_.resize(g->order_);
    for (int idx = 0; idx < g->order_; ++idx) {
      std::vector<int> c(g->factors_.size());
      int rest = idx;
      for (size_t i = 0; i < g->factors_.size(); ++i) {
        c[i] = static_cast<int>(rest / g->strides_[i]);
        rest = static_cast<int>(rest % g->strides_[i]);
      }
      g->coords_[idx] = std::move(c);
    }
  } else if (auto* s = std::get_if<SemidirectCyclicSpec>(&spec.kind)) {
    if (s->m < 1) fail(errc::invalid_spec, "m must be positive");
    if (!is_prime(s->p) || s->p == 2) fail(errc::invalid_spec, "p must be an odd prime");
    if (s->u < 1 || s->u >= s->p) fail(errc::invalid_action, "u must be a unit mod p");
    if (pow_mod(s->u, s->m, s->p) != 1) fail(errc::invalid_action, "u^m != 1 (mod p)");
    g->kind_ = Kind::semidirect_cyclic;
    g->sd_m_ = s->m;
    g->sd_p_ = s->p;
    g->sd_u_ = s->u;
    g->order_ = static_cast<int>(checked_order(s->m * s->p));
    g->sd_upow_.resize(s->m);
    long long cur = 1;
    for (long long i = 0; i < s->m; ++i) {
      g->sd_upow_[i] = static_cast<int>(cur);
      cur = cur * s->u % s->p;
    }
    g->coords_.resize(g->order_);
    for (int h = 0; h < s->m; ++h)
      for (int e = 0; e < s->p; ++e) g->coords_[h * s->p + e] = {h, e};
  } else if (auto* m = std::get_if<SemidirectMetacyclicSpec>(&spec.kind)) {
    if (!is_prime(m->p) || m->p == 2) fail(errc::invalid_spec, "p must be an odd prime");
    long long half = (m->p - 1) / 2;
    if (m->alpha < 1 || m->alpha % 2 != 0) fail(errc::invalid_spec, "alpha must be even");
    if (m->beta < 1 || m->beta % half != 0) fail(errc::invalid_spec, "beta must be a multiple of (p-1)/2");
    if (m->p % 4 == 3) {
      // the coprimality constraints are unsatisfiable when (p-1)/2 is even,
      // so they are enforced only on the p = 3 (mod 4) domain
      if (std::gcd(m->alpha, half) != 1) fail(errc::invalid_spec, "alpha must be coprime to (p-1)/2");
      if (std::gcd(m->alpha, m->beta) != 1) fail(errc::invalid_spec, "alpha and beta must be coprime");
    }
    if (!is_primitive_root(m->r, m->p)) fail(errc::not_primitive_root, "r is not a primitive root mod p");
    g->kind_ = Kind::metacyclic;
    g->mc_alpha_ = m->alpha;
    g->mc_beta_ = m->beta;
    g->mc_p_ = m->p;
    g->mc_r_ = m->r;
    g->order_ = static_cast<int>(checked_order(m->alpha * m->beta * m->p));
    long long r2 = m->r * m->r % m->p;
    g->mc_r2pow_.resize(half);
    long long cur = 1;
    for (long long j = 0; j < half; ++j) {
      g->mc_r2pow_[j] = static_cast<int>(cur);
      cur = cur * r2 % m->p;
    }
    g->coords_.resize(g->order_);
    int idx = 0;
    for (int i = 0; i < m->alpha; ++i)
      for (int j = 0; j < m->beta; ++j)
        for (int e = 0; e < m->p; ++e) g->coords_[idx++] = {i, j, e};
  } else if (auto* pm = std::get_if<PermutationSpec>(&spec.kind)) {
    if (pm->degree < 1) fail(errc::invalid_spec, "degree must be positive");
    g->kind_ = Kind::permutation;
    g->perm_degree_ = pm->degree;
    for (const auto& im : pm->generators) {
      if (static_cast<int>(im.size()) != pm->degree) fail(errc::invalid_spec, "generator degree mismatch");
      std::vector<char> hit(pm->degree, 0);
      for (int v : im) {
        if (v < 0 || v >= pm->degree || hit[v]) fail(errc::invalid_spec, "generator is not a permutation");
        hit[v] = 1;
      }
    }
    // breadth-first closure over words in the generators
    std::vector<int> id(pm->degree);
    std::iota(id.begin(), id.end(), 0);
    std::map<std::vector<int>, int> seen;
    std::vector<std::vector<int>> elems{id};
    seen[id] = 0;
    std::queue<int> todo;
    todo.push(0);
    while (!todo.empty()) {
      auto cur = elems[todo.front()];
      todo.pop();
      for (const auto& gen : pm->generators) {
        std::vector<int> prod(pm->degree);
        for (int x = 0; x < pm->degree; ++x) prod[x] = gen[cur[x]];
        if (seen.emplace(prod, static_cast<int>(elems.size())).second) {
          if (static_cast<long long>(elems.size()) + 1 > kMaxOrder)
            fail(errc::invalid_spec, "permutation group too large");
          elems.push_back(prod);
          todo.push(static_cast<int>(elems.size()) - 1);
        }
      }
    }
    std::sort(elems.begin(), elems.end());  // identity is lexicographically least
    g->coords_ = std::move(elems);
    g->order_ = static_cast<int>(g->coords_.size());
  } else if (auto* t = std::get_if<TableSpec>(&spec.kind)) {
    int n = t->order;
    if (n < 1 || static_cast<int>(t->table.size()) != n) fail(errc::not_a_group, "table shape mismatch");
    checked_order(n);
    for (const auto& row : t->table) {
      if (static_cast<int>(row.size()) != n) fail(errc::not_a_group, "table shape mismatch");
      for (int v : row)
        if (v < 0 || v >= n) fail(errc::not_a_group, "table entry out of range");
    }
    g->kind_ = Kind::table;
    g->order_ = n;
    g->table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) g->table_[static_cast<size_t>(a) * n + b] = t->table[a][b];
    // identity must sit at index 0 so that indexing stays canonical
    for (int x = 0; x < n; ++x)
      if (g->table_[x] != x || g->table_[static_cast<size_t>(x) * n] != x)
        fail(errc::not_a_group, "index 0 is not a two-sided identity");
    for (int a = 0; a < n; ++a) {
      bool has_inv = false;
      for (int b = 0; b < n && !has_inv; ++b)
        has_inv = g->table_[static_cast<size_t>(a) * n + b] == 0 &&
                  g->table_[static_cast<size_t>(b) * n + a] == 0;
      if (!has_inv) fail(errc::not_a_group, "element without two-sided inverse");
    }
    auto tb = [&](int a, int b) { return g->table_[static_cast<size_t>(a) * n + b]; };
    if (n <= 128) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (tb(tb(a, b), c) != tb(a, tb(b, c))) fail(errc::not_a_group, "table is not associative");
    } else {
      std::mt19937 rng(0xabcdef);
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int k = 0; k < 100000; ++k) {
        int a = pick(rng), b = pick(rng), c = pick(rng);
        if (tb(tb(a, b), c) != tb(a, tb(b, c))) fail(errc::not_a_group, "table is not associative");
      }
    }
    g->coords_.resize(n);
    for (int i = 0; i < n; ++i) g->coords_[i] = {i};
  } else {
    fail(errc::invalid_spec, "unknown spec kind");
  }

  g->finish_build();
  return g;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::build_trusted_table(std::vector<std::vector<int>> table,
                                                                    std::vector<std::string> names) {
  auto g = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  int n = static_cast<int>(table.size());
  g->kind_ = Kind::table;
  g->order_ = n;
  TableSpec ts;
  ts.order = n;
  ts.table = table;
  g->spec_ = GroupSpec{ts};
  g->table_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g->table_[static_cast<size_t>(a) * n + b] = table[a][b];
  g->coords_.resize(n);
  for (int i = 0; i < n; ++i) g->coords_[i] = {i};
  g->names_ = std::move(names);
  g->finish_build();
  return g;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<char> mask, std::vector<int> witness) {
  Subgroup h;
  h.mask = std::move(mask);
  h.witness = std::move(witness);
  for (int i = 0; i < g.order(); ++i)
    if (h.mask[i]) h.members.push_back(i);
  return h;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens) {
  std::vector<char> mask(g.order(), 0);
  mask[0] = 1;
  std::queue<int> todo;
  todo.push(0);
  for (int x : gens) {
    if (!mask[x]) {
      mask[x] = 1;
      todo.push(x);
    }
  }
  while (!todo.empty()) {
    int cur = todo.front();
    todo.pop();
    for (int s : gens) {
      int nxt = g.mul(cur, s);
      if (!mask[nxt]) {
        mask[nxt] = 1;
        todo.push(nxt);
      }
    }
  }
  return make_subgroup(g, std::move(mask), std::vector<int>(gens.begin(), gens.end()));
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  std::vector<char> mask(g.order(), 0);
  mask[0] = 1;
  return make_subgroup(g, std::move(mask), {});
}

Subgroup full_subgroup(const FiniteGroup& g) {
  return make_subgroup(g, std::vector<char>(g.order(), 1), {});
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> comms;
  std::vector<char> seen(g.order(), 0);
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      int c = g.commutator(a, b);
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return normal_closure(g, subgroup_generated(g, comms));
}

Subgroup normal_closure(const FiniteGroup& g, const Subgroup& h) {
  // fixed point of conjugate-and-close
  Subgroup cur = h;
  for (;;) {
    std::vector<int> gens = cur.members;
    bool grew = false;
    for (int x : cur.members) {
      for (int t = 0; t < g.order(); ++t) {
        int y = g.conj(x, t);
        if (!cur.contains(y)) {
          gens.push_back(y);
          grew = true;
        }
      }
    }
    if (!grew) return cur;
    Subgroup next = subgroup_generated(g, gens);
    next.witness = h.witness;
    cur = std::move(next);
  }
}

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  for (int x : h.members)
    for (int t = 0; t < g.order(); ++t)
      if (!h.contains(g.conj(x, t))) return false;
  return true;
}

static std::vector<std::vector<int>> cosets_impl(const FiniteGroup& g, const Subgroup& h, bool left) {
  std::vector<std::vector<int>> out;
  std::vector<char> assigned(g.order(), 0);
  for (int x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<int> coset;
    coset.reserve(h.order());
    for (int m : h.members) {
      int y = left ? g.mul(x, m) : g.mul(m, x);
      assigned[y] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;  // ascending scan makes reps minimal and ordered
}

std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  return cosets_impl(g, h, true);
}

std::vector<std::vector<int>> right_cosets(const FiniteGroup& g, const Subgroup& h) {
  return cosets_impl(g, h, false);
}

Quotient quotient_group(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) fail(errc::not_normal, "subgroup is not normal");
  auto cosets = left_cosets(g, n);
  int q = static_cast<int>(cosets.size());
  std::vector<int> coset_of(g.order(), -1), rep(q);
  for (int c = 0; c < q; ++c) {
    rep[c] = cosets[c].front();
    for (int m : cosets[c]) coset_of[m] = c;
  }
  std::vector<std::vector<int>> table(q, std::vector<int>(q));
  std::vector<std::string> names(q);
  for (int a = 0; a < q; ++a) {
    names[a] = "[" + g.element_name(rep[a]) + "]";
    for (int b = 0; b < q; ++b) table[a][b] = coset_of[g.mul(rep[a], rep[b])];
  }
  Quotient out;
  out.group = FiniteGroup::build_trusted_table(std::move(table), std::move(names));
  out.coset_of = std::move(coset_of);
  out.rep = std::move(rep);
  return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  SubgroupGroup out;
  out.to_parent = h.members;  // sorted, so identity first
  out.from_parent.assign(g.order(), -1);
  for (int i = 0; i < h.order(); ++i) out.from_parent[h.members[i]] = i;
  std::vector<std::vector<int>> table(h.order(), std::vector<int>(h.order()));
  std::vector<std::string> names(h.order());
  for (int a = 0; a < h.order(); ++a) {
    names[a] = g.element_name(h.members[a]);
    for (int b = 0; b < h.order(); ++b) {
      int prod = g.mul(h.members[a], h.members[b]);
      int idx = out.from_parent[prod];
      if (idx < 0) fail(errc::internal, "subset not closed under multiplication");
      table[a][b] = idx;
    }
  }
  out.group = FiniteGroup::build_trusted_table(std::move(table), std::move(names));
  return out;
}

bool is_cyclic(const FiniteGroup& g) { return cyclic_generator(g).has_value(); }

std::optional<int> cyclic_generator(const FiniteGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.element_order(x) == g.order()) return x;
  return std::nullopt;
}

}  // namespace hamcay
