#include "idemcodes/group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace idemcodes {

int Group::element_order(int a) const {
  int o = 1, x = a;
  while (x != 0) {
    x = mul(x, a);
    ++o;
  }
  return o;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

void Group::validate() const {
  require(n >= 1 && static_cast<int>(table.size()) == n * n, errc::bad_parameters,
          "malformed Cayley table");
  for (int i = 0; i < n; ++i) {
    require(mul(0, i) == i && mul(i, 0) == i, errc::bad_parameters, "identity must be index 0");
  }
  for (int i = 0; i < n; ++i) {
    require(mul(i, inverse[i]) == 0 && mul(inverse[i], i) == 0, errc::bad_parameters,
            "missing two-sided inverse");
  }
  // Latin square rows/columns.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      int r = mul(i, j), c = mul(j, i);
      require(r >= 0 && r < n && !row[r] && !col[c], errc::bad_parameters,
              "table is not a Latin square");
      row[r] = col[c] = true;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        require(mul(mul(a, b), c) == mul(a, mul(b, c)), errc::bad_parameters,
                "operation not associative");
}

namespace {

std::vector<int> compute_inverses(const std::vector<int>& table, int n) {
  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table[a * n + b] == 0) inv[a] = b;
  return inv;
}

std::string power_word(const std::string& letter, i64 e) {
  if (e == 0) return "";
  if (e == 1) return letter;
  return letter + "^" + std::to_string(e);
}

std::string join_word(const std::string& a, const std::string& b) {
  if (a.empty()) return b.empty() ? "1" : b;
  if (b.empty()) return a;
  return a + "*" + b;
}

}  // namespace

Group group_metacyclic(i64 m, i64 n, i64 r) {
  require(m >= 1 && n >= 1, errc::bad_parameters, "orders must be positive");
  require(m * n <= 200, errc::group_too_large, "group order exceeds 200");
  r = mod_i64(r, m);
  require(gcd_i64(r, m) == 1, errc::bad_parameters, "r must be coprime to m");
  require(powmod_i64(r, n, m) == 1 % m, errc::bad_parameters,
          "relation r^n = 1 mod m violated");
  Group G;
  G.n = static_cast<int>(m * n);
  G.table.resize(G.n * G.n);
  // index(a^i b^j) = j*m + i ; b^j a^i = a^(i*r^j) b^j
  std::vector<i64> rpow(n);
  for (i64 j = 0; j < n; ++j) rpow[j] = powmod_i64(r, j, m);
  for (i64 j1 = 0; j1 < n; ++j1)
    for (i64 i1 = 0; i1 < m; ++i1)
      for (i64 j2 = 0; j2 < n; ++j2)
        for (i64 i2 = 0; i2 < m; ++i2) {
          i64 i = mod_i64(i1 + i2 * rpow[j1], m);
          i64 j = mod_i64(j1 + j2, n);
          G.table[(j1 * m + i1) * G.n + (j2 * m + i2)] = static_cast<int>(j * m + i);
        }
  G.inverse = compute_inverses(G.table, G.n);
  G.labels.resize(G.n);
  for (i64 j = 0; j < n; ++j)
    for (i64 i = 0; i < m; ++i)
      G.labels[j * m + i] = join_word(power_word("a", i), power_word("b", j));
  if (m > 1) G.gens.push_back(1);
  if (n > 1) G.gens.push_back(static_cast<int>(m));
  G.spec = "metacyclic(" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(r) +
           ")";
  return G;
}

Group group_cyclic(i64 m) {
  Group G = group_metacyclic(m, 1, 1);
  G.spec = "cyclic(" + std::to_string(m) + ")";
  return G;
}

Group group_direct(const Group& A, const Group& B) {
  require(static_cast<i64>(A.n) * B.n <= 200, errc::group_too_large, "group order exceeds 200");
  Group G;
  G.n = A.n * B.n;
  G.table.resize(G.n * G.n);
  for (int a1 = 0; a1 < A.n; ++a1)
    for (int b1 = 0; b1 < B.n; ++b1)
      for (int a2 = 0; a2 < A.n; ++a2)
        for (int b2 = 0; b2 < B.n; ++b2)
          G.table[(a1 * B.n + b1) * G.n + (a2 * B.n + b2)] =
              A.mul(a1, a2) * B.n + B.mul(b1, b2);
  G.inverse = compute_inverses(G.table, G.n);

  // Rename B's generator letters so they stay distinct from A's.
  std::set<char> used;
  for (const auto& l : A.labels)
    for (char c : l)
      if (c >= 'a' && c <= 'z') used.insert(c);
  std::map<char, char> rename;
  char next = 'a';
  for (const auto& l : B.labels)
    for (char c : l)
      if (c >= 'a' && c <= 'z' && !rename.count(c)) {
        while (used.count(next)) ++next;
        require(next <= 'z', errc::bad_parameters, "out of generator letters");
        rename[c] = next;
        used.insert(next);
      }
  auto relabel = [&](const std::string& s) {
    std::string r = s;
    for (char& c : r)
      if (rename.count(c)) c = rename[c];
    return r;
  };
  G.labels.resize(G.n);
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b) {
      const std::string& la = A.labels[a];
      std::string lb = relabel(B.labels[b]);
      G.labels[a * B.n + b] = join_word(la == "1" ? "" : la, lb == "1" ? "" : lb);
    }
  for (int g : A.gens) G.gens.push_back(g * B.n);
  for (int g : B.gens) G.gens.push_back(g);
  G.spec = "direct(" + A.spec + "," + B.spec + ")";
  return G;
}

Group group_from_cayley(const std::vector<std::vector<int>>& table, const std::string& spec) {
  int n = static_cast<int>(table.size());
  require(n >= 1 && n <= 200, errc::group_too_large, "table order out of range");
  Group G;
  G.n = n;
  G.table.resize(n * n);
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(table[i].size()) == n, errc::bad_parameters, "table not square");
    for (int j = 0; j < n; ++j) {
      require(table[i][j] >= 0 && table[i][j] < n, errc::bad_parameters,
              "table entry out of range");
      G.table[i * n + j] = table[i][j];
    }
  }
  G.inverse = compute_inverses(G.table, n);
  for (int a : G.inverse)
    require(a >= 0, errc::bad_parameters, "table has no inverses");
  G.labels.resize(n);
  for (int i = 0; i < n; ++i) G.labels[i] = "g" + std::to_string(i);
  G.spec = spec;
  G.validate();
  G.gens = greedy_generators(G);
  return G;
}

// ---------------------------------------------------------------------------
// Subgroups

namespace {

std::vector<std::uint64_t> make_mask(int n, const std::vector<int>& elems) {
  std::vector<std::uint64_t> mask((n + 63) / 64, 0);
  for (int e : elems) mask[e >> 6] |= std::uint64_t{1} << (e & 63);
  return mask;
}

std::vector<int> closure(const Group& G, std::vector<int> seed) {
  std::vector<bool> in(G.n, false);
  std::vector<int> list;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = true;
      list.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j < list.size(); ++j) add(G.mul(list[i], list[j]));
  std::sort(list.begin(), list.end());
  return list;
}

}  // namespace

Subgroup subgroup_from_elements(const Group& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  Subgroup S{&G, elems, make_mask(G.n, elems)};
  require(!elems.empty() && elems[0] == 0, errc::bad_parameters, "subgroup must contain identity");
  for (int a : elems) {
    require(S.contains(G.inv(a)), errc::bad_parameters, "set not closed under inverses");
    for (int b : elems)
      require(S.contains(G.mul(a, b)), errc::bad_parameters, "set not closed under product");
  }
  return S;
}

Subgroup generated_subgroup(const Group& G, const std::vector<int>& gens) {
  auto elems = closure(G, gens);
  return Subgroup{&G, elems, make_mask(G.n, elems)};
}

Subgroup trivial_subgroup(const Group& G) { return generated_subgroup(G, {}); }

Subgroup full_subgroup(const Group& G) {
  std::vector<int> all(G.n);
  for (int i = 0; i < G.n; ++i) all[i] = i;
  return Subgroup{&G, all, make_mask(G.n, all)};
}

Subgroup conjugate_subgroup(const Subgroup& S, int g) {
  const Group& G = *S.parent;
  std::vector<int> elems;
  elems.reserve(S.elems.size());
  for (int x : S.elems) elems.push_back(G.conj(x, g));
  std::sort(elems.begin(), elems.end());
  return Subgroup{&G, elems, make_mask(G.n, elems)};
}

bool Subgroup::contains_all(const Subgroup& other) const {
  for (size_t i = 0; i < mask.size(); ++i)
    if (other.mask[i] & ~mask[i]) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  for (int a : elems)
    for (int b : elems)
      if (parent->mul(a, b) != parent->mul(b, a)) return false;
  return true;
}

std::vector<Subgroup> subgroups(const Group& G, int bound) {
  require(G.n <= bound, errc::group_too_large,
          "subgroup enumeration bound exceeded (" + std::to_string(G.n) + ")");
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> work;
  auto add = [&](std::vector<int> elems) {
    if (known.insert(elems).second) work.push_back(std::move(elems));
  };
  add(closure(G, {}));
  for (int g = 1; g < G.n; ++g) add(closure(G, {g}));
  for (size_t i = 0; i < work.size(); ++i) {
    std::vector<int> base = work[i];
    for (int g = 1; g < G.n; ++g) {
      if (std::binary_search(base.begin(), base.end(), g)) continue;
      std::vector<int> seed = base;
      seed.push_back(g);
      add(closure(G, seed));
    }
  }
  std::vector<Subgroup> out;
  out.reserve(known.size());
  for (const auto& elems : known) out.push_back(Subgroup{&G, elems, make_mask(G.n, elems)});
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup normalizer(const Group& G, const Subgroup& K) {
  std::vector<int> elems;
  for (int g = 0; g < G.n; ++g) {
    bool ok = true;
    for (int x : K.elems)
      if (!K.contains(G.conj(x, g))) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g);
  }
  return Subgroup{&G, elems, make_mask(G.n, elems)};
}

Subgroup centralizer(const Group& G, const std::vector<int>& set) {
  std::vector<int> elems;
  for (int g = 0; g < G.n; ++g) {
    bool ok = true;
    for (int x : set)
      if (G.mul(g, x) != G.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) elems.push_back(g);
  }
  return Subgroup{&G, elems, make_mask(G.n, elems)};
}

Subgroup centralizer(const Group& G, const Subgroup& S) { return centralizer(G, S.elems); }

Subgroup commutator_subgroup(const Group& G) {
  std::vector<int> seeds;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b) seeds.push_back(G.mul(G.inv(G.mul(b, a)), G.mul(a, b)));
  return generated_subgroup(G, seeds);
}

Subgroup center(const Group& G) {
  std::vector<int> all(G.n);
  for (int i = 0; i < G.n; ++i) all[i] = i;
  return centralizer(G, all);
}

QuotientMap quotient(const Subgroup& N, const Subgroup& K) {
  const Group& G = *N.parent;
  require(K.parent == N.parent && N.contains_all(K), errc::bad_parameters,
          "kernel must be a subgroup of the source");
  for (int g : N.elems)
    for (int x : K.elems)
      require(K.contains(G.conj(x, g)), errc::not_normal, "kernel not normal in source");

  QuotientMap qm;
  qm.parent = &G;
  qm.source = N;
  qm.kernel = K;
  qm.proj.assign(G.n, -1);
  std::vector<int> reps;
  for (int g : N.elems) {
    if (qm.proj[g] >= 0) continue;
    int rep = g;  // elements scanned ascending, so g is the smallest of its coset
    int idx = static_cast<int>(reps.size());
    reps.push_back(rep);
    for (int k : K.elems) qm.proj[G.mul(k, g)] = idx;
  }
  auto Q = std::make_shared<Group>();
  Q->n = static_cast<int>(reps.size());
  Q->table.resize(Q->n * Q->n);
  for (int i = 0; i < Q->n; ++i)
    for (int j = 0; j < Q->n; ++j) Q->table[i * Q->n + j] = qm.proj[G.mul(reps[i], reps[j])];
  Q->inverse = compute_inverses(Q->table, Q->n);
  Q->labels.resize(Q->n);
  for (int i = 0; i < Q->n; ++i) Q->labels[i] = G.labels[reps[i]];
  Q->spec = G.spec + "/K";
  Q->gens = greedy_generators(*Q);
  qm.quotient = Q;
  qm.section = reps;
  return qm;
}

Subgroup image_subgroup(const QuotientMap& qm, const Subgroup& S) {
  std::vector<int> elems;
  for (int g : S.elems) elems.push_back(qm.project(g));
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return Subgroup{qm.quotient.get(), elems, make_mask(qm.quotient->n, elems)};
}

Subgroup preimage_subgroup(const QuotientMap& qm, const Subgroup& Sq) {
  std::vector<int> elems;
  for (int g : qm.source.elems)
    if (Sq.contains(qm.proj[g])) elems.push_back(g);
  return Subgroup{qm.parent, elems, make_mask(qm.parent->n, elems)};
}

std::vector<int> transversal(const Group& G, const Subgroup& H) {
  std::vector<bool> covered(G.n, false);
  std::vector<int> reps;
  for (int g = 0; g < G.n; ++g) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (int h : H.elems) covered[G.mul(h, g)] = true;
  }
  return reps;
}

std::pair<Subgroup, Subgroup> primary_decomposition(const Group& Q, i64 p) {
  std::vector<int> ppart, pprime;
  for (int g = 0; g < Q.n; ++g) {
    int o = Q.element_order(g);
    bool ispow = true;
    int t = o;
    while (t % p == 0) t /= static_cast<int>(p);
    ispow = (t == 1);
    if (ispow) ppart.push_back(g);
    if (o % p != 0) pprime.push_back(g);
  }
  auto check = [&](const std::vector<int>& elems) {
    Subgroup S{&Q, elems, make_mask(Q.n, elems)};
    for (int a : elems)
      for (int b : elems)
        require(S.contains(Q.mul(a, b)), errc::not_nilpotent,
                "primary parts are not subgroups");
    return S;
  };
  Subgroup S2 = check(ppart), S2p = check(pprime);
  require(static_cast<i64>(S2.order()) * S2p.order() == Q.n, errc::not_nilpotent,
          "primary parts do not factor the group");
  return {S2, S2p};
}

std::optional<int> cyclic_witness(const Group& Q) {
  int best = 0, best_ord = 1;
  for (int g = 0; g < Q.n; ++g) {
    int o = Q.element_order(g);
    if (o > best_ord) {
      best_ord = o;
      best = g;
    }
  }
  if (best_ord == Q.n) return best;
  return std::nullopt;
}

std::optional<int> cyclic_witness(const Subgroup& S) {
  const Group& G = *S.parent;
  int best = 0, best_ord = 1;
  for (int g : S.elems) {
    int o = G.element_order(g);
    if (o > best_ord) {
      best_ord = o;
      best = g;
    }
  }
  if (best_ord == S.order()) return best;
  return std::nullopt;
}

bool is_nilpotent(const Group& G) {
  for (i64 p : prime_divisors(G.n)) {
    std::vector<int> ppart;
    for (int g = 0; g < G.n; ++g) {
      int o = G.element_order(g);
      while (o % p == 0) o /= static_cast<int>(p);
      if (o == 1) ppart.push_back(g);
    }
    auto mask = make_mask(G.n, ppart);
    Subgroup S{&G, ppart, mask};
    for (int a : ppart)
      for (int b : ppart)
        if (!S.contains(G.mul(a, b))) return false;
  }
  return true;
}

std::vector<Subgroup> minimal_prime_subgroups(const Group& Q) {
  auto w = cyclic_witness(Q);
  require(w.has_value(), errc::not_cyclic, "group is not cyclic");
  std::vector<Subgroup> out;
  for (i64 p : prime_divisors(Q.n)) {
    int g = *w;
    int e = static_cast<int>(Q.n / p);
    int x = 0;
    for (int i = 0; i < e; ++i) x = Q.mul(x, g);
    out.push_back(generated_subgroup(Q, {x}));
  }
  return out;
}

std::vector<int> greedy_generators(const Group& G) {
  std::vector<int> gens;
  std::vector<int> current = closure(G, {});
  for (int g = 1; g < G.n && static_cast<int>(current.size()) < G.n; ++g) {
    if (std::binary_search(current.begin(), current.end(), g)) continue;
    gens.push_back(g);
    std::vector<int> seed = current;
    seed.push_back(g);
    current = closure(G, seed);
  }
  return gens;
}

}  // namespace idemcodes
