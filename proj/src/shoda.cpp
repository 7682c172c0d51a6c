#include "idemcodes/shoda.hpp"

#include <algorithm>
#include <set>

namespace idemcodes {

std::vector<CyclotomicClass> cyclotomic_classes(i64 s, i64 m) {
  require(m >= 1, errc::bad_parameters, "modulus must be positive");
  i64 sm = mod_i64(s, m);
  require(gcd_i64(sm == 0 ? m : sm, m) == 1 || m == 1, errc::not_coprime,
          "s must be coprime to the modulus");
  std::vector<bool> seen(m, false);
  std::vector<CyclotomicClass> out;
  for (i64 j = 0; j < m; ++j) {
    if (seen[j]) continue;
    CyclotomicClass c;
    c.modulus = m;
    i64 x = j;
    do {
      seen[x] = true;
      c.residues.push_back(x);
      x = mod_i64(x * sm, m);
    } while (x != j);
    std::sort(c.residues.begin(), c.residues.end());
    c.faithful = (gcd_i64(j, m) == 1) || m == 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const CyclotomicClass& a, const CyclotomicClass& b) {
              return a.smallest() < b.smallest();
            });
  return out;
}

RatAlgElem eps_rational(const Subgroup& H, const Subgroup& K) {
  const Group& G = *H.parent;
  require(K.parent == H.parent && H.contains_all(K), errc::bad_parameters,
          "K must be a subgroup of H");
  if (H.order() == K.order()) return tilde_rational(K);
  QuotientMap q = quotient(H, K);  // throws NotNormal if K is not normal in H
  require(is_cyclic(*q.quotient), errc::quotient_not_cyclic, "H/K must be cyclic");
  RatAlgElem r = rat_one(G);
  RatAlgElem kt = tilde_rational(K);
  for (const Subgroup& Mq : minimal_prime_subgroups(*q.quotient)) {
    Subgroup M = preimage_subgroup(q, Mq);
    r = r * (kt - tilde_rational(M));
  }
  return r;
}

namespace {

bool normal_in(const Subgroup& H, const Subgroup& N) {
  const Group& G = *H.parent;
  if (!N.contains_all(H)) return false;
  for (int g : N.elems)
    for (int x : H.elems)
      if (!H.contains(G.conj(x, g))) return false;
  return true;
}

bool ss3_holds(const Group& G, const Subgroup& H, const Subgroup& K, const Subgroup& N) {
  RatAlgElem eps = eps_rational(H, K);
  auto reps = transversal(G, N);
  for (size_t i = 1; i < reps.size(); ++i) {
    if (!(eps * conjugate(eps, reps[i])).is_zero()) return false;
  }
  return true;
}

// SS2 given the quotient N/K and its subgroup list.
bool ss2_holds(const QuotientMap& qNK, const std::vector<Subgroup>& subsNK, const Subgroup& H) {
  Subgroup Hq = image_subgroup(qNK, H);
  if (!cyclic_witness(Hq).has_value()) return false;
  for (const Subgroup& S : subsNK) {
    if (S.order() > Hq.order() && S.contains_all(Hq) && S.is_abelian()) return false;
  }
  return true;
}

}  // namespace

bool is_strong_shoda_pair(const Group& G, const Subgroup& H, const Subgroup& K) {
  if (!H.contains_all(K)) return false;
  Subgroup N = normalizer(G, K);
  if (!normal_in(H, N)) return false;  // SS1
  QuotientMap qNK = quotient(N, K);
  auto subsNK = subgroups(*qNK.quotient);
  if (!ss2_holds(qNK, subsNK, H)) return false;
  return ss3_holds(G, H, K, N);
}

// ---------------------------------------------------------------------------
// ShodaCtx

ShodaCtx::ShodaCtx(const Group& G, FieldCtxPtr field) : G_(&G), field_(std::move(field)) {
  require(G.n % field_->p() != 0, errc::characteristic_divides_order,
          "characteristic divides the group order");
}

std::shared_ptr<const ExtensionCtx> ShodaCtx::ext_of_degree(int o) const {
  auto it = cache_.find(o);
  if (it != cache_.end()) return it->second;
  auto ext = std::make_shared<const ExtensionCtx>(field_, o);
  cache_[o] = ext;
  return ext;
}

// ---------------------------------------------------------------------------
// Pair data

i64 action_exponent(const StrongShodaPair& ssp, int g) {
  const Group& G = *ssp.H.parent;
  int z = G.mul(G.mul(g, ssp.hk_gen), G.inv(g));  // g y g^-1
  require(ssp.H.contains(z), errc::internal, "conjugation does not preserve H");
  return ssp.dlog[ssp.qHK.project(z)];
}

namespace {

std::vector<i64> class_action(const CyclotomicClass& C, i64 i) {
  std::vector<i64> r;
  r.reserve(C.residues.size());
  for (i64 j : C.residues) r.push_back(mod_i64(i * j, C.modulus));
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

SspPtr make_strong_shoda_pair(const ShodaCtx& ctx, const Subgroup& H, const Subgroup& K) {
  const Group& G = ctx.group();
  auto ssp = std::make_shared<StrongShodaPair>();
  ssp->H = H;
  ssp->K = K;
  require(H.contains_all(K), errc::bad_parameters, "K must be a subgroup of H");
  ssp->N = normalizer(G, K);
  require(normal_in(H, ssp->N), errc::not_strong_shoda_pair, "SS1 fails: H not normal in N_G(K)");
  ssp->qHK = quotient(H, K);
  auto wit = cyclic_witness(*ssp->qHK.quotient);
  require(wit.has_value(), errc::quotient_not_cyclic, "H/K must be cyclic");
  ssp->hk_gen_q = *wit;
  ssp->hk_gen = ssp->qHK.lift(ssp->hk_gen_q);
  ssp->m = ssp->qHK.quotient->n;
  ssp->o = multiplicative_order_mod(ctx.s(), ssp->m);

  ssp->dlog.assign(ssp->m, 0);
  {
    int x = 0;
    for (i64 e = 0; e < ssp->m; ++e) {
      ssp->dlog[x] = e;
      x = ssp->qHK.quotient->mul(x, ssp->hk_gen_q);
    }
  }

  // Stabilizer E of a faithful class; checked to be class-independent.
  auto classes = cyclotomic_classes(ctx.s(), ssp->m);
  std::vector<const CyclotomicClass*> faithful;
  for (const auto& c : classes)
    if (c.faithful) faithful.push_back(&c);
  require(!faithful.empty(), errc::internal, "no faithful class");
  std::vector<int> stab;
  for (int g : ssp->N.elems) {
    i64 i = action_exponent(*ssp, g);
    if (class_action(*faithful[0], i) == faithful[0]->residues) stab.push_back(g);
  }
  ssp->E = subgroup_from_elements(G, stab);
  for (size_t ci = 1; ci < faithful.size(); ++ci) {
    for (int g : ssp->N.elems) {
      bool in = class_action(*faithful[ci], action_exponent(*ssp, g)) == faithful[ci]->residues;
      require(in == ssp->E.contains(g), errc::internal,
              "stabilizer depends on the cyclotomic class");
    }
  }
  require(ssp->E.contains_all(H), errc::internal, "H not contained in E");
  ssp->ehi = ssp->E.order() / H.order();
  require(ssp->o % ssp->ehi == 0, errc::not_strong_shoda_pair,
          "[E:H] does not divide o; pair is not strong Shoda over this field");

  // Twisting: search for a complement of H/K in E/K. When one exists the
  // homomorphic section makes the twisting trivial.
  QuotientMap qEK = quotient(ssp->E, K);
  Subgroup Hq = image_subgroup(qEK, H);
  ssp->twisting_trivial = false;
  for (const Subgroup& S : subgroups(*qEK.quotient)) {
    if (static_cast<i64>(S.order()) * Hq.order() != qEK.quotient->n) continue;
    bool trivial_meet = true;
    for (int x : S.elems)
      if (x != 0 && Hq.contains(x)) {
        trivial_meet = false;
        break;
      }
    if (!trivial_meet) continue;
    ssp->twisting_trivial = true;
    for (int q : S.elems) ssp->T1.push_back(qEK.lift(q));
    break;
  }
  if (!ssp->twisting_trivial) {
    // Cocycle of the smallest-representative section, for reporting.
    std::vector<int> reps;
    {
      std::vector<bool> covered(G.n, false);
      for (int g : ssp->E.elems) {
        if (covered[g]) continue;
        reps.push_back(g);
        for (int h : H.elems) covered[G.mul(h, g)] = true;
      }
    }
    int nn = static_cast<int>(reps.size());
    std::vector<int> coset_of(G.n, -1);
    for (int i = 0; i < nn; ++i)
      for (int h : H.elems) coset_of[G.mul(h, reps[i])] = i;
    ssp->cocycle.assign(nn, std::vector<i64>(nn, 0));
    for (int i = 0; i < nn; ++i)
      for (int j = 0; j < nn; ++j) {
        int prod = G.mul(reps[i], reps[j]);
        int tij = reps[coset_of[prod]];
        int z = G.mul(G.inv(tij), prod);
        ssp->cocycle[i][j] = ssp->dlog[ssp->qHK.project(z)];
      }
  }
  return ssp;
}

std::vector<CyclotomicClass> faithful_classes(const ShodaCtx& ctx, const StrongShodaPair& ssp) {
  std::vector<CyclotomicClass> out;
  for (auto& c : cyclotomic_classes(ctx.s(), ssp.m))
    if (c.faithful) out.push_back(std::move(c));
  return out;
}

AlgElem eps_C(const ShodaCtx& ctx, const StrongShodaPair& ssp, const CyclotomicClass& C) {
  const Group& G = ctx.group();
  const FieldCtx& F = *ctx.field();
  require(C.faithful, errc::not_faithful_class, "class must be faithful");
  require(C.modulus == ssp.m, errc::bad_parameters, "class modulus mismatch");
  if (ssp.m == 1) return tilde(ssp.H, F);

  auto ext = ctx.ext_of_degree(static_cast<int>(ssp.o));
  FieldElem xi = ext->root_of_unity(ssp.m);
  FieldElem zeta = xi.pow(C.smallest());
  std::vector<FieldElem> zpow(ssp.m);
  zpow[0] = ext->top()->one();
  for (i64 i = 1; i < ssp.m; ++i) zpow[i] = zpow[i - 1] * zeta;

  AlgElem r = alg_zero(G, F);
  for (int h : ssp.H.elems) {
    i64 e = ssp.dlog[ssp.qHK.project(h)];
    FieldElem tr = ext->trace_to_subfield(zpow[e], 1);
    r.coeffs[G.inv(h)] += ext->to_base(tr);
  }
  return r.scaled(F.from_int(ssp.H.order()).inv());
}

AlgElem e_C(const ShodaCtx& ctx, const StrongShodaPair& ssp, const CyclotomicClass& C) {
  const Group& G = ctx.group();
  AlgElem eps = eps_C(ctx, ssp, C);
  std::set<std::vector<i64>> seen;
  AlgElem sum = alg_zero(G, *ctx.field());
  for (int g = 0; g < G.n; ++g) {
    AlgElem cg = conjugate(eps, g);
    if (seen.insert(cg.key()).second) sum = sum + cg;
  }
  return sum;
}

Subgroup stabilizer_E(const ShodaCtx& ctx, const Subgroup& H, const Subgroup& K) {
  return make_strong_shoda_pair(ctx, H, K)->E;
}

// ---------------------------------------------------------------------------
// Pair search

namespace {

/// Classes deduplicated by central idempotent value (classes in one N-orbit
/// yield the same e_C); keeps the class with the smallest residue.
SspEntry build_entry(const ShodaCtx& ctx, SspPtr pair) {
  SspEntry entry;
  entry.pair = pair;
  std::set<std::vector<i64>> seen;
  for (auto& c : faithful_classes(ctx, *pair)) {
    AlgElem e = e_C(ctx, *pair, c);
    if (seen.insert(e.key()).second) {
      entry.classes.push_back(c);
      entry.e_values.push_back(std::move(e));
    }
  }
  return entry;
}

bool entry_order(const SspEntry& a, const SspEntry& b) {
  if (a.pair->H.order() != b.pair->H.order()) return a.pair->H.order() > b.pair->H.order();
  if (a.pair->H.elems != b.pair->H.elems) return a.pair->H.elems < b.pair->H.elems;
  if (a.pair->K.order() != b.pair->K.order()) return a.pair->K.order() < b.pair->K.order();
  return a.pair->K.elems < b.pair->K.elems;
}

std::vector<i64> entry_signature(const SspEntry& e) {
  std::vector<std::vector<i64>> keys;
  for (const auto& v : e.e_values) keys.push_back(v.key());
  std::sort(keys.begin(), keys.end());
  std::vector<i64> flat;
  for (auto& k : keys) {
    flat.push_back(static_cast<i64>(k.size()));
    flat.insert(flat.end(), k.begin(), k.end());
  }
  return flat;
}

std::vector<SspEntry> dedup_entries(std::vector<SspEntry> entries) {
  std::sort(entries.begin(), entries.end(), entry_order);
  std::set<std::vector<i64>> seen;
  std::vector<SspEntry> out;
  for (auto& e : entries)
    if (seen.insert(entry_signature(e)).second) out.push_back(std::move(e));
  return out;
}

Subgroup subgroup_commutator(const Group& G, const Subgroup& B) {
  std::vector<int> seeds;
  for (int a : B.elems)
    for (int b : B.elems) seeds.push_back(G.mul(G.inv(G.mul(b, a)), G.mul(a, b)));
  return generated_subgroup(G, seeds);
}

}  // namespace

std::vector<SspEntry> all_strong_shoda_pairs(const ShodaCtx& ctx) {
  const Group& G = ctx.group();
  auto subs = subgroups(G);
  std::vector<SspEntry> entries;
  for (const Subgroup& K : subs) {
    Subgroup N = normalizer(G, K);
    QuotientMap qNK = quotient(N, K);
    auto subsNK = subgroups(*qNK.quotient);
    for (const Subgroup& H : subs) {
      if (!H.contains_all(K)) continue;
      if (!normal_in(H, N)) continue;
      if (!ss2_holds(qNK, subsNK, H)) continue;
      if (!ss3_holds(G, H, K, N)) continue;
      entries.push_back(build_entry(ctx, make_strong_shoda_pair(ctx, H, K)));
    }
  }
  std::sort(entries.begin(), entries.end(), entry_order);
  return entries;
}

std::vector<SspEntry> strong_shoda_pairs(const ShodaCtx& ctx) {
  return dedup_entries(all_strong_shoda_pairs(ctx));
}

std::vector<SspEntry> strong_shoda_pairs_metabelian(const ShodaCtx& ctx) {
  const Group& G = ctx.group();
  Subgroup Gp = commutator_subgroup(G);
  require(Gp.is_abelian(), errc::bad_parameters, "group is not metabelian");
  auto subs = subgroups(G);

  // First maximal abelian subgroup containing G' in canonical subgroup order.
  const Subgroup* A = nullptr;
  for (const Subgroup& S : subs) {
    if (!S.is_abelian() || !S.contains_all(Gp)) continue;
    bool maximal = true;
    for (const Subgroup& T : subs)
      if (T.order() > S.order() && T.contains_all(S) && T.is_abelian()) {
        maximal = false;
        break;
      }
    if (maximal) {
      A = &S;
      break;
    }
  }
  require(A != nullptr, errc::internal, "no maximal abelian subgroup found");

  std::vector<Subgroup> comms(subs.size());
  std::vector<bool> comm_done(subs.size(), false);
  auto commutator_of = [&](size_t i) -> const Subgroup& {
    if (!comm_done[i]) {
      comms[i] = subgroup_commutator(G, subs[i]);
      comm_done[i] = true;
    }
    return comms[i];
  };

  std::vector<SspEntry> entries;
  for (const Subgroup& K : subs) {
    // Candidates B with A <= B and B' <= K <= B.
    std::vector<size_t> pool;
    for (size_t i = 0; i < subs.size(); ++i) {
      const Subgroup& B = subs[i];
      if (!B.contains_all(*A) || !B.contains_all(K)) continue;
      if (!K.contains_all(commutator_of(i))) continue;
      pool.push_back(i);
    }
    for (size_t i : pool) {
      bool maximal = true;
      for (size_t j : pool)
        if (subs[j].order() > subs[i].order() && subs[j].contains_all(subs[i])) {
          maximal = false;
          break;
        }
      if (!maximal) continue;
      QuotientMap q = quotient(subs[i], K);
      if (!is_cyclic(*q.quotient)) continue;
      if (!is_strong_shoda_pair(G, subs[i], K)) continue;
      entries.push_back(build_entry(ctx, make_strong_shoda_pair(ctx, subs[i], K)));
    }
  }
  return dedup_entries(std::move(entries));
}

WedderburnReport wedderburn_report(const ShodaCtx& ctx) {
  const Group& G = ctx.group();
  WedderburnReport rep;
  std::map<std::vector<i64>, size_t> by_value;
  for (auto& entry : all_strong_shoda_pairs(ctx)) {
    for (size_t ci = 0; ci < entry.classes.size(); ++ci) {
      auto key = entry.e_values[ci].key();
      auto it = by_value.find(key);
      if (it != by_value.end()) {
        rep.components[it->second].aliases.emplace_back(entry.pair, entry.classes[ci]);
        continue;
      }
      ComponentInfo info;
      info.pair = entry.pair;
      info.cls = entry.classes[ci];
      info.e = entry.e_values[ci];
      info.matrix_size = G.n / entry.pair->H.order();
      i64 f = entry.pair->o / entry.pair->ehi;
      info.field_order = 1;
      for (i64 i = 0; i < f; ++i) info.field_order *= ctx.s();
      info.component_dim = info.matrix_size * info.matrix_size * f;
      by_value[key] = rep.components.size();
      rep.components.push_back(std::move(info));
    }
  }
  rep.orthogonal = true;
  for (size_t i = 0; i < rep.components.size(); ++i)
    for (size_t j = i + 1; j < rep.components.size(); ++j)
      if (!are_orthogonal(rep.components[i].e, rep.components[j].e)) rep.orthogonal = false;
  AlgElem sum = alg_zero(G, *ctx.field());
  rep.dim_sum = 0;
  for (const auto& c : rep.components) {
    sum = sum + c.e;
    rep.dim_sum += c.component_dim;
  }
  rep.complete = (sum == alg_one(G, *ctx.field()));
  return rep;
}

}  // namespace idemcodes
