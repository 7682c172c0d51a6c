#pragma once

#include <map>
#include <memory>

#include "idemcodes/algebra.hpp"

namespace idemcodes {

/// Orbit of a residue class mod m under multiplication by s. Faithful classes
/// consist of units mod m (and index the components over a given pair).
struct CyclotomicClass {
  i64 modulus = 1;
  std::vector<i64> residues;  // sorted
  bool faithful = false;

  i64 smallest() const { return residues.front(); }
  bool operator==(const CyclotomicClass& o) const {
    return modulus == o.modulus && residues == o.residues;
  }
};

/// All orbits of Z_m under j -> s*j, sorted by smallest member ({0} first).
std::vector<CyclotomicClass> cyclotomic_classes(i64 s, i64 m);

/// eps(H,K) over Q: K~ when H = K, else the product of (K~ - M~) over the
/// preimages M of the minimal subgroups of the cyclic quotient H/K.
RatAlgElem eps_rational(const Subgroup& H, const Subgroup& K);

/// Literal SS1-SS3 test; SS3 is checked exactly over Q on coset
/// representatives outside N_G(K).
bool is_strong_shoda_pair(const Group& G, const Subgroup& H, const Subgroup& K);

/// Per-run context: group, working field, and a cache of field towers.
class ShodaCtx {
 public:
  ShodaCtx(const Group& G, FieldCtxPtr field);

  const Group& group() const { return *G_; }
  const FieldCtxPtr& field() const { return field_; }
  i64 s() const { return field_->card(); }

  std::shared_ptr<const ExtensionCtx> ext_of_degree(int o) const;

 private:
  const Group* G_;
  FieldCtxPtr field_;
  mutable std::map<int, std::shared_ptr<const ExtensionCtx>> cache_;
};

/// A strong Shoda pair with everything the constructions need cached:
/// N = N_G(K), the stabilizer E = E_G(H/K), the fixed generator of H/K with
/// its discrete-log table, o = ord_s([H:K]), and the twisting data.
struct StrongShodaPair {
  Subgroup H, K, N, E;
  QuotientMap qHK;  // H/K
  i64 m = 1;        // [H:K]
  int hk_gen_q = 0;
  int hk_gen = 0;  // parent lift of the H/K generator
  i64 o = 1;       // multiplicative order of s mod m
  std::vector<i64> dlog;  // quotient index -> exponent w.r.t. hk_gen_q
  i64 ehi = 1;            // [E:H]
  bool twisting_trivial = true;
  std::vector<int> T1;  // complement-derived transversal of H in E (when trivial)
  std::vector<std::vector<i64>> cocycle;  // zeta exponents for the default section otherwise

  i64 index_in_G() const { return H.parent->n / H.order(); }  // [G:H]
};

using SspPtr = std::shared_ptr<const StrongShodaPair>;

/// Builds the cached pair data; the pair must already satisfy SS1-SS2
/// (structurally enforced) and is expected to be a strong Shoda pair.
SspPtr make_strong_shoda_pair(const ShodaCtx& ctx, const Subgroup& H, const Subgroup& K);

/// Conjugation exponent of g on H/K: g hk_gen g^-1 = hk_gen^i mod K.
i64 action_exponent(const StrongShodaPair& ssp, int g);

/// Faithful s-cyclotomic classes of H/K, sorted by smallest residue.
std::vector<CyclotomicClass> faithful_classes(const ShodaCtx& ctx, const StrongShodaPair& ssp);

/// eps_C(H,K) = |H|^-1 sum_h tr(chi(hK)) h^-1 with chi sending the fixed
/// generator to xi_m^j for the smallest j in C.
AlgElem eps_C(const ShodaCtx& ctx, const StrongShodaPair& ssp, const CyclotomicClass& C);

/// Sum of the distinct G-conjugates of eps_C; a primitive central idempotent.
AlgElem e_C(const ShodaCtx& ctx, const StrongShodaPair& ssp, const CyclotomicClass& C);

/// Stabilizer E_G(H/K) of a faithful cyclotomic class (verified independent
/// of the class); standalone variant for tests.
Subgroup stabilizer_E(const ShodaCtx& ctx, const Subgroup& H, const Subgroup& K);

/// One strong Shoda pair together with its faithful classes and their
/// central idempotents over the working field.
struct SspEntry {
  SspPtr pair;
  std::vector<CyclotomicClass> classes;  // faithful, orbit-deduplicated
  std::vector<AlgElem> e_values;         // parallel to classes
};

/// All pairs passing SS1-SS3, in (|H| desc, |K| asc, element sets) order,
/// before redundancy elimination.
std::vector<SspEntry> all_strong_shoda_pairs(const ShodaCtx& ctx);

/// Non-redundant list: pairs yielding the same set of central idempotents
/// are collapsed onto the first one in the canonical order.
std::vector<SspEntry> strong_shoda_pairs(const ShodaCtx& ctx);

/// Metabelian route (maximal H over a fixed maximal abelian A >= G'),
/// deduplicated the same way; used as an independent oracle.
std::vector<SspEntry> strong_shoda_pairs_metabelian(const ShodaCtx& ctx);

/// Wedderburn component determined by (pair, class):
/// FG e_C = M_{[G:H]}(F_{s^{o/[E:H]}}).
struct ComponentInfo {
  SspPtr pair;
  CyclotomicClass cls;
  AlgElem e;
  i64 matrix_size = 1;    // [G:H]
  i64 field_order = 1;    // s^(o/[E:H])
  i64 component_dim = 1;  // [G:H]^2 * o/[E:H]
  /// Other (pair, class) combinations generating the same idempotent.
  std::vector<std::pair<SspPtr, CyclotomicClass>> aliases;
};

struct WedderburnReport {
  std::vector<ComponentInfo> components;
  bool orthogonal = false;
  bool complete = false;  // sum of the e_C equals 1
  i64 dim_sum = 0;
};

WedderburnReport wedderburn_report(const ShodaCtx& ctx);

}  // namespace idemcodes
