#pragma once

#include "idemcodes/linalg.hpp"
#include "idemcodes/shoda.hpp"

namespace idemcodes {

/// Everything needed to evaluate the isomorphism psi between FE eps and
/// M_n(F_{s^{o/n}}) for a trivial-twisting component: the identification of
/// FH eps with F_{s^o} (zeta = image of the H/K generator), the normal basis
/// B of the subextension, and the matching of T1-conjugation with Frobenius
/// powers.
struct CrossedCtx {
  const ShodaCtx* ctx = nullptr;
  SspPtr ssp;
  CyclotomicClass cls;
  AlgElem eps;  // eps_C(H,K)
  AlgElem e;    // e_C(G,H,K)
  std::shared_ptr<const ExtensionCtx> ext;
  int n = 1;               // [E:H]
  std::vector<int> T2;     // right transversal of E in G
  std::vector<int> kappa;  // T1 index -> Frobenius power in Gal(F_{s^o}/F_{s^{o/n}})
  std::vector<int> t_of_kappa;
  FieldElem zeta;                // xi_m^(smallest residue of cls)
  std::vector<FieldElem> zpow;   // zeta^0 .. zeta^(m-1)
  std::vector<int> ypow;         // group powers of hk_gen, size o
  FieldElem w;                   // normal element
  std::vector<FieldElem> B;      // Frobenius orbit of w, size n
  FMatrix moore;                 // moore[r][i] = sigma^(r+i)(w)
  FieldCtxPtr prime_ctx;
  FMatrix theta_inv_mat;         // inverse power-basis coordinate map over F_p

  FieldElem sigma_pow(const FieldElem& x, int power) const;
  /// FH eps -> F_{s^o}: linear extension of h*eps -> chi(hK).
  FieldElem theta(const AlgElem& lambda) const;
  /// x -> the element of FH eps mapping to x (power-basis expansion, then
  /// zeta -> hk_gen * eps).
  AlgElem theta_inverse(const FieldElem& x) const;
};

CrossedCtx make_crossed_ctx(const ShodaCtx& ctx, SspPtr ssp, const CyclotomicClass& C);

/// Matrix of c (in FE eps) as an endomorphism of F_{s^o} in the normal
/// basis B over F_{s^{o/n}}; entries returned in the top field and lie in
/// the subfield.
FMatrix psi_matrix(const CrossedCtx& cc, const AlgElem& c);

/// Inverse of psi: solves sum_sigma x_sigma sigma(b) = M b over the normal
/// basis and maps the x_sigma back through theta_inverse.
AlgElem psi_inverse(const CrossedCtx& cc, const FMatrix& M);

/// The matrices of the trivial-twisting construction: P (ones on the first
/// row and column, -1 on the remaining diagonal) and A (cyclic shift with 1
/// in the top-right corner). Returns (P, A, P^-1).
std::tuple<FMatrix, FMatrix, FMatrix> build_P_A(const FieldCtx* field, int n);

/// First (x, y) in canonical element order with x^2 + y^2 = -1 and y != 0.
std::pair<FieldElem, FieldElem> solve_sum_of_squares(const FieldCtx& F);

/// A complete set of orthogonal primitive idempotents of FG e_C.
struct PrimSet {
  SspPtr pair;
  CyclotomicClass cls;
  AlgElem component_e;
  std::vector<AlgElem> idems;
  std::vector<std::string> provenance;  // per idempotent
  std::string method;                   // "trivial-twisting" or "nilpotent"
  std::string note;                     // degenerate-case flags
};

/// {conjugates of x_e^i T1~ eps x_e^-i by the right transversal of E},
/// with x_e = psi^-1(P A P^-1); [G:H] idempotents ordered by (t, i).
PrimSet primitive_idempotents_trivial_twisting(const ShodaCtx& ctx, SspPtr ssp,
                                               const CyclotomicClass& C);

/// Nilpotent-group construction: conjugates of b_{2'}~ beta_2 eps_C by
/// T_{2'} T_2 T_E, with beta_2 and T_2 per the 2-part case analysis.
PrimSet primitive_idempotents_nilpotent(const ShodaCtx& ctx, SspPtr ssp,
                                        const CyclotomicClass& C);

/// Exact verification of the defining predicates: nonzero idempotents,
/// pairwise orthogonal, summing to the component idempotent, cardinality
/// [G:H]. Throws on violation.
void verify_primset(const PrimSet& ps);

}  // namespace idemcodes
