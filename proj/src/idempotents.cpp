#include "idemcodes/idempotents.hpp"

#include <algorithm>

namespace idemcodes {

FieldElem CrossedCtx::sigma_pow(const FieldElem& x, int power) const {
  int o = static_cast<int>(ssp->o);
  return ext->frobenius(x, static_cast<i64>(o / n) * power);
}

FieldElem CrossedCtx::theta(const AlgElem& lambda) const {
  const Group& G = ctx->group();
  FieldElem acc = ext->top()->zero();
  for (int g = 0; g < G.n; ++g) {
    if (lambda.coeffs[g].is_zero()) continue;
    require(ssp->H.contains(g), errc::not_in_component, "element not supported on H");
    i64 e = ssp->dlog[ssp->qHK.project(g)];
    acc += ext->embed(lambda.coeffs[g]) * zpow[e];
  }
  return acc;
}

AlgElem CrossedCtx::theta_inverse(const FieldElem& x) const {
  const Group& G = ctx->group();
  const FieldCtx& F = *ctx->field();
  int k = F.k();
  int o = static_cast<int>(ssp->o);
  int dim = k * o;
  FMatrix rhs(prime_ctx.get(), dim, 1);
  for (int r = 0; r < dim; ++r) rhs.at(r, 0) = prime_ctx->from_int(x.coeffs()[r]);
  FMatrix u = mat_mul(theta_inv_mat, rhs);
  AlgElem raw = alg_zero(G, F);
  for (int i = 0; i < o; ++i) {
    std::vector<i64> digits(k);
    for (int r = 0; r < k; ++r) digits[r] = u.at(i * k + r, 0).coeffs()[0];
    raw.coeffs[ypow[i]] += FieldElem(&F, std::move(digits));
  }
  return raw * eps;
}

CrossedCtx make_crossed_ctx(const ShodaCtx& ctx, SspPtr ssp, const CyclotomicClass& C) {
  require(ssp->twisting_trivial, errc::nontrivial_twisting,
          "component has non-trivial twisting");
  const Group& G = ctx.group();
  const FieldCtx& F = *ctx.field();
  CrossedCtx cc;
  cc.ctx = &ctx;
  cc.ssp = ssp;
  cc.cls = C;
  cc.eps = eps_C(ctx, *ssp, C);
  cc.e = e_C(ctx, *ssp, C);
  cc.ext = ctx.ext_of_degree(static_cast<int>(ssp->o));
  cc.n = static_cast<int>(ssp->ehi);
  cc.T2 = transversal(G, ssp->E);

  int o = static_cast<int>(ssp->o);
  i64 m = ssp->m;
  FieldElem xi = cc.ext->root_of_unity(m);
  cc.zeta = xi.pow(C.smallest());
  cc.zpow.assign(m, cc.ext->top()->one());
  for (i64 i = 1; i < m; ++i) cc.zpow[i] = cc.zpow[i - 1] * cc.zeta;

  cc.ypow.assign(o, 0);
  for (int i = 1; i < o; ++i) cc.ypow[i] = G.mul(cc.ypow[i - 1], ssp->hk_gen);

  // Matching of T1-conjugation with Galois: g y g^-1 = y^i and i = s^l mod m
  // with l a multiple of o/n; kappa = l/(o/n).
  cc.kappa.assign(ssp->T1.size(), 0);
  cc.t_of_kappa.assign(cc.n, -1);
  for (size_t ti = 0; ti < ssp->T1.size(); ++ti) {
    i64 i = mod_i64(action_exponent(*ssp, ssp->T1[ti]), std::max<i64>(m, 1));
    int l = -1;
    for (int cand = 0; cand < o; ++cand)
      if (powmod_i64(ctx.s(), cand, m) == i % m) {
        l = cand;
        break;
      }
    require(l >= 0 && l % (o / cc.n) == 0, errc::internal,
            "conjugation action does not match a Galois power");
    cc.kappa[ti] = l / (o / cc.n);
    require(cc.t_of_kappa[cc.kappa[ti]] < 0, errc::internal,
            "Galois matching is not a bijection");
    cc.t_of_kappa[cc.kappa[ti]] = static_cast<int>(ti);
  }

  cc.w = cc.ext->normal_element(cc.n);
  cc.B.assign(cc.n, cc.w);
  for (int i = 1; i < cc.n; ++i) cc.B[i] = cc.sigma_pow(cc.B[i - 1], 1);
  cc.moore = FMatrix(cc.ext->top().get(), cc.n, cc.n);
  for (int r = 0; r < cc.n; ++r)
    for (int i = 0; i < cc.n; ++i) cc.moore.at(r, i) = cc.B[(r + i) % cc.n];

  // Power-basis coordinate map for theta^-1, flattened over the prime field.
  cc.prime_ctx = F.k() == 1 ? ctx.field() : FieldCtx::prime(F.p());
  int k = F.k();
  int dim = k * o;
  FMatrix A(cc.prime_ctx.get(), dim, dim);
  for (int i = 0; i < o; ++i)
    for (int r = 0; r < k; ++r) {
      FieldElem basis = cc.ext->embed(F.from_index(ipow(F.p(), r))) * cc.zpow[i % m];
      for (int row = 0; row < dim; ++row)
        A.at(row, i * k + r) = cc.prime_ctx->from_int(basis.coeffs()[row]);
    }
  cc.theta_inv_mat = mat_inverse(A);
  return cc;
}

FMatrix psi_matrix(const CrossedCtx& cc, const AlgElem& c) {
  const Group& G = cc.ctx->group();
  for (int g = 0; g < G.n; ++g)
    require(c.coeffs[g].is_zero() || cc.ssp->E.contains(g), errc::not_in_component,
            "element not supported on E");
  require(c * cc.eps == c, errc::not_in_component, "element not in the component");

  int n = cc.n;
  const FieldCtx* top = cc.ext->top().get();
  // T1-grading: c = sum_t (c_t eps) t with c_t collecting the H t coset.
  std::vector<FieldElem> x(cc.ssp->T1.size(), top->zero());
  for (size_t ti = 0; ti < cc.ssp->T1.size(); ++ti) {
    int t = cc.ssp->T1[ti];
    AlgElem part = alg_zero(G, *cc.ctx->field());
    for (int h : cc.ssp->H.elems) part.coeffs[h] = c.coeffs[G.mul(h, t)];
    x[ti] = cc.theta(part * cc.eps);
  }
  FMatrix rhs(top, n, n);
  for (int j = 0; j < n; ++j) {
    FieldElem vj = top->zero();
    for (size_t ti = 0; ti < x.size(); ++ti)
      vj += x[ti] * cc.sigma_pow(cc.B[j], cc.kappa[ti]);
    for (int r = 0; r < n; ++r) rhs.at(r, j) = cc.sigma_pow(vj, r);
  }
  FMatrix Z = mat_solve(cc.moore, rhs);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      require(cc.sigma_pow(Z.at(i, j), 1) == Z.at(i, j), errc::internal,
              "psi entry not fixed by the subfield Frobenius");
  return Z;
}

AlgElem psi_inverse(const CrossedCtx& cc, const FMatrix& M) {
  const Group& G = cc.ctx->group();
  int n = cc.n;
  const FieldCtx* top = cc.ext->top().get();
  require(M.rows == n && M.cols == n, errc::bad_parameters, "matrix size mismatch");
  FMatrix rhs(top, n, 1);
  for (int j = 0; j < n; ++j) {
    FieldElem vj = top->zero();
    for (int i = 0; i < n; ++i) vj += M.at(i, j) * cc.B[i];
    rhs.at(j, 0) = vj;
  }
  // moore[j][kap] = sigma^kap(b_j); same circulant as the coordinate system.
  FMatrix X = mat_solve(cc.moore, rhs);
  AlgElem c = alg_zero(G, *cc.ctx->field());
  for (int kap = 0; kap < n; ++kap) {
    AlgElem lambda = cc.theta_inverse(X.at(kap, 0));
    int t = cc.ssp->T1[cc.t_of_kappa[kap]];
    c = c + lambda * alg_basis(G, *cc.ctx->field(), t);
  }
  return c;
}

std::tuple<FMatrix, FMatrix, FMatrix> build_P_A(const FieldCtx* field, int n) {
  FMatrix P(field, n, n), A(field, n, n);
  FieldElem one = field->one();
  for (int j = 0; j < n; ++j) P.at(0, j) = one;
  for (int i = 1; i < n; ++i) {
    P.at(i, 0) = one;
    P.at(i, i) = -one;
  }
  A.at(0, n - 1) = one;
  for (int i = 1; i < n; ++i) A.at(i, i - 1) = one;
  return {P, A, mat_inverse(P)};
}

std::pair<FieldElem, FieldElem> solve_sum_of_squares(const FieldCtx& F) {
  require(F.p() != 2, errc::no_solution, "requires odd characteristic");
  FieldElem minus_one = -F.one();
  for (i64 xi = 0; xi < F.card(); ++xi) {
    FieldElem x = F.from_index(xi);
    FieldElem x2 = x * x;
    for (i64 yi = 0; yi < F.card(); ++yi) {
      FieldElem y = F.from_index(yi);
      if (y.is_zero()) continue;
      if (x2 + y * y == minus_one) return {x, y};
    }
  }
  fail(errc::no_solution, "no solution of x^2 + y^2 = -1 found");
}

void verify_primset(const PrimSet& ps) {
  const i64 expected = ps.pair->index_in_G();
  require(static_cast<i64>(ps.idems.size()) == expected, errc::internal,
          "primitive set has wrong cardinality");
  AlgElem sum = alg_zero(*ps.component_e.group, *ps.component_e.field);
  for (size_t i = 0; i < ps.idems.size(); ++i) {
    require(!ps.idems[i].is_zero(), errc::internal, "zero member in primitive set");
    require(is_idempotent(ps.idems[i]), errc::internal, "member is not idempotent");
    for (size_t j = i + 1; j < ps.idems.size(); ++j)
      require(are_orthogonal(ps.idems[i], ps.idems[j]), errc::internal,
              "members are not orthogonal");
    sum = sum + ps.idems[i];
  }
  require(sum == ps.component_e, errc::internal,
          "primitive set does not sum to the central idempotent");
}

PrimSet primitive_idempotents_trivial_twisting(const ShodaCtx& ctx, SspPtr ssp,
                                               const CyclotomicClass& C) {
  const Group& G = ctx.group();
  const FieldCtx& F = *ctx.field();
  CrossedCtx cc = make_crossed_ctx(ctx, ssp, C);
  int n = cc.n;

  AlgElem seed = average_of(G, F, ssp->T1) * cc.eps;
  std::vector<AlgElem> inner;
  inner.reserve(n);
  inner.push_back(seed);
  if (n > 1) {
    auto [P, A, Pinv] = build_P_A(cc.ext->top().get(), n);
    AlgElem x_e = psi_inverse(cc, mat_mul(mat_mul(P, A), Pinv));
    AlgElem x_e_inv = psi_inverse(cc, mat_mul(mat_mul(P, mat_pow(A, n - 1)), Pinv));
    for (int i = 1; i < n; ++i) inner.push_back(x_e * inner.back() * x_e_inv);
  }

  PrimSet ps;
  ps.pair = ssp;
  ps.cls = C;
  ps.component_e = cc.e;
  ps.method = "trivial-twisting";
  for (int t : cc.T2)
    for (int i = 0; i < n; ++i) {
      ps.idems.push_back(conjugate(inner[i], t));
      ps.provenance.push_back("t=" + G.labels[t] + " i=" + std::to_string(i));
    }
  verify_primset(ps);
  return ps;
}

namespace {

int qpow(const Group& Q, int x, i64 e) {
  int r = 0;
  for (i64 i = 0; i < e; ++i) r = Q.mul(r, x);
  return r;
}

int gpow(const Group& G, int x, i64 e) {
  int r = 0;
  for (i64 i = 0; i < e; ++i) r = G.mul(r, x);
  return r;
}

bool central_in(const Group& Q, int x, const Subgroup& S) {
  for (int g : S.elems)
    if (Q.mul(x, g) != Q.mul(g, x)) return false;
  return true;
}

}  // namespace

PrimSet primitive_idempotents_nilpotent(const ShodaCtx& ctx, SspPtr ssp,
                                        const CyclotomicClass& C) {
  const Group& G = ctx.group();
  const FieldCtx& F = *ctx.field();
  require(is_nilpotent(G), errc::not_nilpotent, "group is not nilpotent");

  AlgElem eps = eps_C(ctx, *ssp, C);
  AlgElem e = e_C(ctx, *ssp, C);

  QuotientMap qEK = quotient(ssp->E, ssp->K);
  const Group& Q = *qEK.quotient;
  int aq = qEK.project(ssp->hk_gen);

  i64 m = ssp->m;
  int alpha = 0;
  i64 u = m;
  while (u % 2 == 0) {
    u /= 2;
    ++alpha;
  }
  i64 two_alpha = i64{1} << alpha;
  int a2q = alpha == 0 ? 0 : qpow(Q, aq, u * inv_mod(u, two_alpha));
  int a2pq = u == 1 ? 0 : qpow(Q, aq, two_alpha * inv_mod(two_alpha, u));

  auto [E2, E2p] = primary_decomposition(Q, 2);
  Subgroup H2q = generated_subgroup(Q, {a2q});
  Subgroup H2pq = generated_subgroup(Q, {a2pq});

  // Cyclic complement of <a_2'> in the 2'-part.
  int b2pq = -1;
  for (int x : E2p.elems) {
    Subgroup Bx = generated_subgroup(Q, {x});
    if (static_cast<i64>(Bx.order()) * H2pq.order() != E2p.order()) continue;
    bool trivial_meet = true;
    for (int y : Bx.elems)
      if (y != 0 && H2pq.contains(y)) {
        trivial_meet = false;
        break;
      }
    if (trivial_meet) {
      b2pq = x;
      break;
    }
  }
  require(b2pq >= 0, errc::internal, "no cyclic complement in the 2'-part");
  AlgElem beta_2p = tilde(preimage_subgroup(qEK, generated_subgroup(Q, {b2pq})), F);

  // 2-part case analysis.
  AlgElem beta_2 = alg_one(G, F);
  std::vector<int> T2{0};
  std::string note;
  const Subgroup* M2q = nullptr;
  auto subsQ = subgroups(Q);
  for (const Subgroup& S : subsQ) {
    if (!E2.contains_all(S)) continue;
    if (static_cast<i64>(S.order()) * H2q.order() != E2.order()) continue;
    bool trivial_meet = true;
    for (int y : S.elems)
      if (y != 0 && H2q.contains(y)) {
        trivial_meet = false;
        break;
      }
    if (trivial_meet) {
      M2q = &S;
      break;
    }
  }

  if (M2q != nullptr) {
    beta_2 = tilde(preimage_subgroup(qEK, *M2q), F);
    i64 d = E2.order() / H2q.order();
    int a2_lift = qEK.lift(a2q);
    if (d == 1) {
      T2 = {0};
      if (alpha <= 1) note = "2-part case (1) with n<=1 routed to the degenerate transversal";
    } else {
      bool m2_cyclic = cyclic_witness(*M2q).has_value();
      bool central =
          alpha >= 2 && central_in(Q, qpow(Q, a2q, i64{1} << (alpha - 2)), E2);
      if (m2_cyclic && central) {
        T2.clear();
        for (i64 j = 0; j < d; ++j) T2.push_back(gpow(G, a2_lift, j));
      } else {
        require(alpha >= 2 && d % 2 == 0, errc::presentation_match_failure,
                "2-part transversal case (1b) needs a_2 of order >= 4");
        T2.clear();
        for (i64 j = 0; j < d / 2; ++j) T2.push_back(gpow(G, a2_lift, j));
        i64 shift = i64{1} << (alpha - 2);
        for (i64 j = 0; j < d / 2; ++j) T2.push_back(gpow(G, a2_lift, shift + j));
      }
    }
  } else {
    // Case (2): H_2/K has no complement in E_2/K.
    require(alpha >= 2, errc::presentation_match_failure,
            "2-part case (2) needs a_2 of order >= 4");
    std::vector<int> a2_dlog(Q.n, -1);
    {
      int x = 0;
      for (i64 i = 0; i < two_alpha; ++i) {
        a2_dlog[x] = static_cast<int>(i);
        x = Q.mul(x, a2q);
      }
    }
    int b2q = -1, c2q = -1;
    for (int b : E2.elems) {
      for (int c : E2.elems) {
        int rb = a2_dlog[Q.conj(a2q, b)];
        if (rb < 0 || rb % 4 != 1) continue;
        if (Q.mul(c, c) != qpow(Q, a2q, two_alpha / 2)) continue;
        if (Q.conj(a2q, c) != qpow(Q, a2q, two_alpha - 1)) continue;
        if (Q.mul(b, c) != Q.mul(c, b)) continue;
        i64 order_b = Q.element_order(b);
        if (E2.order() != two_alpha * order_b * 2) continue;
        if (generated_subgroup(Q, {a2q, b, c}).order() != E2.order()) continue;
        b2q = b;
        c2q = c;
        break;
      }
      if (b2q >= 0) break;
    }
    require(b2q >= 0, errc::presentation_match_failure,
            "no generators matching the case (2) presentation");
    auto [x_f, y_f] = solve_sum_of_squares(F);
    int a2_lift = qEK.lift(a2q);
    int c2_lift = qEK.lift(c2q);
    int u_elem = gpow(G, a2_lift, i64{1} << (alpha - 2));
    AlgElem half = (alg_one(G, F) + alg_basis(G, F, u_elem).scaled(x_f) +
                    alg_basis(G, F, G.mul(u_elem, c2_lift)).scaled(y_f))
                       .scaled(F.from_int(2).inv());
    beta_2 = tilde(preimage_subgroup(qEK, generated_subgroup(Q, {b2q})), F) * half;
    i64 ob = Q.element_order(b2q);
    T2.clear();
    for (i64 j = 0; j < ob; ++j) T2.push_back(gpow(G, a2_lift, j));
    for (i64 j = 0; j < ob; ++j) T2.push_back(G.mul(c2_lift, gpow(G, a2_lift, j)));
    note = "2-part case (2)";
  }

  i64 d2p = E2p.order() / H2pq.order();
  int a2p_lift = qEK.lift(a2pq);
  std::vector<int> T2p;
  for (i64 j = 0; j < d2p; ++j) T2p.push_back(gpow(G, a2p_lift, j));
  std::vector<int> TE = transversal(G, ssp->E);

  AlgElem beta = beta_2p * beta_2 * eps;
  PrimSet ps;
  ps.pair = ssp;
  ps.cls = C;
  ps.component_e = e;
  ps.method = "nilpotent";
  ps.note = note;
  for (int t2p : T2p)
    for (int t2 : T2)
      for (int tE : TE) {
        int x = G.mul(G.mul(t2p, t2), tE);
        ps.idems.push_back(conjugate(beta, x));
        ps.provenance.push_back("x=" + G.labels[x]);
      }
  verify_primset(ps);
  return ps;
}

}  // namespace idemcodes
