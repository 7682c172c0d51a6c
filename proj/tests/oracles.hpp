#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include "idemcodes/algebra.hpp"

namespace idemcodes {

/// Rank of the right-multiplication-by-e operator on FG, built by applying
/// the algebra product to every basis element and eliminated locally.
inline int right_multiplication_rank(const Group& G, const FieldCtx& F, const AlgElem& e) {
  int n = G.n;
  std::vector<std::vector<FieldElem>> M(n, std::vector<FieldElem>(n, F.zero()));
  for (int g = 0; g < n; ++g) {
    AlgElem prod = alg_basis(G, F, g) * e;
    for (int h = 0; h < n; ++h) M[h][g] = prod.coeffs[h];
  }
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int piv = -1;
    for (int row = rank; row < n; ++row)
      if (!M[row][col].is_zero()) {
        piv = row;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[piv], M[rank]);
    FieldElem inv = M[rank][col].inv();
    for (int j = 0; j < n; ++j) M[rank][j] *= inv;
    for (int row = 0; row < n; ++row) {
      if (row == rank || M[row][col].is_zero()) continue;
      FieldElem f = M[row][col];
      for (int j = 0; j < n; ++j) M[row][j] -= f * M[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace idemcodes
