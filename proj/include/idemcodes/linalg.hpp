#pragma once

#include <vector>

#include "idemcodes/field.hpp"

namespace idemcodes {

/// Small dense matrix over one FieldCtx. Row-major.
struct FMatrix {
  const FieldCtx* ctx = nullptr;
  int rows = 0, cols = 0;
  std::vector<FieldElem> a;

  FMatrix() = default;
  FMatrix(const FieldCtx* c, int r, int n) : ctx(c), rows(r), cols(n), a(r * n, c->zero()) {}

  FieldElem& at(int i, int j) { return a[i * cols + j]; }
  const FieldElem& at(int i, int j) const { return a[i * cols + j]; }

  static FMatrix identity(const FieldCtx* c, int n) {
    FMatrix m(c, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = c->one();
    return m;
  }

  bool operator==(const FMatrix& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline FMatrix mat_mul(const FMatrix& x, const FMatrix& y) {
  require(x.cols == y.rows, errc::bad_parameters, "matrix shape mismatch");
  FMatrix r(x.ctx, x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int l = 0; l < x.cols; ++l) {
      if (x.at(i, l).is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, l) * y.at(l, j);
    }
  return r;
}

inline FMatrix mat_pow(const FMatrix& x, int e) {
  FMatrix r = FMatrix::identity(x.ctx, x.rows);
  for (int i = 0; i < e; ++i) r = mat_mul(r, x);
  return r;
}

/// In-place row reduction to reduced echelon form. Returns pivot columns.
/// Deterministic: first nonzero entry in column order is the pivot.
inline std::vector<int> rref_inplace(FMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    FieldElem inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      FieldElem f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int mat_rank(FMatrix m) { return static_cast<int>(rref_inplace(m).size()); }

/// Solves A X = B for square invertible A; throws singular_system otherwise.
inline FMatrix mat_solve(const FMatrix& A, const FMatrix& B) {
  require(A.rows == A.cols && A.rows == B.rows, errc::bad_parameters, "solve shape mismatch");
  int n = A.rows;
  FMatrix aug(A.ctx, n, n + B.cols);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) aug.at(i, n + j) = B.at(i, j);
  }
  auto piv = rref_inplace(aug);
  require(static_cast<int>(piv.size()) == n && piv[n - 1] == n - 1, errc::singular_system,
          "singular linear system");
  FMatrix x(A.ctx, n, B.cols);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < B.cols; ++j) x.at(i, j) = aug.at(i, n + j);
  return x;
}

inline FMatrix mat_inverse(const FMatrix& A) {
  return mat_solve(A, FMatrix::identity(A.ctx, A.rows));
}

inline bool mat_invertible(const FMatrix& A) {
  return A.rows == A.cols && mat_rank(A) == A.rows;
}

}  // namespace idemcodes
