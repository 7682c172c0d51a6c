#pragma once

#include <string>
#include <vector>

#include "idemcodes/field.hpp"
#include "idemcodes/group.hpp"
#include "idemcodes/rational.hpp"

namespace idemcodes {

/// Element of FG: length-|G| coefficient vector indexed by the canonical
/// element ordering.
struct AlgElem {
  const Group* group = nullptr;
  const FieldCtx* field = nullptr;
  std::vector<FieldElem> coeffs;

  bool is_zero() const;
  bool operator==(const AlgElem& o) const { return coeffs == o.coeffs; }
  bool operator!=(const AlgElem& o) const { return !(*this == o); }

  AlgElem operator+(const AlgElem& o) const;
  AlgElem operator-(const AlgElem& o) const;
  AlgElem operator*(const AlgElem& o) const;  // convolution via the Cayley table
  AlgElem scaled(const FieldElem& s) const;

  /// Canonical per-coefficient index vector (used as a dedup key).
  std::vector<i64> key() const;
};

AlgElem alg_zero(const Group& G, const FieldCtx& F);
AlgElem alg_one(const Group& G, const FieldCtx& F);
AlgElem alg_basis(const Group& G, const FieldCtx& F, int g);

/// H~ = |H|^-1 sum of H. Requires gcd(|H|, char) = 1.
AlgElem tilde(const Subgroup& H, const FieldCtx& F);
/// Average over an arbitrary element list (transversals etc.).
AlgElem average_of(const Group& G, const FieldCtx& F, const std::vector<int>& elems);

/// c^g = g^-1 c g (coefficient permutation).
AlgElem conjugate(const AlgElem& c, int g);

bool is_idempotent(const AlgElem& c);
bool are_orthogonal(const AlgElem& c, const AlgElem& d);
/// Exact centrality test over the group's generators.
bool is_central(const AlgElem& c);

/// Dump format: coeff*label terms joined by '+', canonical ordering.
std::string to_string(const AlgElem& c);

/// Element of QG with exact rational coefficients.
struct RatAlgElem {
  const Group* group = nullptr;
  std::vector<Rational> coeffs;

  bool is_zero() const;
  bool operator==(const RatAlgElem& o) const { return coeffs == o.coeffs; }

  RatAlgElem operator+(const RatAlgElem& o) const;
  RatAlgElem operator-(const RatAlgElem& o) const;
  RatAlgElem operator*(const RatAlgElem& o) const;
  RatAlgElem scaled(const Rational& s) const;
};

RatAlgElem rat_zero(const Group& G);
RatAlgElem rat_one(const Group& G);
RatAlgElem tilde_rational(const Subgroup& H);
RatAlgElem conjugate(const RatAlgElem& c, int g);
bool is_idempotent(const RatAlgElem& c);
std::string to_string(const RatAlgElem& c);

}  // namespace idemcodes
