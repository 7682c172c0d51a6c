#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "idemcodes/numutil.hpp"

namespace idemcodes {

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Element of F_{p^k}, stored as a length-k coefficient vector over F_p
/// (little-endian in the residue class of the modulus variable).
class FieldElem {
 public:
  FieldElem() : ctx_(nullptr) {}
  FieldElem(const FieldCtx* ctx, std::vector<i64> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {}

  const FieldCtx* ctx() const { return ctx_; }
  const std::vector<i64>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(i64 e) const;

  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  /// Canonical order: by coefficient-vector index (digits little-endian).
  bool operator<(const FieldElem& o) const { return c_ < o.c_; }

  /// Digits of the coefficient vector, constant term first, e.g. "1" or "01".
  std::string str() const;

 private:
  const FieldCtx* ctx_;
  std::vector<i64> c_;
};

/// Arithmetic context for F_{p^k}: prime p, extension degree k and the monic
/// irreducible modulus (coefficient list, constant term first, length k+1).
/// Immutable after construction; shareable across threads.
class FieldCtx : public std::enable_shared_from_this<FieldCtx> {
 public:
  /// Prime field F_p.
  static FieldCtxPtr prime(i64 p);
  /// F_{p^k} with the lexicographically smallest monic irreducible modulus
  /// (coefficient vectors compared as base-p counters, constant term first).
  static FieldCtxPtr extension(i64 p, int k);
  /// Explicit modulus; verified irreducible.
  static FieldCtxPtr with_modulus(i64 p, std::vector<i64> modulus);

  i64 p() const { return p_; }
  int k() const { return k_; }
  i64 card() const { return s_; }
  const std::vector<i64>& modulus() const { return mod_; }

  FieldElem zero() const { return FieldElem(this, std::vector<i64>(k_, 0)); }
  FieldElem one() const { return from_int(1); }
  FieldElem from_int(i64 v) const;
  /// Variable-class generator x of F_p[x]/(modulus); equals 1 when k = 1... (k=1: x reduces to -modulus[0]).
  FieldElem gen() const;
  /// Element with canonical index v in [0, p^k): digits of v base p.
  FieldElem from_index(i64 v) const;
  i64 index_of(const FieldElem& a) const;

  bool same_field(const FieldCtx& o) const { return p_ == o.p_ && k_ == o.k_ && mod_ == o.mod_; }

  /// Lexicographically first multiplicative generator (cached, computed on
  /// construction by scanning elements in canonical index order).
  const FieldElem& generator() const { return gen_mult_; }

  std::string describe() const;  // e.g. "gf(2^6)"

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  FieldCtx(i64 p, int k, std::vector<i64> modulus);
  void find_generator();

  i64 p_;
  int k_;
  std::vector<i64> mod_;
  i64 s_;
  FieldElem gen_mult_;

  friend class FieldElem;
};

/// Tower context: F_{s^o} realized as a single degree-(k*o) extension of the
/// prime field, with F_s embedded by mapping its generator to a fixed root of
/// the base modulus in the top field.
class ExtensionCtx {
 public:
  ExtensionCtx(FieldCtxPtr base, int degree);

  const FieldCtxPtr& base() const { return base_; }
  const FieldCtxPtr& top() const { return top_; }
  int degree() const { return o_; }
  i64 base_card() const { return base_->card(); }
  i64 top_card() const { return top_->card(); }

  /// Ring embedding F_s -> F_{s^o}.
  FieldElem embed(const FieldElem& a) const;
  /// Inverse of embed; the argument must lie in the embedded base field.
  FieldElem to_base(const FieldElem& x) const;
  bool in_base(const FieldElem& x) const;

  /// x^(s^i) with i taken mod o; i = 0 is the identity.
  FieldElem frobenius(const FieldElem& x, i64 i) const;
  /// sum_{i<o/d} x^((s^d)^i); result lies in F_{s^d} (fixed by frobenius(.,d)).
  /// Returned in the top representation; use to_base for d = 1.
  FieldElem trace_to_subfield(const FieldElem& x, int d) const;

  /// Deterministic primitive m-th root of unity: generator^((s^o-1)/m).
  FieldElem root_of_unity(i64 m) const;

  /// First w in canonical order whose Frobenius orbit under x -> x^(s^(o/n))
  /// is linearly independent over F_{s^(o/n)} (normal basis for the
  /// subextension of degree n). n = 1 returns the multiplicative identity.
  FieldElem normal_element(int n) const;
  bool is_normal_element(const FieldElem& w, int n) const;

 private:
  FieldCtxPtr base_;
  FieldCtxPtr top_;
  int o_;
  FieldElem rho_;                         // root of the base modulus in the top field
  std::vector<FieldElem> rho_pow_;        // rho^0 .. rho^(k-1)
  std::map<std::vector<i64>, FieldElem> base_of_;  // embedded image -> base element
};

}  // namespace idemcodes
