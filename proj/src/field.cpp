#include "idemcodes/field.hpp"

#include <algorithm>
#include <cmath>

#include "idemcodes/linalg.hpp"

namespace idemcodes {

const char* errc_name(errc c) {
  switch (c) {
    case errc::division_by_zero: return "DivisionByZero";
    case errc::context_mismatch: return "ContextMismatch";
    case errc::not_coprime: return "NotCoprime";
    case errc::not_a_subfield_degree: return "NotASubfieldDegree";
    case errc::order_not_available: return "OrderNotAvailable";
    case errc::bad_parameters: return "BadParameters";
    case errc::group_too_large: return "GroupTooLarge";
    case errc::not_normal: return "NotNormal";
    case errc::not_nilpotent: return "NotNilpotent";
    case errc::not_cyclic: return "NotCyclic";
    case errc::characteristic_divides_order: return "CharacteristicDividesOrder";
    case errc::quotient_not_cyclic: return "QuotientNotCyclic";
    case errc::not_faithful_class: return "NotFaithfulClass";
    case errc::not_strong_shoda_pair: return "NotStrongShodaPair";
    case errc::nontrivial_twisting: return "NontrivialTwisting";
    case errc::not_in_component: return "NotInComponent";
    case errc::singular_system: return "SingularSystem";
    case errc::no_solution: return "NoSolution";
    case errc::presentation_match_failure: return "PresentationMatchFailure";
    case errc::coefficients_not_in_base_field: return "CoefficientsNotInBaseField";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

namespace {

// Polynomials over F_p: little-endian coefficient vectors, entries in [0, p).

using Poly = std::vector<i64>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

// Reduce f modulo the monic polynomial m in place.
void reduce_by(Poly& f, const Poly& m, i64 p) {
  int dm = degree(m);
  for (int i = degree(f); i >= dm; --i) {
    i64 c = f[i];
    if (c == 0) continue;
    f[i] = 0;
    for (int j = 0; j < dm; ++j) f[i - dm + j] = mod_i64(f[i - dm + j] - c * m[j], p);
  }
  trim(f);
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, i64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = mod_i64(r[i + j] + a[i] * b[j], p);
  }
  reduce_by(r, m, p);
  return r;
}

Poly poly_powmod(Poly base, i64 e, const Poly& m, i64 p) {
  Poly r{1};
  reduce_by(base, m, p);
  while (e > 0) {
    if (e & 1) r = poly_mul_mod(r, base, m, p);
    base = poly_mul_mod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_mod(Poly a, const Poly& b, i64 p) {
  // b need not be monic; normalize the leading coefficient.
  Poly bb = b;
  trim(bb);
  i64 lead_inv = inv_mod(bb.back(), p);
  for (int i = degree(a); i >= degree(bb); --i) {
    i64 c = mulmod_i64(a[i], lead_inv, p);
    if (c == 0) continue;
    for (size_t j = 0; j < bb.size(); ++j)
      a[i - degree(bb) + j] = mod_i64(a[i - degree(bb) + j] - c * bb[j], p);
  }
  trim(a);
  return a;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Distinct-degree criterion: f monic of degree k is irreducible over F_p iff
// x^(p^k) = x mod f and gcd(x^(p^(k/l)) - x, f) = 1 for each prime l | k.
bool is_irreducible(const Poly& f, i64 p) {
  int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  Poly x{0, 1};
  double bits = k * std::log2(static_cast<double>(p));
  require(bits <= 62.0, errc::order_not_available, "field too large for exact arithmetic");
  Poly xq = poly_powmod(x, ipow(p, k), f, p);
  if (xq != x) return false;
  for (i64 l : prime_divisors(k)) {
    Poly g = poly_powmod(x, ipow(p, static_cast<int>(k / l)), f, p);
    // g - x
    Poly d = g;
    d.resize(std::max(d.size(), size_t{2}), 0);
    d[1] = mod_i64(d[1] - 1, p);
    trim(d);
    Poly gg = poly_gcd(f, d, p);
    if (degree(gg) != 0) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElem

bool FieldElem::is_zero() const {
  for (i64 v : c_)
    if (v != 0) return false;
  return true;
}

bool FieldElem::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

bool FieldElem::operator==(const FieldElem& o) const { return c_ == o.c_; }

FieldElem FieldElem::operator+(const FieldElem& o) const {
  require(ctx_ && o.ctx_ && ctx_->same_field(*o.ctx_), errc::context_mismatch, "field mismatch");
  std::vector<i64> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_i64(c_[i] + o.c_[i], ctx_->p());
  return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  require(ctx_ && o.ctx_ && ctx_->same_field(*o.ctx_), errc::context_mismatch, "field mismatch");
  std::vector<i64> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_i64(c_[i] - o.c_[i], ctx_->p());
  return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator-() const {
  std::vector<i64> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) r[i] = mod_i64(-c_[i], ctx_->p());
  return FieldElem(ctx_, std::move(r));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  require(ctx_ && o.ctx_ && ctx_->same_field(*o.ctx_), errc::context_mismatch, "field mismatch");
  Poly prod = poly_mul_mod(c_, o.c_, ctx_->mod_, ctx_->p());
  prod.resize(ctx_->k(), 0);
  return FieldElem(ctx_, std::move(prod));
}

FieldElem FieldElem::inv() const {
  require(!is_zero(), errc::division_by_zero, "inverse of zero");
  // Extended Euclid over F_p[x] on (modulus, this).
  i64 p = ctx_->p();
  Poly r0 = ctx_->mod_, r1 = c_;
  trim(r1);
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    // Divide r0 by r1.
    Poly q(std::max<int>(degree(r0) - degree(r1) + 1, 0), 0);
    Poly rem = r0;
    i64 lead_inv = inv_mod(r1.back(), p);
    for (int i = degree(rem); i >= degree(r1); --i) {
      i64 c = mulmod_i64(rem[i], lead_inv, p);
      if (c == 0) continue;
      q[i - degree(r1)] = c;
      for (size_t j = 0; j < r1.size(); ++j)
        rem[i - degree(r1) + j] = mod_i64(rem[i - degree(r1) + j] - c * r1[j], p);
    }
    trim(rem);
    // t0, t1 = t1, t0 - q*t1
    Poly qt1(q.size() + t1.size(), 0);
    if (!q.empty() && !t1.empty()) {
      for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < t1.size(); ++j) qt1[i + j] = mod_i64(qt1[i + j] + q[i] * t1[j], p);
    }
    Poly nt = t0;
    nt.resize(std::max(nt.size(), qt1.size()), 0);
    for (size_t i = 0; i < qt1.size(); ++i) nt[i] = mod_i64(nt[i] - qt1[i], p);
    trim(nt);
    t0 = std::move(t1);
    t1 = std::move(nt);
    r0 = std::move(r1);
    r1 = std::move(rem);
  }
  // r0 = gcd (a unit); normalize.
  require(degree(r0) == 0, errc::internal, "modulus not irreducible");
  i64 scale = inv_mod(r0[0], p);
  t0.resize(ctx_->k(), 0);
  for (i64& v : t0) v = mulmod_i64(v, scale, p);
  return FieldElem(ctx_, std::move(t0));
}

FieldElem FieldElem::operator/(const FieldElem& o) const { return *this * o.inv(); }

FieldElem FieldElem::pow(i64 e) const {
  if (e < 0) return inv().pow(-e);
  FieldElem r = ctx_->one();
  FieldElem b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::string FieldElem::str() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c_[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// FieldCtx

FieldCtx::FieldCtx(i64 p, int k, std::vector<i64> modulus)
    : p_(p), k_(k), mod_(std::move(modulus)) {
  require(is_prime(p), errc::bad_parameters, "characteristic must be prime");
  require(k >= 1, errc::bad_parameters, "degree must be positive");
  double bits = k * std::log2(static_cast<double>(p));
  require(bits <= 62.0, errc::order_not_available, "field too large for exact arithmetic");
  s_ = ipow(p, k);
  find_generator();
}

FieldCtxPtr FieldCtx::prime(i64 p) {
  return std::shared_ptr<FieldCtx>(new FieldCtx(p, 1, {0, 1}));
}

FieldCtxPtr FieldCtx::extension(i64 p, int k) {
  require(is_prime(p), errc::bad_parameters, "characteristic must be prime");
  if (k == 1) return prime(p);
  double bits = k * std::log2(static_cast<double>(p));
  require(bits <= 62.0, errc::order_not_available, "field too large for exact arithmetic");
  // Lexicographically smallest monic irreducible: low coefficients counted
  // base p, constant term first.
  i64 count = ipow(p, k);
  for (i64 v = 0; v < count; ++v) {
    std::vector<i64> f(k + 1, 0);
    i64 x = v;
    for (int i = 0; i < k; ++i) {
      f[i] = x % p;
      x /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return std::shared_ptr<FieldCtx>(new FieldCtx(p, k, std::move(f)));
  }
  fail(errc::internal, "no irreducible modulus found");
}

FieldCtxPtr FieldCtx::with_modulus(i64 p, std::vector<i64> modulus) {
  int k = static_cast<int>(modulus.size()) - 1;
  require(k >= 1 && modulus[k] == 1, errc::bad_parameters, "modulus must be monic");
  for (i64& c : modulus) c = mod_i64(c, p);
  require(is_irreducible(modulus, p), errc::bad_parameters, "modulus not irreducible");
  return std::shared_ptr<FieldCtx>(new FieldCtx(p, k, std::move(modulus)));
}

FieldElem FieldCtx::from_int(i64 v) const {
  std::vector<i64> c(k_, 0);
  c[0] = mod_i64(v, p_);
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::gen() const {
  if (k_ == 1) return from_int(mod_i64(-mod_[0], p_));
  std::vector<i64> c(k_, 0);
  c[1] = 1;
  return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_index(i64 v) const {
  require(v >= 0 && v < s_, errc::bad_parameters, "element index out of range");
  std::vector<i64> c(k_, 0);
  for (int i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return FieldElem(this, std::move(c));
}

i64 FieldCtx::index_of(const FieldElem& a) const {
  i64 v = 0;
  for (int i = k_ - 1; i >= 0; --i) v = v * p_ + a.coeffs()[i];
  return v;
}

void FieldCtx::find_generator() {
  if (s_ == 2) {
    gen_mult_ = one();
    return;
  }
  auto divisors = prime_divisors(s_ - 1);
  for (i64 v = 1; v < s_; ++v) {
    FieldElem x = from_index(v);
    if (x.is_zero()) continue;
    bool ok = true;
    for (i64 l : divisors) {
      if (x.pow((s_ - 1) / l).is_one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen_mult_ = x;
      return;
    }
  }
  fail(errc::internal, "no multiplicative generator found");
}

std::string FieldCtx::describe() const {
  if (k_ == 1) return "gf(" + std::to_string(p_) + ")";
  return "gf(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
}

// ---------------------------------------------------------------------------
// ExtensionCtx

ExtensionCtx::ExtensionCtx(FieldCtxPtr base, int degree) : base_(std::move(base)), o_(degree) {
  require(o_ >= 1, errc::bad_parameters, "extension degree must be positive");
  int k = base_->k();
  if (o_ == 1) {
    top_ = base_;
  } else {
    top_ = FieldCtx::extension(base_->p(), k * o_);
  }
  require(base_->card() <= 65536, errc::order_not_available, "base field too large to embed");

  if (top_ == base_) {
    rho_ = base_->gen();
  } else if (k == 1) {
    rho_ = top_->zero();  // base modulus is x; embedding is the prime subfield
  } else {
    // The roots of the base modulus lie in the subfield copy, whose
    // multiplicative group is generated by delta below.
    i64 q = top_->card();
    i64 s = base_->card();
    FieldElem delta = top_->generator().pow((q - 1) / (s - 1));
    FieldElem x = top_->one();
    bool found = false;
    for (i64 j = 0; j < s - 1; ++j) {
      // Horner evaluation of the base modulus at x.
      FieldElem v = top_->from_int(base_->modulus().back());
      for (int i = k - 1; i >= 0; --i) v = v * x + top_->from_int(base_->modulus()[i]);
      if (v.is_zero()) {
        rho_ = x;
        found = true;
        break;
      }
      x *= delta;
    }
    require(found, errc::internal, "no root of base modulus in top field");
  }

  rho_pow_.resize(k, top_->one());
  for (int i = 1; i < k; ++i) rho_pow_[i] = rho_pow_[i - 1] * rho_;

  for (i64 v = 0; v < base_->card(); ++v) {
    FieldElem b = base_->from_index(v);
    base_of_[embed(b).coeffs()] = b;
  }
}

FieldElem ExtensionCtx::embed(const FieldElem& a) const {
  require(a.ctx() && a.ctx()->same_field(*base_), errc::context_mismatch,
          "embed expects a base-field element");
  if (top_ == base_) return FieldElem(top_.get(), a.coeffs());
  FieldElem r = top_->zero();
  for (int i = 0; i < base_->k(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    r += top_->from_int(a.coeffs()[i]) * rho_pow_[i];
  }
  return r;
}

bool ExtensionCtx::in_base(const FieldElem& x) const {
  return base_of_.find(x.coeffs()) != base_of_.end();
}

FieldElem ExtensionCtx::to_base(const FieldElem& x) const {
  auto it = base_of_.find(x.coeffs());
  require(it != base_of_.end(), errc::internal, "element not in embedded base field");
  return it->second;
}

FieldElem ExtensionCtx::frobenius(const FieldElem& x, i64 i) const {
  i = mod_i64(i, o_);
  i64 e = 1;
  for (i64 j = 0; j < i; ++j) e *= base_->card();
  return x.pow(e);
}

FieldElem ExtensionCtx::trace_to_subfield(const FieldElem& x, int d) const {
  require(d >= 1 && o_ % d == 0, errc::not_a_subfield_degree,
          "subfield degree must divide extension degree");
  FieldElem acc = top_->zero();
  FieldElem t = x;
  for (int i = 0; i < o_ / d; ++i) {
    acc += t;
    t = frobenius(t, d);
  }
  return acc;
}

FieldElem ExtensionCtx::root_of_unity(i64 m) const {
  require(m >= 1, errc::bad_parameters, "root order must be positive");
  i64 q = top_->card();
  require((q - 1) % m == 0, errc::order_not_available,
          "no primitive root of order " + std::to_string(m) + " in " + top_->describe());
  return top_->generator().pow((q - 1) / m);
}

bool ExtensionCtx::is_normal_element(const FieldElem& w, int n) const {
  int step = o_ / n;
  std::vector<FieldElem> orbit(n);
  orbit[0] = w;
  for (int i = 1; i < n; ++i) orbit[i] = frobenius(orbit[i - 1], step);
  FMatrix moore(top_.get(), n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) moore.at(i, j) = orbit[(i + j) % n];
  return mat_invertible(moore);
}

FieldElem ExtensionCtx::normal_element(int n) const {
  require(n >= 1 && o_ % n == 0, errc::bad_parameters, "subextension degree must divide o");
  if (n == 1) return top_->one();
  for (i64 v = 1; v < top_->card(); ++v) {
    FieldElem w = top_->from_index(v);
    if (is_normal_element(w, n)) return w;
  }
  fail(errc::internal, "normal element search exhausted");
}

}  // namespace idemcodes
