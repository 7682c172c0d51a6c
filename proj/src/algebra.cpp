#include "idemcodes/algebra.hpp"

namespace idemcodes {

namespace {

void check_compat(const AlgElem& a, const AlgElem& b) {
  require(a.group == b.group, errc::context_mismatch, "group mismatch");
  require(a.field && b.field && a.field->same_field(*b.field), errc::context_mismatch,
          "coefficient field mismatch");
}

}  // namespace

bool AlgElem::is_zero() const {
  for (const auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  check_compat(*this, o);
  AlgElem r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  check_compat(*this, o);
  AlgElem r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

AlgElem AlgElem::operator*(const AlgElem& o) const {
  check_compat(*this, o);
  const Group& G = *group;
  AlgElem r = alg_zero(G, *field);
  for (int x = 0; x < G.n; ++x) {
    if (coeffs[x].is_zero()) continue;
    for (int y = 0; y < G.n; ++y) {
      if (o.coeffs[y].is_zero()) continue;
      int g = G.mul(x, y);
      r.coeffs[g] += coeffs[x] * o.coeffs[y];
    }
  }
  return r;
}

AlgElem AlgElem::scaled(const FieldElem& s) const {
  AlgElem r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

std::vector<i64> AlgElem::key() const {
  std::vector<i64> k(coeffs.size());
  for (size_t i = 0; i < coeffs.size(); ++i) k[i] = field->index_of(coeffs[i]);
  return k;
}

AlgElem alg_zero(const Group& G, const FieldCtx& F) {
  AlgElem r;
  r.group = &G;
  r.field = &F;
  r.coeffs.assign(G.n, F.zero());
  return r;
}

AlgElem alg_one(const Group& G, const FieldCtx& F) { return alg_basis(G, F, 0); }

AlgElem alg_basis(const Group& G, const FieldCtx& F, int g) {
  AlgElem r = alg_zero(G, F);
  r.coeffs[g] = F.one();
  return r;
}

AlgElem average_of(const Group& G, const FieldCtx& F, const std::vector<int>& elems) {
  require(static_cast<i64>(elems.size()) % F.p() != 0, errc::characteristic_divides_order,
          "characteristic divides the averaging size");
  FieldElem s = F.from_int(static_cast<i64>(elems.size())).inv();
  AlgElem r = alg_zero(G, F);
  for (int g : elems) r.coeffs[g] += s;
  return r;
}

AlgElem tilde(const Subgroup& H, const FieldCtx& F) {
  require(static_cast<i64>(H.order()) % F.p() != 0, errc::characteristic_divides_order,
          "characteristic divides |H|");
  return average_of(*H.parent, F, H.elems);
}

AlgElem conjugate(const AlgElem& c, int g) {
  const Group& G = *c.group;
  AlgElem r = alg_zero(G, *c.field);
  for (int x = 0; x < G.n; ++x) {
    if (c.coeffs[x].is_zero()) continue;
    r.coeffs[G.conj(x, g)] = c.coeffs[x];
  }
  return r;
}

bool is_idempotent(const AlgElem& c) { return c * c == c; }

bool are_orthogonal(const AlgElem& c, const AlgElem& d) {
  return (c * d).is_zero() && (d * c).is_zero();
}

bool is_central(const AlgElem& c) {
  for (int g : c.group->gens)
    if (conjugate(c, g) != c) return false;
  return true;
}

std::string to_string(const AlgElem& c) {
  std::string s;
  for (int g = 0; g < c.group->n; ++g) {
    if (c.coeffs[g].is_zero()) continue;
    if (!s.empty()) s += "+";
    s += c.coeffs[g].str() + "*" + c.group->labels[g];
  }
  return s.empty() ? "0" : s;
}

// ---------------------------------------------------------------------------
// Rational coefficients

bool RatAlgElem::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

RatAlgElem RatAlgElem::operator+(const RatAlgElem& o) const {
  require(group == o.group, errc::context_mismatch, "group mismatch");
  RatAlgElem r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] += o.coeffs[i];
  return r;
}

RatAlgElem RatAlgElem::operator-(const RatAlgElem& o) const {
  require(group == o.group, errc::context_mismatch, "group mismatch");
  RatAlgElem r = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i] -= o.coeffs[i];
  return r;
}

RatAlgElem RatAlgElem::operator*(const RatAlgElem& o) const {
  require(group == o.group, errc::context_mismatch, "group mismatch");
  const Group& G = *group;
  RatAlgElem r = rat_zero(G);
  for (int x = 0; x < G.n; ++x) {
    if (coeffs[x] == 0) continue;
    for (int y = 0; y < G.n; ++y) {
      if (o.coeffs[y] == 0) continue;
      r.coeffs[G.mul(x, y)] += coeffs[x] * o.coeffs[y];
    }
  }
  return r;
}

RatAlgElem RatAlgElem::scaled(const Rational& s) const {
  RatAlgElem r = *this;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

RatAlgElem rat_zero(const Group& G) {
  RatAlgElem r;
  r.group = &G;
  r.coeffs.assign(G.n, Rational(0));
  return r;
}

RatAlgElem rat_one(const Group& G) {
  RatAlgElem r = rat_zero(G);
  r.coeffs[0] = 1;
  return r;
}

RatAlgElem tilde_rational(const Subgroup& H) {
  RatAlgElem r = rat_zero(*H.parent);
  Rational s(1, H.order());
  for (int g : H.elems) r.coeffs[g] += s;
  return r;
}

RatAlgElem conjugate(const RatAlgElem& c, int g) {
  const Group& G = *c.group;
  RatAlgElem r = rat_zero(G);
  for (int x = 0; x < G.n; ++x) {
    if (c.coeffs[x] == 0) continue;
    r.coeffs[G.conj(x, g)] = c.coeffs[x];
  }
  return r;
}

bool is_idempotent(const RatAlgElem& c) { return c * c == c; }

std::string to_string(const RatAlgElem& c) {
  std::string s;
  for (int g = 0; g < c.group->n; ++g) {
    if (c.coeffs[g] == 0) continue;
    if (!s.empty()) s += "+";
    s += c.coeffs[g].str() + "*" + c.group->labels[g];
  }
  return s.empty() ? "0" : s;
}

}  // namespace idemcodes
