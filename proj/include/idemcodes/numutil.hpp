#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "idemcodes/error.hpp"

namespace idemcodes {

using i64 = std::int64_t;

inline i64 gcd_i64(i64 a, i64 b) { return std::gcd(a, b); }

/// a mod m normalized to [0, m).
inline i64 mod_i64(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline i64 mulmod_i64(i64 a, i64 b, i64 m) {
  return static_cast<i64>(static_cast<__int128>(a) * b % m);
}

inline i64 powmod_i64(i64 base, i64 exp, i64 m) {
  if (m == 1) return 0;
  i64 r = 1;
  base = mod_i64(base, m);
  while (exp > 0) {
    if (exp & 1) r = mulmod_i64(r, base, m);
    base = mulmod_i64(base, base, m);
    exp >>= 1;
  }
  return r;
}

inline i64 inv_mod(i64 a, i64 m) {
  i64 t = 0, nt = 1, r = m, nr = mod_i64(a, m);
  while (nr != 0) {
    i64 q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  require(r == 1, errc::not_coprime, "element not invertible mod " + std::to_string(m));
  return mod_i64(t, m);
}

/// Prime factorization by trial division; returns primes in increasing
/// order with multiplicity collapsed into (prime, exponent).
inline std::vector<std::pair<i64, int>> factorize(i64 n) {
  std::vector<std::pair<i64, int>> fs;
  for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      int e = 0;
      while (n % p == 0) n /= p, ++e;
      fs.emplace_back(p, e);
    }
  }
  if (n > 1) fs.emplace_back(n, 1);
  return fs;
}

inline std::vector<i64> prime_divisors(i64 n) {
  std::vector<i64> ps;
  for (auto& [p, e] : factorize(n)) ps.push_back(p);
  return ps;
}

inline bool is_prime(i64 n) {
  if (n < 2) return false;
  auto fs = factorize(n);
  return fs.size() == 1 && fs[0].second == 1;
}

/// Smallest o >= 1 with s^o = 1 mod m. Requires gcd(s, m) = 1.
inline i64 multiplicative_order_mod(i64 s, i64 m) {
  require(m >= 1, errc::bad_parameters, "modulus must be positive");
  if (m == 1) return 1;
  require(gcd_i64(mod_i64(s, m), m) == 1, errc::not_coprime,
          std::to_string(s) + " not coprime to " + std::to_string(m));
  i64 o = 1, x = mod_i64(s, m);
  while (x != 1) {
    x = mulmod_i64(x, mod_i64(s, m), m);
    ++o;
  }
  return o;
}

inline i64 ipow(i64 b, int e) {
  i64 r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace idemcodes
