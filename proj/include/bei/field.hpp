#pragma once

#include <cstdint>
#include <stdexcept>

namespace bei {

// Arithmetic in GF(p) for an odd prime p. Elements live in 0..p-1.
struct PrimeField {
  uint32_t p;

  explicit PrimeField(uint32_t prime) : p(prime) {
    if (p < 3 || !is_prime(p))
      throw std::invalid_argument("PrimeField: characteristic must be an odd prime");
  }

  static bool is_prime(uint32_t m) {
    if (m < 2) return false;
    for (uint32_t d = 2; d * d <= m; ++d)
      if (m % d == 0) return false;
    return true;
  }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p ? s - p : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t)a * b % p);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
    return pow(a, p - 2);
  }
};

}  // namespace bei
