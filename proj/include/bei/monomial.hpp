#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <stdexcept>

namespace bei {

constexpr int kMaxVars = 32;

// Exponent vector with cached total degree. The ambient variable count is
// carried by the ring; unused slots stay zero so comparisons may scan the
// whole array.
struct Monomial {
  std::array<uint8_t, kMaxVars> exp{};
  int deg = 0;

  bool is_one() const { return deg == 0; }

  bool operator==(const Monomial& o) const { return deg == o.deg && exp == o.exp; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
};

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono_var(int v, int e = 1) {
  Monomial m;
  m.exp[v] = static_cast<uint8_t>(e);
  m.deg = e;
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = a.exp[i] + b.exp[i];
    if (e > 255) throw std::overflow_error("Monomial: exponent overflow");
    r.exp[i] = static_cast<uint8_t>(e);
  }
  r.deg = a.deg + b.deg;
  return r;
}

inline bool mono_divides(const Monomial& a, const Monomial& b) {
  // a | b
  if (a.deg > b.deg) return false;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  // a / b, assuming b | a
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.exp[i] = static_cast<uint8_t>(a.exp[i] - b.exp[i]);
  r.deg = a.deg - b.deg;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  int d = 0;
  for (int i = 0; i < kMaxVars; ++i) {
    r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
    d += r.exp[i];
  }
  r.deg = d;
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.exp[i] && b.exp[i]) return false;
  return true;
}

// Monomial orders. Variables are compared in slot order, i.e. slot 0 is the
// largest variable under lex. Elim(k) eliminates the first k slots: it first
// compares total degree in those slots, then falls back to degrevlex.
struct MonomialOrder {
  enum Kind { DegRevLex, Lex, Elim } kind = DegRevLex;
  int block = 0;  // front-block size for Elim

  static MonomialOrder degrevlex() { return {DegRevLex, 0}; }
  static MonomialOrder lex() { return {Lex, 0}; }
  static MonomialOrder elim(int k) { return {Elim, k}; }

  bool operator==(const MonomialOrder& o) const { return kind == o.kind && block == o.block; }
};

// Returns +1 if a > b, -1 if a < b, 0 if equal.
inline int mono_cmp(const Monomial& a, const Monomial& b, int nvars, const MonomialOrder& ord) {
  switch (ord.kind) {
    case MonomialOrder::Lex:
      for (int i = 0; i < nvars; ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? 1 : -1;
      return 0;
    case MonomialOrder::Elim: {
      int da = 0, db = 0;
      for (int i = 0; i < ord.block; ++i) {
        da += a.exp[i];
        db += b.exp[i];
      }
      if (da != db) return da > db ? 1 : -1;
      break;  // fall through to degrevlex
    }
    case MonomialOrder::DegRevLex:
      break;
  }
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  return 0;
}

}  // namespace bei
