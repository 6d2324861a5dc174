#include "bei/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bei {

int Poly::degree() const {
  int d = -1;
  for (auto& tm : t) d = std::max(d, tm.m.deg);
  return d;
}

Poly poly_zero() { return Poly{}; }

Poly poly_const(const Ring& R, uint32_t c) {
  Poly p;
  c %= R.field.p;
  if (c) p.t.push_back({c, mono_one()});
  return p;
}

Poly poly_term(const Ring& R, uint32_t c, const Monomial& m) {
  Poly p;
  c %= R.field.p;
  if (c) p.t.push_back({c, m});
  return p;
}

Poly poly_var(const Ring& R, int v) {
  if (v < 0 || v >= R.nvars) throw std::invalid_argument("poly_var: bad index");
  return poly_term(R, 1, mono_var(v));
}

Poly poly_normalize(const Ring& R, std::vector<Term> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return mono_cmp(a.m, b.m, R.nvars, ord) > 0;
  });
  Poly p;
  for (auto& tm : terms) {
    uint32_t c = tm.c % R.field.p;
    if (!p.t.empty() && p.t.back().m == tm.m) {
      p.t.back().c = R.field.add(p.t.back().c, c);
      if (p.t.back().c == 0) p.t.pop_back();
    } else if (c) {
      p.t.push_back({c, tm.m});
    }
  }
  return p;
}

Poly poly_add(const Ring& R, const Poly& a, const Poly& b, const MonomialOrder& ord) {
  Poly r;
  r.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = mono_cmp(a.t[i].m, b.t[j].m, R.nvars, ord);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      r.t.push_back(b.t[j++]);
    } else {
      uint32_t s = R.field.add(a.t[i].c, b.t[j].c);
      if (s) r.t.push_back({s, a.t[i].m});
      ++i, ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back(b.t[j]);
  return r;
}

Poly poly_neg(const Ring& R, const Poly& a) {
  Poly r = a;
  for (auto& tm : r.t) tm.c = R.field.neg(tm.c);
  return r;
}

Poly poly_sub(const Ring& R, const Poly& a, const Poly& b, const MonomialOrder& ord) {
  return poly_add(R, a, poly_neg(R, b), ord);
}

Poly poly_scale(const Ring& R, const Poly& a, uint32_t c) {
  c %= R.field.p;
  if (c == 0) return poly_zero();
  Poly r = a;
  for (auto& tm : r.t) tm.c = R.field.mul(tm.c, c);
  return r;
}

Poly poly_mul_term(const Ring& R, const Poly& a, uint32_t c, const Monomial& m) {
  c %= R.field.p;
  if (c == 0) return poly_zero();
  Poly r;
  r.t.reserve(a.t.size());
  for (auto& tm : a.t) r.t.push_back({R.field.mul(tm.c, c), mono_mul(tm.m, m)});
  return r;
}

Poly poly_mul(const Ring& R, const Poly& a, const Poly& b, const MonomialOrder& ord) {
  Poly r;
  for (auto& tm : a.t) r = poly_add(R, r, poly_mul_term(R, b, tm.c, tm.m), ord);
  return r;
}

Poly poly_monic(const Ring& R, const Poly& a) {
  if (a.is_zero() || a.lead().c == 1) return a;
  return poly_scale(R, a, R.field.inv(a.lead().c));
}

bool poly_equal(const Poly& a, const Poly& b) {
  if (a.t.size() != b.t.size()) return false;
  for (size_t i = 0; i < a.t.size(); ++i)
    if (a.t[i].c != b.t[i].c || a.t[i].m != b.t[i].m) return false;
  return true;
}

bool poly_is_homogeneous(const Poly& a) {
  for (auto& tm : a.t)
    if (tm.m.deg != a.t.front().m.deg) return false;
  return true;
}

Poly poly_reorder(const Ring& R, const Poly& a, const MonomialOrder& ord) {
  return poly_normalize(R, a.t, ord);
}

std::string poly_to_string(const Ring& R, const Poly& a) {
  if (a.is_zero()) return "0";
  std::ostringstream os;
  uint32_t half = R.field.p / 2;
  bool first = true;
  for (auto& tm : a.t) {
    uint32_t c = tm.c;
    bool negative = c > half;
    if (negative) c = R.field.p - c;
    if (first) {
      if (negative) os << "-";
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    bool printed = false;
    if (c != 1 || tm.m.is_one()) {
      os << c;
      printed = true;
    }
    for (int v = 0; v < R.nvars; ++v) {
      if (!tm.m.exp[v]) continue;
      if (printed) os << "*";
      os << R.names[v];
      if (tm.m.exp[v] > 1) os << "^" << (int)tm.m.exp[v];
      printed = true;
    }
  }
  return os.str();
}

namespace {

int find_var(const Ring& R, const std::string& name) {
  for (int v = 0; v < R.nvars; ++v)
    if (R.names[v] == name) return v;
  throw std::invalid_argument("poly_parse: unknown variable '" + name + "'");
}

}  // namespace

Poly poly_parse(const Ring& R, const std::string& text) {
  std::vector<Term> terms;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace((unsigned char)text[i])) ++i; };
  skip_ws();
  bool expect_term = true;
  int sign = 1;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    char ch = text[i];
    if (ch == '+' || ch == '-') {
      if (ch == '-') sign = -sign;
      ++i;
      expect_term = true;
      continue;
    }
    if (!expect_term) throw std::invalid_argument("poly_parse: expected '+' or '-'");
    // one term: [int][*][var[^e]]*
    long long coeff = 1;
    Monomial m = mono_one();
    bool saw_factor = false;
    while (i < text.size()) {
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      if (i < text.size() && std::isdigit((unsigned char)text[i])) {
        long long v = 0;
        while (i < text.size() && std::isdigit((unsigned char)text[i]))
          v = v * 10 + (text[i++] - '0');
        coeff *= v % R.field.p;
        coeff %= R.field.p;
        saw_factor = true;
        continue;
      }
      if (i < text.size() && (std::isalpha((unsigned char)text[i]) || text[i] == '_')) {
        size_t start = i;
        while (i < text.size() &&
               (std::isalnum((unsigned char)text[i]) || text[i] == '_'))
          ++i;
        int v = find_var(R, text.substr(start, i - start));
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = 0;
          while (i < text.size() && std::isdigit((unsigned char)text[i]))
            e = e * 10 + (text[i++] - '0');
          if (e <= 0) throw std::invalid_argument("poly_parse: bad exponent");
        }
        m = mono_mul(m, mono_var(v, e));
        saw_factor = true;
        continue;
      }
      break;
    }
    if (!saw_factor) throw std::invalid_argument("poly_parse: empty term");
    uint32_t c = (uint32_t)((coeff % R.field.p + R.field.p) % R.field.p);
    if (sign < 0) c = R.field.neg(c);
    if (c) terms.push_back({c, m});
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !terms.empty())
    throw std::invalid_argument("poly_parse: trailing operator");
  return poly_normalize(R, std::move(terms), R.order);
}

}  // namespace bei
