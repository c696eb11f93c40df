#include "collapse_lab/poly.hpp"

#include <algorithm>
#include <cctype>

#include "collapse_lab/error.hpp"

namespace clab {

namespace {
void trim(std::vector<Field::Elem>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}
}  // namespace

Poly::Poly(std::vector<Field::Elem> coeffs) : c(std::move(coeffs)) { trim(c); }

std::strong_ordering Poly::operator<=>(const Poly& o) const {
  if (auto d = degree() <=> o.degree(); d != 0) return d;
  for (int k = degree(); k >= 0; --k)
    if (auto e = c[k] <=> o.c[k]; e != 0) return e;
  return std::strong_ordering::equal;
}

Poly poly_x(const Field&) { return Poly({0, 1}); }

Poly poly_add(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Field::Elem> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(r));
}

Poly poly_sub(const Field& f, const Poly& a, const Poly& b) {
  std::vector<Field::Elem> r(std::max(a.c.size(), b.c.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return Poly(std::move(r));
}

Poly poly_mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Field::Elem> r(a.c.size() + b.c.size() - 1, 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c[i], b.c[j]));
  }
  return Poly(std::move(r));
}

Poly poly_scale(const Field& f, const Poly& a, Field::Elem s) {
  std::vector<Field::Elem> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.mul(a.c[i], s);
  return Poly(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<Field::Elem> r = a.c;
  const int db = b.degree();
  if (a.degree() < db) return {Poly{}, a};
  std::vector<Field::Elem> quo(a.degree() - db + 1, 0);
  const auto li = f.inv(b.lead());
  for (int k = a.degree(); k >= db; --k) {
    const auto coef = f.mul(r[k], li);
    if (coef == 0) continue;
    quo[k - db] = coef;
    for (int i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(coef, b.c[i]));
  }
  return {Poly(std::move(quo)), Poly(std::move(r))};
}

Poly poly_mod(const Field& f, const Poly& a, const Poly& b) { return poly_divmod(f, a, b).second; }

Poly poly_monic(const Field& f, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(f, a, f.inv(a.lead()));
}

Poly poly_gcd(const Field& f, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

Poly poly_powmod(const Field& f, Poly base, std::uint64_t e, const Poly& mod) {
  Poly r({1});
  base = poly_mod(f, base, mod);
  while (e) {
    if (e & 1) r = poly_mod(f, poly_mul(f, r, base), mod);
    base = poly_mod(f, poly_mul(f, base, base), mod);
    e >>= 1;
  }
  return poly_mod(f, r, mod);
}

Field::Elem poly_eval(const Field& f, const Poly& a, Field::Elem x) {
  Field::Elem r = 0;
  for (int k = a.degree(); k >= 0; --k) r = f.add(f.mul(r, x), a.c[k]);
  return r;
}

bool poly_is_irreducible(const Field& f, const Poly& a) {
  const int d = a.degree();
  if (d < 1) return false;
  if (d == 1) return true;
  const Poly m = poly_monic(f, a);
  Poly xqk = poly_x(f);
  for (int k = 1; k <= d / 2; ++k) {
    xqk = poly_powmod(f, xqk, f.q(), m);
    if (poly_gcd(f, m, poly_sub(f, xqk, poly_x(f))).degree() > 0) return false;
  }
  return true;
}

std::vector<Poly> monic_irreducibles(const Field& f, int d, std::uint64_t cap) {
  if (d < 1) throw InvalidArgument("monic_irreducibles: degree must be positive");
  std::uint64_t count = 1;
  for (int i = 0; i < d; ++i) {
    count *= f.q();
    if (count > cap) throw CapExceeded("monic_irreducibles: q^d exceeds enumeration cap", cap);
  }
  std::vector<Poly> out;
  std::vector<Field::Elem> c(d + 1, 0);
  c[d] = 1;
  // Counting in base q with the top non-leading coefficient most significant gives canonical order.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < d; ++i) {
      c[i] = static_cast<Field::Elem>(t % f.q());
      t /= f.q();
    }
    Poly p(c);
    if (poly_is_irreducible(f, p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::pair<Poly, int>> poly_factor(const Field& f, const Poly& a) {
  if (a.degree() < 1) throw InvalidArgument("poly_factor: degree must be positive");
  Poly rest = poly_monic(f, a);
  std::vector<std::pair<Poly, int>> out;
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    for (const auto& g : monic_irreducibles(f, d)) {
      int mult = 0;
      for (;;) {
        auto [qq, r] = poly_divmod(f, rest, g);
        if (!r.is_zero()) break;
        rest = std::move(qq);
        ++mult;
      }
      if (mult) out.emplace_back(g, mult);
      if (2 * d > rest.degree()) break;
    }
  }
  if (rest.degree() >= 1) {
    bool merged = false;
    for (auto& [g, mult] : out)
      if (g == rest) {
        ++mult;
        merged = true;
      }
    if (!merged) out.emplace_back(rest, 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string poly_format(const Field&, const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  for (int k = a.degree(); k >= 0; --k) {
    const auto c = a.c[k];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (k == 0) {
      s += std::to_string(c);
      continue;
    }
    if (c != 1) s += std::to_string(c);
    s += "X";
    if (k > 1) s += "^" + std::to_string(k);
  }
  return s;
}

Poly poly_parse(const Field& f, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw InvalidArgument("empty polynomial");
  auto fail = [&] { throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "'"); };
  std::vector<Field::Elem> c;
  std::size_t i = 0;
  auto read_int = [&](std::uint64_t& v) {
    const std::size_t start = i;
    std::uint64_t acc = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      acc = acc * 10 + static_cast<std::uint64_t>(s[i] - '0');
      if (acc > (1ull << 40)) fail();
      ++i;
    }
    if (i > start) v = acc;  // leave the default untouched when absent
    return i > start;
  };
  bool first = true;
  while (i < s.size()) {
    bool negate = false;
    if (s[i] == '+' || s[i] == '-') {
      negate = s[i] == '-';
      ++i;
    } else if (!first) {
      fail();
    }
    first = false;
    std::uint64_t coef = 1;
    const bool have_coef = read_int(coef);
    if (i < s.size() && s[i] == '*') {
      if (!have_coef) fail();
      ++i;
    }
    std::uint64_t exp = 0;
    if (i < s.size() && (s[i] == 'X' || s[i] == 'x')) {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (!read_int(exp)) fail();
      }
    } else if (!have_coef) {
      fail();
    }
    if (coef >= f.q()) throw InvalidArgument("coefficient " + std::to_string(coef) + " is not a field index of GF(" + f.name() + ")");
    if (exp > 4096) fail();
    if (c.size() <= exp) c.resize(exp + 1, 0);
    auto v = static_cast<Field::Elem>(coef);
    if (negate) v = f.neg(v);
    c[exp] = f.add(c[exp], v);
  }
  return Poly(std::move(c));
}

}  // namespace clab
