#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collapse_lab/gf.hpp"

namespace clab {

// Polynomial over GF(q), low-degree first, no trailing zeros. Zero is empty.
struct Poly {
  std::vector<Field::Elem> c;

  Poly() = default;
  Poly(std::vector<Field::Elem> coeffs);
  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  Field::Elem coeff(int k) const { return k >= 0 && k < static_cast<int>(c.size()) ? c[k] : 0; }
  Field::Elem lead() const { return c.empty() ? 0 : c.back(); }

  bool operator==(const Poly&) const = default;
  // Canonical order: degree, then coefficients from the top down.
  std::strong_ordering operator<=>(const Poly& o) const;
};

Poly poly_x(const Field& f);  // X
Poly poly_add(const Field& f, const Poly& a, const Poly& b);
Poly poly_sub(const Field& f, const Poly& a, const Poly& b);
Poly poly_mul(const Field& f, const Poly& a, const Poly& b);
Poly poly_scale(const Field& f, const Poly& a, Field::Elem s);
std::pair<Poly, Poly> poly_divmod(const Field& f, const Poly& a, const Poly& b);
Poly poly_mod(const Field& f, const Poly& a, const Poly& b);
Poly poly_gcd(const Field& f, Poly a, Poly b);  // monic (zero if both zero)
Poly poly_monic(const Field& f, const Poly& a);
Poly poly_powmod(const Field& f, Poly base, std::uint64_t e, const Poly& mod);
Field::Elem poly_eval(const Field& f, const Poly& a, Field::Elem x);

bool poly_is_irreducible(const Field& f, const Poly& a);
// Monic irreducibles of degree d in canonical order. Throws CapExceeded if q^d > cap.
std::vector<Poly> monic_irreducibles(const Field& f, int d, std::uint64_t cap = std::uint64_t{1} << 22);
// Factorization of a monic polynomial into monic irreducibles with multiplicity,
// sorted canonically. Trial division; desk-scale degrees only.
std::vector<std::pair<Poly, int>> poly_factor(const Field& f, const Poly& a);

// "X^2+3X+1", coefficients as field indices.
std::string poly_format(const Field& f, const Poly& a);
Poly poly_parse(const Field& f, std::string_view text);

}  // namespace clab
