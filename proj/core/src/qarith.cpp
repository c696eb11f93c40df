#include "collapse_lab/qarith.hpp"

#include <numeric>

#include "collapse_lab/error.hpp"

namespace clab {

BigInt qnum(std::uint64_t a, std::uint64_t b) {
  if (a < 1 || b < 2) throw InvalidArgument("qnum: need a >= 1, b >= 2");
  // (b^a - 1) / (b - 1), exact
  BigInt base(static_cast<unsigned long>(b));
  BigInt num;
  mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(a));
  num -= 1;
  return BigInt(num / (base - 1));
}

static BigInt big_gcd(const BigInt& x, const BigInt& y) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

bool gcd_identities_check(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a < 1 || c < 1 || b < 2) throw InvalidArgument("gcd_identities_check: need a,c >= 1, b >= 2");
  const BigInt qa = qnum(a, b);
  const BigInt bm1(static_cast<unsigned long>(b - 1));
  const bool first = big_gcd(qa, bm1) == big_gcd(BigInt(static_cast<unsigned long>(a)), bm1);
  const bool second = big_gcd(qa, qnum(c, b)) == qnum(std::gcd(a, c), b);
  // (c)_{b^a} with b^a possibly beyond 64 bits: evaluate the geometric sum directly.
  BigInt ba;
  mpz_pow_ui(ba.get_mpz_t(), BigInt(static_cast<unsigned long>(b)).get_mpz_t(), static_cast<unsigned long>(a));
  BigInt qc_ba = 0, term = 1;
  for (std::uint64_t i = 0; i < c; ++i) {
    qc_ba += term;
    term *= ba;
  }
  const bool third = qnum(a * c, b) == qa * qc_ba;
  return first && second && third;
}

TwoAdicSplit two_adic_split(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("two_adic_split: n must be positive");
  TwoAdicSplit s{n, 0, n};
  while (s.b % 2 == 0) {
    s.b /= 2;
    ++s.a;
  }
  return s;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<PrimePower> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  if (p == 0) return PrimePower{q, 1};
  unsigned m = 0;
  while (q % p == 0) {
    q /= p;
    ++m;
  }
  if (q != 1) return std::nullopt;
  return PrimePower{p, m};
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

static void require_prime_power(std::uint64_t q) {
  if (!prime_power(q)) throw InvalidArgument("q = " + std::to_string(q) + " is not a prime power");
}

// a, c exponents of 2 in n and q-1 (c = 0 for q even)
static std::pair<unsigned, unsigned> two_adic_pair(std::uint64_t n, std::uint64_t q) {
  return {two_adic_split(n).a, q % 2 == 0 ? 0u : two_adic_split(q - 1).a};
}

bool in_G(std::uint64_t n, std::uint64_t q) {
  require_prime_power(q);
  if (n < 2) throw InvalidArgument("in_G: n must be at least 2");
  const auto [a, c] = two_adic_pair(n, q);
  if (n > 3 && n % 2 == 1) return true;
  if (n > 3 && q % 2 == 0) return true;
  if (n == 3 && q > 2) return true;
  if (n > 2 && 0 < a && a < c) return true;
  if (a == c && a > 1) return true;
  if (n == 2 && q % 4 == 1) return true;
  return false;
}

bool in_Gss(std::uint64_t n, std::uint64_t q) {
  require_prime_power(q);
  if (n <= 2) throw InvalidArgument("in_Gss: n must exceed 2");
  const auto [a, c] = two_adic_pair(n, q);
  return n % 2 == 1 || q % 2 == 0 || (0 < a && a < c) || (a == c && a > 1);
}

bool torus_order_odd(std::uint64_t n, std::uint64_t q) {
  if (n < 2) throw InvalidArgument("torus_order_odd: n must be at least 2");
  require_prime_power(q);
  const BigInt t = qnum(n, q) / BigInt(static_cast<unsigned long>(std::gcd(q - 1, n)));
  return mpz_odd_p(t.get_mpz_t()) != 0;
}

bool lemma_arithmetic_check(std::uint64_t l, std::uint64_t q) {
  if (l < 3 || l % 2 == 0) throw InvalidArgument("lemma_arithmetic_check: l must be odd and > 1");
  if (q < 2 || q % l != 1 % l) throw InvalidArgument("lemma_arithmetic_check: q must be 1 mod l");
  const BigInt l2(static_cast<unsigned long>(l * l));
  return big_gcd(l2, qnum(l, q)) == BigInt(static_cast<unsigned long>(l));
}

}  // namespace clab
