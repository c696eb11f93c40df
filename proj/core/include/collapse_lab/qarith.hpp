#pragma once

#include <cstdint>
#include <optional>

#include <gmpxx.h>

namespace clab {

using BigInt = mpz_class;

// (a)_b = b^{a-1} + ... + b + 1
BigInt qnum(std::uint64_t a, std::uint64_t b);

// ((a)_b, b-1) = (a, b-1);  ((a)_b, (c)_b) = ((a,c))_b;  (ac)_b = (a)_b (c)_{b^a}
bool gcd_identities_check(std::uint64_t a, std::uint64_t b, std::uint64_t c);

struct TwoAdicSplit {
  std::uint64_t n;
  unsigned a;       // n = 2^a * b
  std::uint64_t b;  // odd
};
TwoAdicSplit two_adic_split(std::uint64_t n);

struct PrimePower {
  std::uint64_t p;
  unsigned m;
};
bool is_prime(std::uint64_t n);
std::optional<PrimePower> prime_power(std::uint64_t q);
std::uint64_t ipow(std::uint64_t b, unsigned e);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// Arithmetic membership sets; n = 2^a b, q = 1 + 2^c d. Throw on q not a prime power.
bool in_G(std::uint64_t n, std::uint64_t q);
bool in_Gss(std::uint64_t n, std::uint64_t q);  // requires n > 2

// (n)_q / gcd(q-1, n) is odd
bool torus_order_odd(std::uint64_t n, std::uint64_t q);

// gcd(l^2, (l)_q) == l. Requires l odd, l > 1, q = 1 mod l.
bool lemma_arithmetic_check(std::uint64_t l, std::uint64_t q);

}  // namespace clab
