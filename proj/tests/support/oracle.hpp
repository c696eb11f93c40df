#pragma once

// Brute-force reference computations that avoid the library's fast paths. Used to
// cross-check results; all are exponential or cubic and meant for tiny inputs.

#include <cstdint>
#include <string>
#include <vector>

#include "collapse_lab/group.hpp"

namespace oracle {

using clab::Field;
using clab::Matrix;

// Schoolbook arithmetic of GF(p^m) from the modulus alone (no tables).
Field::Elem field_mul(const Field& f, Field::Elem a, Field::Elem b);
Field::Elem field_add(const Field& f, Field::Elem a, Field::Elem b);

// Least monic irreducible of degree m over GF(p), ordered by the base-p integer of
// its non-leading coefficients (constant term least significant). Trial division.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, unsigned m);

Matrix mul(const Field& f, const Matrix& a, const Matrix& b);
// Leibniz expansion over all permutations.
Field::Elem det(const Field& f, const Matrix& a);
std::uint64_t order(const Field& f, const Matrix& a);  // linear order, naive powering

// Values det(tI - M) for every t of `ext`, an extension of M's field with at least
// dim+1 elements in which the base field's indices embed unchanged (prime base field).
std::vector<Field::Elem> charpoly_values(const Field& ext, const Matrix& m);

// Elements of G with the same characteristic polynomial as x and order prime to p.
std::vector<Matrix> semisimple_fiber(const clab::GroupHandle& g, const Matrix& x);

// Number of (a, b, c) triples violating one of the qnum gcd identities, recomputed with GMP.
std::uint64_t gcd_identity_failures(unsigned max_ac, unsigned max_b);

}  // namespace oracle
