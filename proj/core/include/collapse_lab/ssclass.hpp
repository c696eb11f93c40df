#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "collapse_lab/criteria.hpp"
#include "collapse_lab/group.hpp"
#include "collapse_lab/poly.hpp"

namespace clab {

// A semisimple class of SL_n(q), named by its characteristic polynomial.
struct ClassLabel {
  int n = 0;
  std::uint64_t q = 0;
  Poly chi;
  bool irreducible = false;
  Matrix representative;  // companion, or block diagonal of companions in canonical factor order
};

// Requires chi monic of degree n with constant term (-1)^n.
ClassLabel semisimple_label(const FieldPtr& f, const Poly& chi);
// Monic irreducibles of degree n with constant term (-1)^n. Throws CapExceeded if q^n > cap.
std::vector<ClassLabel> enum_irreducible_labels(int n, std::uint64_t q, std::uint64_t cap = std::uint64_t{1} << 22);
// Every semisimple class of SL_n(q): all admissible characteristic polynomials.
std::vector<ClassLabel> enum_semisimple_labels(int n, std::uint64_t q, std::uint64_t cap = std::uint64_t{1} << 22);

bool is_semisimple_matrix(const Field& f, const Matrix& m);  // radical of chi annihilates m
// Brute force over G: elements with the label's characteristic polynomial, semisimple ones only.
std::vector<Matrix> class_membership_oracle(const GroupHandle& g, const ClassLabel& label);

// x, x^q, ..., x^{q^{n-1}} pairwise distinct in ctx. Requires n > 2 and x irreducible semisimple.
bool frobenius_powers_distinct(const GroupContext& ctx, const Matrix& x);

enum class ReductionCase {
  Diagonal,
  BlockWithEigenvalue,
  ThreeOrMoreBlocks,
  TwoBlocksFrobenius,     // B^q not in Z(SL_e) B
  TwoBlocksGcd,           // gcd(q-1, d, e) differs from d or e
  TwoBlocksNotConjugate,  // B not in Z(SL_d) O_A
  TwoEqualBlocksRoot,     // d > 2, A^q = mu A
  TwoEqualBlocksOrder2,   // d = 2, q != 3
  SL4Q3,
};
std::string to_string(ReductionCase c);

struct ReductionResult {
  ReductionCase tag = ReductionCase::Diagonal;
  Matrix normalized;  // block-diagonal representative of the class of T
  CtxPtr ctx;         // projective context of the witness
  // Decomposable family R u S in SL_n(q), when the case builds one.
  std::vector<Matrix> family_r, family_s;
  // The family's own orbits failed H = <R u S>; the witness came from a pair r in R,
  // s in S with H = <r, s>.
  bool pair_fallback = false;
  std::variant<WitnessC, WitnessD> witness;
};

// T semisimple in SL_n(q), neither central nor irreducible. Follows the case order of the
// reduction argument and returns a witness verified in PSL_n(q).
// Throws InvalidArgument on bad input and CoverageGap when no construction verifies.
ReductionResult reduction_witness(const FieldPtr& f, const Matrix& T, std::uint64_t cap = kDefaultGroupCap);

struct InventoryRow {
  int n = 2;
  std::uint64_t q = 0;
  std::string chi;  // one representative label of the PSL class
  bool irreducible = false;
  std::uint64_t order = 0;  // element order in PSL
  std::uint64_t class_size = 0;
  std::string verdict;
  std::string witness_ref;
  std::string case_tag;
  std::variant<std::monostate, WitnessC, WitnessD> witness;
};

struct ClassInventory {
  int n = 2;
  std::uint64_t q = 0;
  std::vector<InventoryRow> rows;
};

// One row per semisimple class of PSL_2(q). q in {2,3,4,5,9} is rejected.
ClassInventory psl2_semisimple_inventory(std::uint64_t q, const SearchBounds& b = {});

}  // namespace clab
