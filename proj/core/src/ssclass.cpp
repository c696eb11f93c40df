#include "collapse_lab/ssclass.hpp"

#include <algorithm>
#include <set>

#include "collapse_lab/error.hpp"
#include "collapse_lab/qarith.hpp"
#include "collapse_lab/rack.hpp"

namespace clab {

namespace {

Field::Elem sign_n(const Field& f, int n) { return n % 2 == 0 ? f.one() : f.neg(f.one()); }

bool is_zero(const Matrix& m) {
  return std::all_of(m.data().begin(), m.data().end(), [](auto e) { return e == 0; });
}

std::vector<Poly> monic_with_constant(const Field& f, int n, Field::Elem c0, std::uint64_t cap) {
  // Free coefficients c_1..c_{n-1}.
  std::uint64_t count = 1;
  for (int i = 1; i < n; ++i) {
    count *= f.q();
    if (count > cap) throw CapExceeded("semisimple labels: q^(n-1) exceeds the enumeration cap", cap, count);
  }
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<Field::Elem> c(n + 1, 0);
    c[0] = c0;
    c[n] = f.one();
    std::uint64_t r = k;
    for (int i = 1; i < n; ++i) {
      c[i] = static_cast<Field::Elem>(r % f.q());
      r /= f.q();
    }
    out.emplace_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ClassLabel semisimple_label(const FieldPtr& f, const Poly& chi) {
  const int n = chi.degree();
  if (n < 1 || chi.lead() != f->one()) throw InvalidArgument("semisimple_label: polynomial must be monic");
  if (chi.coeff(0) != sign_n(*f, n)) throw InvalidArgument("semisimple_label: constant term must be (-1)^n");
  ClassLabel l;
  l.n = n;
  l.q = f->q();
  l.chi = chi;
  const auto fac = poly_factor(*f, chi);
  l.irreducible = fac.size() == 1 && fac[0].second == 1;
  std::vector<Matrix> blocks;
  for (const auto& [p, mult] : fac)
    for (int k = 0; k < mult; ++k) blocks.push_back(companion(*f, p));
  l.representative = block_diag(blocks);
  return l;
}

std::vector<ClassLabel> enum_irreducible_labels(int n, std::uint64_t q, std::uint64_t cap) {
  const auto f = Field::of_order(q);
  if (n < 1) throw InvalidArgument("enum_irreducible_labels: n must be positive");
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) {
    qn *= q;
    if (qn > cap) throw CapExceeded("enum_irreducible_labels: q^n exceeds the enumeration cap", cap, qn);
  }
  std::vector<ClassLabel> out;
  for (const Poly& p : monic_irreducibles(*f, n, cap))
    if (p.coeff(0) == sign_n(*f, n)) out.push_back(semisimple_label(f, p));
  return out;
}

std::vector<ClassLabel> enum_semisimple_labels(int n, std::uint64_t q, std::uint64_t cap) {
  const auto f = Field::of_order(q);
  if (n < 1) throw InvalidArgument("enum_semisimple_labels: n must be positive");
  std::vector<ClassLabel> out;
  for (const Poly& p : monic_with_constant(*f, n, sign_n(*f, n), cap)) out.push_back(semisimple_label(f, p));
  return out;
}

bool is_semisimple_matrix(const Field& f, const Matrix& m) {
  Poly rad({f.one()});
  for (const auto& [p, mult] : poly_factor(f, char_poly(f, m))) rad = poly_mul(f, rad, p);
  return is_zero(poly_eval_matrix(f, rad, m));
}

std::vector<Matrix> class_membership_oracle(const GroupHandle& g, const ClassLabel& label) {
  const Field& f = g.ctx()->field();
  std::vector<Matrix> out;
  for (const Matrix& m : g.elements())
    if (char_poly(f, m) == label.chi && (label.irreducible || is_semisimple_matrix(f, m))) out.push_back(m);
  return out;
}

bool frobenius_powers_distinct(const GroupContext& ctx, const Matrix& x) {
  const int n = ctx.dim();
  if (n <= 2) throw InvalidArgument("frobenius_powers_distinct: requires n > 2");
  const Field& f = ctx.field();
  const auto fac = poly_factor(f, char_poly(f, x));
  if (fac.size() != 1 || fac[0].second != 1)
    throw InvalidArgument("frobenius_powers_distinct: element is not irreducible semisimple");
  std::set<Matrix> seen;
  Matrix y = ctx.canon(x);
  for (int i = 0; i < n; ++i) {
    if (!seen.insert(y).second) return false;
    y = ctx.pow(y, f.q());
  }
  return true;
}

std::string to_string(ReductionCase c) {
  switch (c) {
    case ReductionCase::Diagonal: return "diagonal";
    case ReductionCase::BlockWithEigenvalue: return "block-with-eigenvalue";
    case ReductionCase::ThreeOrMoreBlocks: return "three-or-more-blocks";
    case ReductionCase::TwoBlocksFrobenius: return "two-blocks-frobenius";
    case ReductionCase::TwoBlocksGcd: return "two-blocks-gcd";
    case ReductionCase::TwoBlocksNotConjugate: return "two-blocks-not-conjugate";
    case ReductionCase::TwoEqualBlocksRoot: return "two-equal-blocks-root";
    case ReductionCase::TwoEqualBlocksOrder2: return "two-equal-blocks-order2";
    case ReductionCase::SL4Q3: return "sl4-q3";
  }
  return "?";
}

ClassInventory psl2_semisimple_inventory(std::uint64_t q, const SearchBounds& b) {
  if (q == 2 || q == 3 || q == 4 || q == 5 || q == 9)
    throw InvalidArgument("psl2_semisimple_inventory: q = " + std::to_string(q) +
                          " is excluded (exceptional isomorphism or non-simple group)");
  const auto f = Field::of_order(q);
  const auto pctx = GroupContext::projective(f, 2);
  const auto gens = sl_generators(*f, 2);
  ClassInventory inv;
  inv.q = q;

  // X^2 + aX + 1 and X^2 - aX + 1 name the same PSL class.
  std::set<Field::Elem> done;
  for (Field::Elem a = 0; a < f->q(); ++a) {
    if (done.count(a)) continue;
    done.insert(a);
    done.insert(f->neg(a));
    const Poly chi({f->one(), a, f->one()});
    const ClassLabel label = semisimple_label(f, chi);
    const Matrix x = pctx->canon(label.representative);
    const bool central = pctx->is_identity(x);
    // Repeated eigenvalue, non-central: unipotent times a scalar, not semisimple.
    if (!central && !label.irreducible && poly_factor(*f, chi).size() == 1) continue;

    InventoryRow row;
    row.q = q;
    row.chi = poly_format(*f, chi);
    row.irreducible = label.irreducible;
    row.order = pctx->order(x);
    if (central) {
      row.class_size = 1;
      row.verdict = "central";
      row.case_tag = "trivial";
      inv.rows.push_back(std::move(row));
      continue;
    }
    auto cls = std::make_shared<const ConjClass>(conj_class(pctx, gens, x, b.group_cap));
    row.class_size = cls->size();

    if (row.order == 2) {
      const Rack rack = Rack::from_class(cls);
      Verdict v;
      if (q == 7) {
        v = classify(rack, b);
      } else {
        BoundsRecord rec;
        if (auto w = check_type_d(rack, b, rec)) {
          v.tag = VerdictTag::TypeD;
          v.witness = *w;
        }
        v.bounds = rec;
      }
      row.case_tag = "involutions";
      if (v.tag == VerdictTag::TypeD) {
        row.verdict = "collapses: type D";
        row.witness = std::get<WitnessD>(v.witness);
        row.witness_ref = "search";
      } else if (v.tag == VerdictTag::TypeC) {
        row.verdict = "collapses: type C";
        row.witness = std::get<WitnessC>(v.witness);
        row.witness_ref = "search";
      } else if (v.tag == VerdictTag::TypeF) {
        row.verdict = "collapses: type F";
        row.witness_ref = "search";
      } else if (v.tag == VerdictTag::NoWitnessWithinBounds && v.bounds.complete()) {
        row.verdict = "kthulhu (" + v.bounds.regime() + ")";
      } else {
        row.verdict = "no witness within bounds";
      }
      inv.rows.push_back(std::move(row));
      continue;
    }

    if (!label.irreducible) {
      const ReductionResult red = reduction_witness(f, label.representative, b.group_cap);
      row.case_tag = to_string(red.tag);
      row.witness_ref = "reduction";
      if (std::holds_alternative<WitnessC>(red.witness)) {
        row.verdict = "collapses: type C";
        row.witness = std::get<WitnessC>(red.witness);
      } else {
        row.verdict = "collapses: type D";
        row.witness = std::get<WitnessD>(red.witness);
      }
      inv.rows.push_back(std::move(row));
      continue;
    }

    // Irreducible, order > 2. Order 3 with q odd or a square sits in an A4 whose
    // 3-cycles form the cube rack; that beats the q = 3 mod 4 "open" label.
    const bool square = prime_power(q)->m % 2 == 0;
    if (row.order == 3 && (q % 2 == 1 || square)) {
      BoundsRecord rec;
      row.case_tag = "irreducible, order 3, cube subrack";
      if (auto w = check_type_c(Rack::from_class(cls), b, rec)) {
        row.verdict = "collapses: type C";
        row.witness = *w;
        row.witness_ref = "search";
      } else {
        row.verdict = "no witness within bounds";
      }
      inv.rows.push_back(std::move(row));
      continue;
    }
    if (q % 4 == 3) {
      row.verdict = "open";
      row.case_tag = "irreducible, q = 3 mod 4, possible exception";
    } else if (row.order == 3) {
      row.verdict = "kthulhu-table: sober";
      row.case_tag = "irreducible, order 3, q even and not a square";
    } else {
      row.verdict = "kthulhu-table: sober";
      row.case_tag = "irreducible, order > 3";
    }
    const AustereReport aus = austere_check(Rack::from_class(cls), b.pair_budget);
    row.witness_ref = std::string("austere ") + (aus.pass ? "pass" : "fail") + (aus.complete ? "" : " (bounded)");
    inv.rows.push_back(std::move(row));
  }
  return inv;
}

}  // namespace clab
