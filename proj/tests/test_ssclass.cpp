#include <gtest/gtest.h>

#include <map>
#include <set>

#include "collapse_lab/error.hpp"
#include "collapse_lab/qarith.hpp"
#include "collapse_lab/ssclass.hpp"
#include "oracle.hpp"

using namespace clab;

namespace {

bool is_scalar_matrix(const Matrix& m) {
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j)
      if (i != j ? m(i, j) != 0 : m(i, i) != m(0, 0)) return false;
  return true;
}

std::vector<std::string> labels_text(const std::vector<ClassLabel>& ls, const Field& f) {
  std::vector<std::string> out;
  for (const auto& l : ls) out.push_back(poly_format(f, l.chi));
  return out;
}

bool verifies(const ReductionResult& r, const Field&) {
  const ClassRef ref = ClassRef::semisimple(r.ctx, r.normalized);
  if (const auto* c = std::get_if<WitnessC>(&r.witness)) return verify_witness(*c, ref);
  return verify_witness(std::get<WitnessD>(r.witness), ref);
}

}  // namespace

TEST(Labels, IrreducibleExamples) {
  const auto f7 = Field::create(7);
  EXPECT_EQ(labels_text(enum_irreducible_labels(2, 7), *f7),
            (std::vector<std::string>{"X^2+1", "X^2+3X+1", "X^2+4X+1"}));
  const auto f2 = Field::create(2);
  EXPECT_EQ(labels_text(enum_irreducible_labels(3, 2), *f2), (std::vector<std::string>{"X^3+X+1", "X^3+X^2+1"}));
  const auto l3 = enum_irreducible_labels(2, 3);
  const auto it = std::find_if(l3.begin(), l3.end(), [](const ClassLabel& l) { return l.chi == Poly({1, 0, 1}); });
  ASSERT_NE(it, l3.end());
  EXPECT_EQ(it->representative, (Matrix{{0, 2}, {1, 0}}));
  EXPECT_THROW(enum_irreducible_labels(3, 7, 10), CapExceeded);
}

TEST(Labels, InvariantsHold) {
  for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 7}, {2, 8}, {2, 9}, {3, 3}, {3, 4}, {4, 2}}) {
    const auto f = Field::of_order(q);
    const Field::Elem c0 = n % 2 == 0 ? 1 : f->neg(1);
    std::set<Poly> seen;
    for (const auto& l : enum_semisimple_labels(n, q)) {
      EXPECT_TRUE(seen.insert(l.chi).second);
      EXPECT_EQ(l.chi.degree(), n);
      EXPECT_EQ(l.chi.coeff(0), c0);
      EXPECT_EQ(char_poly(*f, l.representative), l.chi);
      EXPECT_EQ(det(*f, l.representative), 1u);
      EXPECT_EQ(l.irreducible, poly_is_irreducible(*f, l.chi));
    }
    for (const auto& l : enum_irreducible_labels(n, q)) EXPECT_TRUE(seen.count(l.chi));
  }
}

TEST(Labels, IrreducibleCountMatchesNecklaceFormula) {
  // Monic irreducible quadratics over GF(q) with constant term 1: (q - 1)/2 for q odd, q/2 for q even.
  for (std::uint64_t q : {3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto expected = q % 2 == 1 ? (q - 1) / 2 : q / 2;
    EXPECT_EQ(enum_irreducible_labels(2, q).size(), expected) << q;
  }
}

TEST(Labels, RejectsBadPolynomials) {
  const auto f = Field::create(7);
  EXPECT_THROW(semisimple_label(f, Poly({2, 0, 1})), InvalidArgument);
  EXPECT_THROW(semisimple_label(f, Poly({1, 0, 2})), InvalidArgument);
}

TEST(Membership, Examples) {
  {
    const auto g = sl_group(2, 7);
    const auto l = semisimple_label(Field::create(7), Poly({1, 0, 1}));
    const auto m = class_membership_oracle(g, l);
    EXPECT_EQ(m.size(), 42u);
    EXPECT_EQ(conj_class(g, l.representative).size(), 42u);
  }
  {
    const auto g = sl_group(3, 2);
    EXPECT_EQ(class_membership_oracle(g, semisimple_label(Field::create(2), Poly({1, 1, 0, 1}))).size(), 24u);
  }
  {
    const auto g = sl_group(2, 3);
    EXPECT_EQ(class_membership_oracle(g, semisimple_label(Field::create(3), Poly({1, 0, 1}))).size(), 6u);
  }
}

TEST(Membership, CharPolyFiberIsOneClass) {
  for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{2, 3}, {2, 5}, {2, 7}, {3, 2}}) {
    const auto g = sl_group(n, q);
    for (const auto& l : enum_semisimple_labels(n, q)) {
      const auto fiber = class_membership_oracle(g, l);
      const auto cls = conj_class(g, l.representative);
      ASSERT_EQ(fiber.size(), cls.size()) << poly_format(g.ctx()->field(), l.chi);
      for (const auto& m : fiber) EXPECT_TRUE(cls.contains(m));
      // Independent oracle: same characteristic values and order prime to p.
      EXPECT_EQ(oracle::semisimple_fiber(g, l.representative).size(), fiber.size());
    }
  }
}

TEST(Membership, SemisimpleMatrixTest) {
  const auto f = Field::create(5);
  EXPECT_TRUE(is_semisimple_matrix(*f, Matrix{{2, 0}, {0, 3}}));
  EXPECT_FALSE(is_semisimple_matrix(*f, Matrix{{1, 1}, {0, 1}}));
  EXPECT_TRUE(is_semisimple_matrix(*f, Matrix::identity(2)));
  const auto g = sl_group(2, 5);
  for (const auto& m : g.elements()) EXPECT_EQ(is_semisimple_matrix(*f, m), oracle::order(*f, m) % 5 != 0);
}

TEST(Frobenius, PowersDistinctOnIrreducibleClasses) {
  for (auto [n, q] : std::vector<std::pair<int, std::uint64_t>>{{3, 2}, {3, 3}, {4, 2}}) {
    const auto f = Field::of_order(q);
    const auto pctx = GroupContext::projective(f, n);
    const auto labels = enum_irreducible_labels(n, q);
    ASSERT_FALSE(labels.empty());
    for (const auto& l : labels) EXPECT_TRUE(frobenius_powers_distinct(*pctx, pctx->canon(l.representative)));
  }
  const auto f2 = Field::create(2);
  const auto pctx = GroupContext::projective(f2, 3);
  const Matrix x = companion(*f2, Poly({1, 1, 0, 1}));
  EXPECT_NE(x, pctx->pow(x, 2));
  EXPECT_NE(x, pctx->pow(x, 4));
  EXPECT_NE(pctx->pow(x, 2), pctx->pow(x, 4));
  const auto f7 = Field::create(7);
  EXPECT_THROW(frobenius_powers_distinct(*GroupContext::projective(f7, 2), companion(*f7, Poly({1, 0, 1}))),
               InvalidArgument);
}

TEST(Frobenius, ScalarTwistOnlyForXSquaredPlusOne) {
  // S^q = lambda S with lambda != 1 forces q = 3 mod 4 and chi = X^2 + 1.
  for (std::uint64_t q : {3, 5, 7, 11}) {
    const auto g = sl_group(2, q);
    const Field& f = g.ctx()->field();
    int twisted = 0;
    for (const auto& s : g.elements()) {
      if (!is_irreducible_elem(f, s)) continue;
      const Matrix ratio = mat_mul(f, mat_pow(f, s, q), mat_inv(f, s));
      if (!is_scalar_matrix(ratio) || ratio(0, 0) == 1) continue;
      ++twisted;
      EXPECT_EQ(q % 4, 3u);
      EXPECT_EQ(char_poly(f, s), Poly({1, 0, 1}));
    }
    EXPECT_EQ(twisted > 0, q % 4 == 3) << q;
  }
}

TEST(Reduction, PublishedCases) {
  {
    const auto f = Field::create(7);
    const Matrix A = companion(*f, Poly({1, 0, 1}));
    const auto r = reduction_witness(f, block_diag({A, A}));
    EXPECT_EQ(r.tag, ReductionCase::TwoEqualBlocksOrder2);
    ASSERT_TRUE(std::holds_alternative<WitnessD>(r.witness));
    const auto& w = std::get<WitnessD>(r.witness);
    EXPECT_EQ(r.ctx->order(r.ctx->mul(w.r, w.s)), 6u);
    EXPECT_TRUE(verifies(r, *f));
  }
  {
    const auto f = Field::create(3);
    const Matrix A{{0, 2}, {1, 0}};
    const auto r = reduction_witness(f, block_diag({A, A}));
    EXPECT_EQ(r.tag, ReductionCase::SL4Q3);
    ASSERT_TRUE(std::holds_alternative<WitnessD>(r.witness));
    const auto& w = std::get<WitnessD>(r.witness);
    const auto o = r.ctx->order(r.ctx->mul(w.r, w.s));
    EXPECT_TRUE(o == 6 || o == 12) << o;
    EXPECT_TRUE(verifies(r, *f));
  }
  {
    // Diagonal class in even characteristic: the family has q elements on each side.
    const auto f = Field::create(2, 3);
    const Field::Elem a = f->multiplicative_generator();
    const auto r = reduction_witness(f, Matrix{{a, 0}, {0, f->inv(a)}});
    EXPECT_EQ(r.tag, ReductionCase::Diagonal);
    ASSERT_TRUE(std::holds_alternative<WitnessC>(r.witness));
    const auto& w = std::get<WitnessC>(r.witness);
    EXPECT_GE(std::max(w.orbit_r, w.orbit_s), 8u);
    EXPECT_TRUE(verifies(r, *f));
  }
}

TEST(Reduction, RejectsBadInput) {
  const auto f = Field::create(7);
  EXPECT_THROW(reduction_witness(f, Matrix::scalar(2, 6)), InvalidArgument);
  EXPECT_THROW(reduction_witness(f, companion(*f, Poly({1, 3, 1}))), InvalidArgument);
  EXPECT_THROW(reduction_witness(f, Matrix{{1, 1}, {0, 1}}), InvalidArgument);
  EXPECT_THROW(reduction_witness(f, Matrix{{2, 0}, {0, 2}}), InvalidArgument);
}

TEST(Reduction, SmallFieldGapIsReported) {
  // PSL_2(5) is outside the covered range: diag(2, 3) gives an involution class with no witness.
  const auto f = Field::create(5);
  EXPECT_THROW(reduction_witness(f, Matrix{{2, 0}, {0, 3}}), CoverageGap);
}

TEST(Reduction, SweepEveryReducibleClassVerifies) {
  struct Case {
    int n;
    std::uint64_t q;
  };
  std::map<ReductionCase, int> seen;
  for (auto [n, q] : std::vector<Case>{{2, 7}, {2, 8}, {2, 11}, {2, 13}, {2, 16}, {3, 2}, {3, 3}, {3, 4}, {4, 2}, {4, 3}}) {
    const auto f = Field::of_order(q);
    for (const auto& l : enum_semisimple_labels(n, q)) {
      if (l.irreducible || is_scalar_matrix(l.representative)) continue;
      const auto fac = poly_factor(*f, l.chi);
      if (fac.size() == 1) continue;  // repeated eigenvalue only: scalar or not semisimple
      ReductionResult r;
      try {
        r = reduction_witness(f, l.representative);
      } catch (const CoverageGap& e) {
        ADD_FAILURE() << "n=" << n << " q=" << q << " chi=" << poly_format(*f, l.chi) << ": " << e.what();
        continue;
      }
      ++seen[r.tag];
      EXPECT_TRUE(verifies(r, *f)) << "n=" << n << " q=" << q << " chi=" << poly_format(*f, l.chi);
    }
  }
  EXPECT_GE(seen.size(), 3u);
  EXPECT_TRUE(seen.count(ReductionCase::Diagonal));
}

TEST(Inventory, Q7) {
  const auto inv = psl2_semisimple_inventory(7);
  int irreducible_big = 0, involutions = 0, central = 0;
  for (const auto& r : inv.rows) {
    if (r.irreducible && r.order > 2) {
      ++irreducible_big;
      EXPECT_EQ(r.class_size, 42u);
      EXPECT_EQ(r.verdict, "open");
    }
    if (r.order == 2) {
      ++involutions;
      EXPECT_EQ(r.class_size, 21u);
      EXPECT_EQ(r.verdict, "collapses: type C");
    }
    central += r.verdict == "central";
  }
  EXPECT_EQ(irreducible_big, 1);
  EXPECT_EQ(involutions, 1);
  EXPECT_EQ(central, 1);
}

TEST(Inventory, Q11) {
  const auto inv = psl2_semisimple_inventory(11);
  int irreducible_big = 0;
  for (const auto& r : inv.rows) {
    if (r.irreducible && r.order > 2) {
      ++irreducible_big;
      EXPECT_EQ(r.class_size, 110u);
    }
    if (r.order == 2) EXPECT_EQ(r.verdict, "collapses: type D");
    if (r.order == 3 && r.irreducible) EXPECT_EQ(r.verdict, "collapses: type C");
  }
  EXPECT_EQ(irreducible_big, 2);
}

TEST(Inventory, EvenQHasNoInvolutionRow) {
  const auto inv = psl2_semisimple_inventory(8);
  for (const auto& r : inv.rows) EXPECT_NE(r.order, 2u);
  EXPECT_FALSE(inv.rows.empty());
}

TEST(Inventory, ClassSizesAddUpToSemisimpleElements) {
  for (std::uint64_t q : {7, 8, 11, 13}) {
    const auto sl = std::make_shared<const GroupHandle>(sl_group(2, q));
    const auto psl = CentralQuotient(sl).image();
    const auto p = psl.ctx()->field().p();
    std::uint64_t semisimple = 0;
    for (const auto& m : psl.elements()) semisimple += psl.ctx()->order(m) % p != 0;
    std::uint64_t total = 0;
    std::set<std::string> chis;
    for (const auto& r : psl2_semisimple_inventory(q).rows) {
      total += r.class_size;
      EXPECT_TRUE(chis.insert(r.chi).second);
    }
    EXPECT_EQ(total, semisimple) << q;
  }
}

TEST(Inventory, ExcludedFieldsAreRejected) {
  for (std::uint64_t q : {2, 3, 4, 5, 9}) {
    try {
      psl2_semisimple_inventory(q);
      ADD_FAILURE() << q;
    } catch (const InvalidArgument& e) {
      EXPECT_EQ(std::string(e.what()).find("paper"), std::string::npos);
    }
  }
}

TEST(ClassFusion, SubfieldClassesDoNotFuse) {
  // For K = SL_n(2) inside G = PSL_n(4): O_x^G meets K exactly in O_x^K.
  for (int n : {2, 3}) {
    const auto f2 = Field::create(2), f4 = Field::create(2, 2);
    const auto K = sl_group(f2, n);
    const auto pctx = GroupContext::projective(f4, n);
    std::set<Matrix> image;
    for (const auto& k : K.elements()) image.insert(pctx->canon(k));
    std::vector<Matrix> kgens;
    for (const auto& g : K.generators()) kgens.push_back(pctx->canon(g));
    for (const auto& c : all_classes(K)) {
      const Matrix x = pctx->canon(c.base());
      const ConjClass big = conj_class(pctx, sl_generators(*f4, n), x);
      const ConjClass small = conj_class(pctx, kgens, x);
      std::size_t meet = 0;
      for (const auto& m : big.elements())
        if (image.count(m)) {
          ++meet;
          EXPECT_TRUE(small.contains(m));
        }
      EXPECT_EQ(meet, small.size());
    }
  }
}
